#include "dybx/builtin.hpp"

#include "dybx/errors.hpp"

#include <algorithm>
#include <map>
#include <regex>

namespace dybx {

namespace {

std::string cycleLabel(const std::vector<int>& p)
{
    std::string out;
    std::vector<char> seen(p.size(), 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == static_cast<int>(i))
            continue;
        out += "(";
        for (std::size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = 1;
            out += std::to_string(j + 1);
        }
        out += ")";
    }
    return out.empty() ? "e" : out;
}

} // namespace

GroupPtr symmetricGroup(int n)
{
    if (n < 1 || n > 5)
        throw DomainError("symmetric group size out of supported range");
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i)
        p[i] = i;
    do
        perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < perms.size(); ++i)
        index[perms[i]] = static_cast<int>(i);
    int m = static_cast<int>(perms.size());
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    std::vector<int> q(n);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            // (ab)(i) = a(b(i))
            for (int i = 0; i < n; ++i)
                q[i] = perms[a][perms[b][i]];
            table[a][b] = index[q];
        }
    std::vector<std::string> labels;
    for (auto& x : perms)
        labels.push_back(cycleLabel(x));
    return std::make_shared<FiniteGroup>(table, labels);
}

GroupPtr dihedralGroup(int n)
{
    if (n < 1)
        throw DomainError("dihedral group needs n >= 1");
    int m = 2 * n;
    auto idx = [n](int k, int j) { return j * n + ((k % n) + n) % n; };
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            int ka = a % n, ja = a / n, kb = b % n, jb = b / n;
            // r^ka s^ja r^kb s^jb = r^(ka + (-1)^ja kb) s^(ja + jb)
            table[a][b] = idx(ka + (ja ? -kb : kb), (ja + jb) % 2);
        }
    std::vector<std::string> labels;
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < n; ++k) {
            std::string l = k == 0 ? "" : (k == 1 ? "r" : "r^" + std::to_string(k));
            if (j)
                l += "s";
            labels.push_back(l.empty() ? "e" : l);
        }
    return std::make_shared<FiniteGroup>(table, labels);
}

GroupPtr cyclicGroup(int n)
{
    if (n < 1)
        throw DomainError("cyclic group needs n >= 1");
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    std::vector<std::string> labels;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            table[a][b] = (a + b) % n;
        labels.push_back(a == 0 ? "e" : (a == 1 ? "c" : "c^" + std::to_string(a)));
    }
    return std::make_shared<FiniteGroup>(table, labels);
}

GroupPtr directProduct(const FiniteGroup& a, const FiniteGroup& b)
{
    int m = a.size() * b.size();
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    std::vector<std::string> labels;
    for (int x = 0; x < m; ++x) {
        for (int y = 0; y < m; ++y)
            table[x][y] = a.mul(x / b.size(), y / b.size()) * b.size() + b.mul(x % b.size(), y % b.size());
        labels.push_back("(" + a.label(x / b.size()) + "," + b.label(x % b.size()) + ")");
    }
    return std::make_shared<FiniteGroup>(table, labels);
}

SubgroupPtr subgroupGeneratedBy(GroupPtr g, const std::vector<int>& generators)
{
    std::vector<int> elems{g->identity()};
    std::vector<char> in(g->size(), 0);
    in[g->identity()] = 1;
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (int s : generators) {
            int p = g->mul(elems[i], s);
            if (!in[p]) {
                in[p] = 1;
                elems.push_back(p);
            }
        }
    return std::make_shared<AbelianSubgroup>(std::move(g), elems);
}

GroupPtr builtinGroup(const std::string& name)
{
    std::smatch m;
    static const std::regex sym("S([1-5])"), dih("D([1-9][0-9]*)"), cyc("Z([1-9][0-9]*)");
    if (std::regex_match(name, m, sym))
        return symmetricGroup(std::stoi(m[1]));
    if (std::regex_match(name, m, dih))
        return dihedralGroup(std::stoi(m[1]));
    if (std::regex_match(name, m, cyc))
        return cyclicGroup(std::stoi(m[1]));
    if (name == "Z2xZ2" || name == "V4")
        return directProduct(*cyclicGroup(2), *cyclicGroup(2));
    return nullptr;
}

} // namespace dybx
