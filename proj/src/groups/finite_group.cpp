#include "dybx/group.hpp"

#include "dybx/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace dybx {

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> cayley, std::vector<std::string> labels)
    : size_(static_cast<int>(cayley.size())), labels_(std::move(labels))
{
    if (size_ == 0)
        throw ParseError("empty Cayley table");
    table_.reserve(size_ * size_);
    for (auto& row : cayley) {
        if (static_cast<int>(row.size()) != size_)
            throw ParseError("Cayley table is not square");
        for (int v : row) {
            if (v < 0 || v >= size_)
                throw ParseError("Cayley table entry out of range");
            table_.push_back(v);
        }
    }
    for (int e = 0; e < size_ && identity_ < 0; ++e) {
        bool ok = true;
        for (int g = 0; g < size_ && ok; ++g)
            ok = mul(e, g) == g && mul(g, e) == g;
        if (ok)
            identity_ = e;
    }
    if (identity_ < 0)
        throw ParseError("Cayley table has no identity");
    inverse_.assign(size_, -1);
    for (int g = 0; g < size_; ++g)
        for (int h = 0; h < size_; ++h)
            if (mul(g, h) == identity_ && mul(h, g) == identity_)
                inverse_[g] = h;
    for (int g = 0; g < size_; ++g)
        if (inverse_[g] < 0)
            throw ParseError("element " + std::to_string(g) + " has no inverse");
    for (int a = 0; a < size_; ++a)
        for (int b = 0; b < size_; ++b)
            for (int c = 0; c < size_; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw ParseError("Cayley table is not associative");
    if (labels_.empty())
        for (int g = 0; g < size_; ++g)
            labels_.push_back("g" + std::to_string(g));
    if (static_cast<int>(labels_.size()) != size_)
        throw ParseError("label count does not match group size");
}

int FiniteGroup::order(int a) const
{
    int k = 1;
    for (int x = a; x != identity_; x = mul(x, a))
        ++k;
    return k;
}

std::vector<std::vector<int>> FiniteGroup::cayley() const
{
    std::vector<std::vector<int>> out(size_, std::vector<int>(size_));
    for (int a = 0; a < size_; ++a)
        for (int b = 0; b < size_; ++b)
            out[a][b] = mul(a, b);
    return out;
}

int FiniteGroup::find(const std::string& label) const
{
    auto it = std::find(labels_.begin(), labels_.end(), label);
    return it == labels_.end() ? -1 : static_cast<int>(it - labels_.begin());
}

namespace {

std::vector<int> generated(const FiniteGroup& g, const std::vector<int>& gens)
{
    std::vector<char> in(g.size(), 0);
    std::vector<int> out{g.identity()};
    in[g.identity()] = 1;
    for (std::size_t i = 0; i < out.size(); ++i)
        for (int s : gens) {
            int p = g.mul(out[i], s);
            if (!in[p]) {
                in[p] = 1;
                out.push_back(p);
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

AbelianSubgroup::AbelianSubgroup(GroupPtr parent, std::vector<int> elements)
    : parent_(std::move(parent)), elements_(std::move(elements))
{
    const auto& G = *parent_;
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    position_.assign(G.size(), -1);
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        int g = elements_[i];
        if (g < 0 || g >= G.size())
            throw ParseError("subgroup element out of range");
        position_[g] = static_cast<int>(i);
    }
    if (!contains(G.identity()))
        throw ParseError("subgroup does not contain the identity");
    for (int a : elements_) {
        if (!contains(G.inv(a)))
            throw ParseError("subgroup is not closed under inverses");
        for (int b : elements_) {
            if (!contains(G.mul(a, b)))
                throw ParseError("subgroup is not closed under products");
            if (G.mul(a, b) != G.mul(b, a))
                throw ParseError("subgroup is not abelian");
        }
    }
    // Cyclic decomposition by backtracking: grow a direct product one cyclic
    // factor at a time, largest orders first.
    std::vector<int> cands = elements_;
    std::stable_sort(cands.begin(), cands.end(), [&](int a, int b) { return G.order(a) > G.order(b); });
    std::vector<int> chosen;
    std::function<bool(std::size_t)> search = [&](std::size_t have) -> bool {
        if (static_cast<int>(have) == size())
            return true;
        for (int c : cands) {
            int oc = G.order(c);
            if (oc == 1)
                continue;
            auto next = chosen;
            next.push_back(c);
            auto span = generated(G, next);
            if (span.size() != have * static_cast<std::size_t>(oc))
                continue;
            chosen.push_back(c);
            if (search(span.size()))
                return true;
            chosen.pop_back();
        }
        return false;
    };
    if (!search(1))
        throw InvariantViolation("no cyclic decomposition found");
    generators_ = chosen;
    for (int g : generators_)
        orders_.push_back(G.order(g));
    exponent_ = 1;
    for (int o : orders_)
        exponent_ = std::lcm(exponent_, o);
    // Coordinates of every element.
    coords_.assign(size(), {});
    std::vector<int> e(generators_.size(), 0);
    std::function<void(std::size_t, int)> walk = [&](std::size_t i, int acc) {
        if (i == generators_.size()) {
            coords_[position_[acc]] = e;
            return;
        }
        int x = acc;
        for (int k = 0; k < orders_[i]; ++k) {
            e[i] = k;
            walk(i + 1, x);
            x = G.mul(x, generators_[i]);
        }
        e[i] = 0;
    };
    walk(0, G.identity());
}

std::vector<int> AbelianSubgroup::characterTuple(int chi) const
{
    std::vector<int> t(orders_.size());
    for (int i = static_cast<int>(orders_.size()) - 1; i >= 0; --i) {
        t[i] = chi % orders_[i];
        chi /= orders_[i];
    }
    return t;
}

int AbelianSubgroup::characterIndex(const std::vector<int>& tuple) const
{
    if (tuple.size() != orders_.size())
        throw ParseError("character tuple has wrong length (expected " + std::to_string(orders_.size()) + ")");
    int idx = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        int k = tuple[i] % orders_[i];
        if (k < 0)
            k += orders_[i];
        idx = idx * orders_[i] + k;
    }
    return idx;
}

int AbelianSubgroup::addCharacters(int a, int b) const
{
    auto ta = characterTuple(a), tb = characterTuple(b);
    for (std::size_t i = 0; i < ta.size(); ++i)
        ta[i] += tb[i];
    return characterIndex(ta);
}

int AbelianSubgroup::negateCharacter(int a) const
{
    auto t = characterTuple(a);
    for (auto& k : t)
        k = -k;
    return characterIndex(t);
}

int AbelianSubgroup::characterExponent(int chi, int g) const
{
    int p = position_[g];
    if (p < 0)
        throw DomainError("character evaluated outside the subgroup");
    auto t = characterTuple(chi);
    long e = 0;
    for (std::size_t i = 0; i < t.size(); ++i)
        e += static_cast<long>(t[i]) * coords_[p][i] * (exponent_ / orders_[i]);
    return static_cast<int>(e % exponent_);
}

Cyclotomic AbelianSubgroup::characterValue(int chi, int g) const
{
    return Cyclotomic::zeta(exponent_, characterExponent(chi, g));
}

bool AbelianSubgroup::isNormalizedBy(int n) const
{
    for (int a : elements_)
        if (!contains(parent_->conjugate(n, a)))
            return false;
    return true;
}

int AbelianSubgroup::conjugateCharacter(int chi, int n) const
{
    if (!isNormalizedBy(n))
        throw DomainError("element does not normalize the subgroup");
    std::vector<int> tuple(generators_.size());
    // (chi o Ad_n)(g_i) read off as an exponent of zeta_{n_i}.
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        int e = characterExponent(chi, parent_->conjugate(n, generators_[i]));
        tuple[i] = e / (exponent_ / orders_[i]);
    }
    return characterIndex(tuple);
}

int AbelianSubgroup::restrictCharacter(int chi, const AbelianSubgroup& sub) const
{
    for (int b : sub.elements())
        if (!contains(b))
            throw DomainError("restriction target is not a subgroup of A");
    for (int psi = 0; psi < sub.characterCount(); ++psi) {
        bool ok = true;
        for (int b : sub.elements())
            if (sub.characterValue(psi, b) != characterValue(chi, b)) {
                ok = false;
                break;
            }
        if (ok)
            return psi;
    }
    throw InvariantViolation("restricted character not found");
}

std::vector<Character> characters(const AbelianSubgroup& a)
{
    std::vector<Character> out;
    for (int chi = 0; chi < a.characterCount(); ++chi) {
        Character c{chi, a.characterTuple(chi), {}};
        for (int g : a.elements())
            c.exponents.push_back(a.characterExponent(chi, g));
        out.push_back(std::move(c));
    }
    return out;
}

} // namespace dybx
