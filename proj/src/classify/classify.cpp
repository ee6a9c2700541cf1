#include "dybx/classify.hpp"

#include "dybx/errors.hpp"
#include "dybx/parallel.hpp"

#include <algorithm>
#include <mutex>

namespace dybx {

bool isBijection(const Bijection& f, int size)
{
    if (static_cast<int>(f.size()) != size)
        return false;
    std::vector<char> seen(size, 0);
    for (int v : f) {
        if (v < 0 || v >= size || seen[v])
            return false;
        seen[v] = 1;
    }
    return true;
}

Bijection identityBijection(int size)
{
    Bijection f(size);
    for (int i = 0; i < size; ++i)
        f[i] = i;
    return f;
}

Bijection negationBijection(const AbelianSubgroup& a)
{
    Bijection f(a.characterCount());
    for (int i = 0; i < a.characterCount(); ++i)
        f[i] = a.negateCharacter(i);
    return f;
}

std::vector<Bijection> piOf(const DynamicalMap& x)
{
    if (x.order() != 1)
        throw DomainError("piOf expects an order-1 map");
    const auto& A = *x.domain();
    auto P = primitiveIdempotents(A);
    auto xinv = x.inverse();
    std::vector<Bijection> out(x.size());
    for (int l = 0; l < x.size(); ++l) {
        Bijection s(A.characterCount(), -1);
        for (int mu = 0; mu < A.characterCount(); ++mu) {
            auto c = x[l] * P[mu] * xinv[l];
            for (int nu = 0; nu < A.characterCount(); ++nu)
                if (c == P[nu]) {
                    s[mu] = nu;
                    break;
                }
            if (s[mu] < 0)
                throw DomainError("x(lambda=" + std::to_string(l) + ") does not map P_" + std::to_string(mu) +
                                  " to a primitive idempotent");
        }
        if (!isBijection(s, A.characterCount()))
            throw InvariantViolation("conjugation does not permute the idempotents");
        out[l] = s;
    }
    return out;
}

namespace {

Bijection invert(const Bijection& s)
{
    Bijection r(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        r[s[i]] = static_cast<int>(i);
    return r;
}

std::string pairName(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

} // namespace

Report checkRealizes(const DynamicalMap& x, const Bijection& f)
{
    const auto& A = *x.domain();
    if (!isBijection(f, A.characterCount()))
        throw DomainError("f is not a bijection of A*");
    auto sigma = piOf(x);
    std::vector<Bijection> F;
    for (auto& s : sigma)
        F.push_back(invert(s));
    Report rep;
    rep.title = "realizes f";
    rep.add("identity");
    rep.add("recursion");
    const int n = A.characterCount();
    for (int l = 0; l < n; ++l)
        for (int mu = 0; mu < n; ++mu) {
            int want = A.subtractCharacters(f[l], f[A.subtractCharacters(l, mu)]);
            if (F[l][mu] != want)
                rep.checks[0].fail("lambda,mu=" + pairName(l, mu),
                                   std::to_string(F[l][mu]) + " != " + std::to_string(want));
        }
    for (int l = 0; l < n; ++l)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                int lhs = F[l][A.addCharacters(a, b)];
                int rhs = A.addCharacters(F[l][b], F[A.subtractCharacters(l, b)][a]);
                if (lhs != rhs)
                    rep.checks[1].fail("lambda=" + std::to_string(l) + " a,b=" + pairName(a, b),
                                       std::to_string(lhs) + " != " + std::to_string(rhs));
            }
    return rep;
}

Bijection recoverF(const DynamicalMap& x)
{
    const auto& A = *x.domain();
    auto sigma = piOf(x);
    const int n = A.characterCount();
    Bijection f(n);
    for (int l = 0; l < n; ++l)
        f[l] = invert(sigma[l])[l];
    if (f[0] != 0)
        throw DomainError("F_0(0) != 0: x is not a vertex-IRF transformation of 1 (x) 1");
    if (!isBijection(f, n))
        throw DomainError("recovered f is not bijective");
    auto rep = checkRealizes(x, f);
    if (!rep.pass())
        throw DomainError("x does not realize any f: " + (rep.checks[1].pass ? rep.checks[0] : rep.checks[1]).findings[0].where);
    return f;
}

std::vector<Cyclotomic> inducedCharacter(const AbelianSubgroup& a, int nu)
{
    const auto& G = a.group();
    std::vector<Cyclotomic> out(G.size());
    Cyclotomic scale(Rational(1, a.size()));
    for (int g = 0; g < G.size(); ++g) {
        Cyclotomic acc;
        for (int s = 0; s < G.size(); ++s) {
            int c = G.conjugate(G.inv(s), g);
            if (a.contains(c))
                acc += a.characterValue(nu, c);
        }
        out[g] = acc * scale;
    }
    return out;
}

std::vector<Bijection> realizableFs(const AbelianSubgroup& a)
{
    const int n = a.characterCount();
    if (n > 8)
        throw DomainError("realizableFs is limited to |A*| <= 8 (got " + std::to_string(n) + ")");
    // Characters grouped by their induced class function.
    std::vector<std::vector<Cyclotomic>> ind;
    std::vector<int> cls(n);
    for (int nu = 0; nu < n; ++nu) {
        auto c = inducedCharacter(a, nu);
        auto it = std::find(ind.begin(), ind.end(), c);
        cls[nu] = static_cast<int>(it - ind.begin());
        if (it == ind.end())
            ind.push_back(std::move(c));
    }
    std::vector<Bijection> all;
    Bijection f = identityBijection(n);
    do
        all.push_back(f);
    while (std::next_permutation(f.begin(), f.end()));
    std::vector<char> ok(all.size(), 0);
    parallelFor(static_cast<int>(all.size()), [&](int i) {
        const auto& g = all[i];
        for (int l = 0; l < n; ++l)
            for (int m = 0; m < n; ++m)
                if (cls[a.subtractCharacters(l, m)] != cls[a.subtractCharacters(g[l], g[m])])
                    return;
        ok[i] = 1;
    });
    std::vector<Bijection> out;
    for (std::size_t i = 0; i < all.size(); ++i)
        if (ok[i])
            out.push_back(all[i]);
    return out;
}

std::optional<std::pair<int, int>> checkAdCondition(const AbelianSubgroup& a, const TwoVarGroupFunction& g,
                                                     const Bijection& f)
{
    const int n = a.characterCount();
    for (int l = 0; l < n; ++l)
        for (int m = 0; m < n; ++m) {
            int el = g.at(l).at(m);
            if (!a.isNormalizedBy(el) ||
                a.conjugateCharacter(a.subtractCharacters(l, m), el) != a.subtractCharacters(f[l], f[m]))
                return std::make_pair(l, m);
        }
    return std::nullopt;
}

std::optional<TwoVarGroupFunction> findGroupWitness(const AbelianSubgroup& a, const Bijection& f)
{
    const auto& G = a.group();
    std::vector<int> normalizer;
    for (int s = 0; s < G.size(); ++s)
        if (a.isNormalizedBy(s))
            normalizer.push_back(s);
    const int n = a.characterCount();
    TwoVarGroupFunction g(n, std::vector<int>(n, -1));
    for (int l = 0; l < n; ++l)
        for (int m = 0; m < n; ++m) {
            int want = a.subtractCharacters(f[l], f[m]);
            int have = a.subtractCharacters(l, m);
            for (int s : normalizer)
                if (a.conjugateCharacter(have, s) == want) {
                    g[l][m] = s;
                    break;
                }
            if (g[l][m] < 0)
                return std::nullopt;
        }
    return g;
}

QuasiGrouplikeResult quasiGrouplike(SubgroupPtr a, const TwoVarGroupFunction& g, const Bijection& f)
{
    const auto& A = *a;
    const int n = A.characterCount();
    if (!isBijection(f, n))
        throw DomainError("f is not a bijection of A*");
    if (static_cast<int>(g.size()) != n)
        throw DomainError("g table has wrong size");
    if (auto bad = checkAdCondition(A, g, f))
        throw DomainError("Ad condition fails at (lambda,mu)=" + pairName(bad->first, bad->second));
    auto G = a->parent();
    auto P = primitiveIdempotents(A);
    auto elem = [&](int e) { return TensorElement::basis(G, {e}); };
    QuasiGrouplikeResult res;
    res.x = DynamicalMap(a, 1);
    for (int l = 0; l < n; ++l) {
        TensorElement v(G, 1);
        for (int mu = 0; mu < n; ++mu)
            v += elem(g[l][A.subtractCharacters(l, mu)]) * P[mu];
        res.x.set(l, v);
    }
    // Normal ordering: h^{(1)}, h^{(2)} become the weights (mu, nu) of P_mu (x) P_nu.
    res.twist = DynamicalMap(a, 2);
    for (int l = 0; l < n; ++l) {
        TensorElement acc(G, 2);
        for (int mu = 0; mu < n; ++mu)
            for (int nu = 0; nu < n; ++nu) {
                int lmn = A.subtractCharacters(A.subtractCharacters(l, mu), nu);
                int ln = A.subtractCharacters(l, nu);
                const auto& Gr = *G;
                int left = Gr.mul(g[l][lmn], Gr.inv(g[ln][lmn]));
                int right = Gr.mul(g[l][lmn], Gr.inv(g[l][ln]));
                acc += TensorElement::basis(G, {left, right}) * P[mu].tensor(P[nu]);
            }
        res.twist.set(l, acc);
    }
    res.twistFromXMap = twistFromX(res.x).twist;
    res.agree = res.twist == res.twistFromXMap;
    return res;
}

} // namespace dybx
