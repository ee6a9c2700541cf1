#pragma once

#include "dybx/dyntwist.hpp"

#include <optional>
#include <vector>

namespace dybx {

/// Permutation of A* given as a table over character indices.
using Bijection = std::vector<int>;
/// g(lambda, mu) as a table [lambda][mu] of group element indices.
using TwoVarGroupFunction = std::vector<std::vector<int>>;

bool isBijection(const Bijection& f, int size);
Bijection identityBijection(int size);
Bijection negationBijection(const AbelianSubgroup& a);

/// sigma_lambda with x(lambda) P_mu x(lambda)^{-1} = P_{sigma_lambda(mu)}.
/// Throws DomainError when some x(lambda) does not normalize C[A].
std::vector<Bijection> piOf(const DynamicalMap& x);

/// Checks pi(x(lambda))^{-1}(mu) = f(lambda) - f(lambda - mu) and the recursion
/// F_lambda(a + b) = F_lambda(b) + F_{lambda - b}(a) with F_lambda = sigma_lambda^{-1}.
Report checkRealizes(const DynamicalMap& x, const Bijection& f);

/// f(lambda) = F_lambda(lambda), normalized by f(0) = 0. Throws DomainError when the
/// recursion fails (x is not a vertex-IRF transformation of 1 (x) 1).
Bijection recoverF(const DynamicalMap& x);

/// Frobenius formula: Ind nu(g) = |A|^{-1} sum over s with s^{-1} g s in A of nu(s^{-1} g s).
std::vector<Cyclotomic> inducedCharacter(const AbelianSubgroup& a, int nu);

/// Bijections f with Ind(lambda - mu) = Ind(f(lambda) - f(mu)) for all pairs.
/// Guarded at |A*| <= 8.
std::vector<Bijection> realizableFs(const AbelianSubgroup& a);

/// (lambda - mu) o Ad_g = f(lambda) - f(mu); returns the first failing pair.
std::optional<std::pair<int, int>> checkAdCondition(const AbelianSubgroup& a, const TwoVarGroupFunction& g,
                                                     const Bijection& f);

/// A group-valued g satisfying the Ad condition, searched pointwise; nullopt when
/// some pair has no witness (which does not by itself mean f is not realizable).
std::optional<TwoVarGroupFunction> findGroupWitness(const AbelianSubgroup& a, const Bijection& f);

struct QuasiGrouplikeResult {
    DynamicalMap x;
    DynamicalMap twist;          // normal-ordered formula
    DynamicalMap twistFromXMap;  // twistFromX(x)
    bool agree = false;
};

/// x(lambda) = sum_mu g(lambda, lambda - mu) P_mu, and J by the normal-ordered
/// formula and by twistFromX. Throws DomainError when the Ad condition fails.
QuasiGrouplikeResult quasiGrouplike(SubgroupPtr a, const TwoVarGroupFunction& g, const Bijection& f);

} // namespace dybx
