#pragma once

#include "dybx/jet.hpp"

#include <map>
#include <string>
#include <vector>

namespace dybx {

/// Element of U(g)^{(x) n} for g = <X, Y | [X, Y] = Y>, kept normal ordered
/// (X before Y on each leg), with jet coefficients in one dynamical variable.
/// A monomial is (a_1, b_1, ..., a_n, b_n) meaning X^{a_1} Y^{b_1} (x) ... .
class PBWElement {
public:
    using Monomial = std::vector<int>;

    PBWElement() = default;
    PBWElement(JetShapePtr shape, int order);

    static PBWElement unit(JetShapePtr shape, int order);
    static PBWElement monomial(JetShapePtr shape, const Monomial& m, const JetScalar& c);
    static PBWElement generatorX(JetShapePtr shape, int order, int leg);
    static PBWElement generatorY(JetShapePtr shape, int order, int leg);

    const JetShapePtr& shape() const { return shape_; }
    int order() const { return order_; }
    const std::map<Monomial, JetScalar>& terms() const { return terms_; }
    JetScalar coeff(const Monomial& m) const;
    void add(const Monomial& m, const JetScalar& c);
    bool isZero() const;

    PBWElement& operator+=(const PBWElement& o);
    PBWElement& operator-=(const PBWElement& o);
    friend PBWElement operator+(PBWElement a, const PBWElement& b) { return a += b; }
    friend PBWElement operator-(PBWElement a, const PBWElement& b) { return a -= b; }
    friend PBWElement operator*(const PBWElement& a, const PBWElement& b);
    friend PBWElement operator*(const JetScalar& c, const PBWElement& a);
    friend PBWElement operator*(const Rational& c, const PBWElement& a);
    friend bool operator==(const PBWElement& a, const PBWElement& b);
    friend bool operator!=(const PBWElement& a, const PBWElement& b) { return !(a == b); }

    /// Delta on one leg (X, Y primitive), order n + 1.
    PBWElement coproduct(int leg) const;
    /// epsilon on one leg, order n - 1.
    PBWElement counit(int leg) const;
    /// New leg i carries old leg perm[i].
    PBWElement permuted(const std::vector<int>& perm) const;
    /// Old leg k goes to legs[k]; other legs get 1.
    PBWElement embed(int newOrder, const std::vector<int>& legs) const;
    /// F(lambda + sign * hbar * Y^{(leg)}) = sum_k (sign*hbar)^k / k! d^k F Y^k, with Y^k
    /// multiplied on the right of leg `leg`.
    PBWElement shiftLambda(int leg, int sign = -1) const;
    PBWElement derivative(int var = 0) const;
    /// Coefficient of hbar^k, as an element with hbar-free coefficients.
    PBWElement hbarCoefficient(int k) const;
    /// Inverse of an element equal to 1 modulo hbar.
    PBWElement inverse() const;

    std::string str() const;

private:
    void check(const PBWElement& o) const;

    JetShapePtr shape_;
    int order_ = 0;
    std::map<Monomial, JetScalar> terms_;
};

/// Y^b X^c rewritten as sum_i binom(c, i) (-b)^{c-i} X^i Y^b, returned as (i, coefficient).
std::vector<std::pair<int, Rational>> reorderYX(int b, int c);

} // namespace dybx
