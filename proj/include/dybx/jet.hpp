#pragma once

#include "dybx/rational.hpp"

#include <memory>
#include <string>
#include <vector>

namespace dybx {

/// Monomial layout shared by every jet of a given (vars, degCap, hbarCap).
class JetShape {
public:
    static std::shared_ptr<const JetShape> get(int vars, int degCap, int hbarCap);

    int vars() const { return vars_; }
    int degCap() const { return degCap_; }
    int hbarCap() const { return hbarCap_; }
    int monomialCount() const { return static_cast<int>(monomials_.size()); }
    const std::vector<int>& monomial(int m) const { return monomials_[m]; }
    int degree(int m) const { return degrees_[m]; }
    /// Index of alpha, or -1 when |alpha| exceeds the cap.
    int indexOf(const std::vector<int>& alpha) const;
    /// Index of the product monomial, or -1 when it is truncated away.
    int product(int a, int b) const { return mulTable_[a * monomialCount() + b]; }
    /// d/dt_var of monomial m: target index (-1 for constants) and integer factor.
    std::pair<int, int> derivative(int var, int m) const { return deriv_[var][m]; }
    /// Index of t_var * monomial m, or -1 when truncated.
    int raise(int var, int m) const { return raise_[var][m]; }

    bool operator==(const JetShape& o) const
    {
        return vars_ == o.vars_ && degCap_ == o.degCap_ && hbarCap_ == o.hbarCap_;
    }

private:
    JetShape(int vars, int degCap, int hbarCap);

    int vars_, degCap_, hbarCap_;
    std::vector<std::vector<int>> monomials_;
    std::vector<int> degrees_;
    std::vector<int> mulTable_;
    std::vector<std::vector<std::pair<int, int>>> deriv_;
    std::vector<std::vector<int>> raise_;
};

using JetShapePtr = std::shared_ptr<const JetShape>;

/// Truncated power series in t_1..t_n (total degree <= D) and hbar (order <= K)
/// with rational coefficients.
///
/// Each hbar order k carries an effective t-degree eff[k] <= D: coefficients of
/// hbar^k t^alpha with |alpha| > eff[k] are unknown and stored as zero. Derivatives
/// lower eff by one, products take the minimum over contributing orders, and
/// comparisons only look at the certified part.
class JetScalar {
public:
    JetScalar() = default;
    explicit JetScalar(JetShapePtr shape);
    JetScalar(JetShapePtr shape, const Rational& constant);

    static JetScalar variable(JetShapePtr shape, int var);
    static JetScalar hbar(JetShapePtr shape);
    /// Single term c * t^alpha * hbar^k (exact).
    static JetScalar monomial(JetShapePtr shape, const std::vector<int>& alpha, int k, const Rational& c);

    const JetShapePtr& shape() const { return shape_; }
    bool valid() const { return shape_ != nullptr; }

    const Rational& coeff(int k, int m) const { return c_[k * stride() + m]; }
    Rational coeff(const std::vector<int>& alpha, int k) const;
    void setCoeff(const std::vector<int>& alpha, int k, const Rational& v);
    void addToCoeff(int k, int m, const Rational& v);

    int effDegree(int k) const { return eff_[k]; }
    /// Smallest effective degree over all hbar orders.
    int minEffDegree() const;
    void capEffDegree(int k, int deg);
    /// Forget precision: every order certified only up to deg.
    void capAllEffDegree(int deg);

    const Rational& constantTerm() const { return c_[0]; }
    bool isZero() const;
    bool isExactlyOne() const;
    /// Component of hbar^k as a jet at hbar order 0 (same shape).
    JetScalar hbarCoefficient(int k) const;
    /// Multiply by hbar^j, dropping orders above the cap.
    JetScalar timesHbar(int j) const;
    /// True when every hbar order above 0 vanishes.
    bool isHbarFree() const;

    JetScalar derivative(int var) const;
    JetScalar derivative(const std::vector<int>& alpha) const;
    /// Antiderivative in t_var with zero constant of integration.
    JetScalar integral(int var) const;

    JetScalar inverse() const;
    JetScalar log() const;
    JetScalar exp() const;

    JetScalar& operator+=(const JetScalar& o);
    JetScalar& operator-=(const JetScalar& o);
    JetScalar& operator*=(const JetScalar& o);
    JetScalar& operator*=(const Rational& q);
    friend JetScalar operator+(JetScalar a, const JetScalar& b) { return a += b; }
    friend JetScalar operator-(JetScalar a, const JetScalar& b) { return a -= b; }
    friend JetScalar operator*(const JetScalar& a, const JetScalar& b);
    friend JetScalar operator*(JetScalar a, const Rational& q) { return a *= q; }
    friend JetScalar operator*(const Rational& q, JetScalar a) { return a *= q; }
    JetScalar operator-() const;

    /// Equality on the commonly certified part.
    friend bool operator==(const JetScalar& a, const JetScalar& b);
    friend bool operator!=(const JetScalar& a, const JetScalar& b) { return !(a == b); }

    std::string str() const;

    /// Nonzero entries as (alpha, k, coefficient) in a deterministic order.
    struct Term {
        std::vector<int> alpha;
        int k;
        Rational c;
    };
    std::vector<Term> terms() const;

private:
    int stride() const { return shape_->monomialCount(); }
    void checkShape(const JetScalar& o) const;
    void truncateToEff();

    JetShapePtr shape_;
    std::vector<Rational> c_;
    std::vector<int> eff_;
};

inline bool isZero(const JetScalar& j) { return j.isZero(); }

/// Jet of d^m f / dt^m for a univariate polynomial f given by Taylor coefficients
/// at the base point (coeffs[i] multiplies t^i). `knownDegree` < 0 means f is an
/// exact polynomial; otherwise coefficients above knownDegree are unknown.
JetScalar polynomialDerivativeJet(const JetShapePtr& shape, const std::vector<Rational>& coeffs,
                                  int knownDegree, int m, int var = 0);

} // namespace dybx
