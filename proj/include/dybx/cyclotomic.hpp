#pragma once

#include "dybx/rational.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace dybx {

/// Q(zeta_N) in the power basis 1, z, ..., z^(phi(N)-1), reduced modulo Phi_N.
class CyclotomicField {
public:
    static const CyclotomicField& get(int order);

    int order() const { return order_; }
    int degree() const { return phi_; }
    /// Monic integer coefficients of Phi_N, lowest degree first (length phi+1).
    const std::vector<Integer>& minimalPolynomial() const { return phiPoly_; }
    /// Reduced coordinates of z^k for 0 <= k < N.
    const std::vector<Rational>& power(int k) const;

private:
    explicit CyclotomicField(int order);

    int order_;
    int phi_;
    std::vector<Integer> phiPoly_;
    std::vector<std::vector<Rational>> powers_;
};

std::vector<Integer> cyclotomicPolynomial(int n);
int eulerPhi(int n);

/// Exact element of Q(zeta_N). Values of different order are lifted to the lcm
/// before any binary operation, so 1 over N=1 and 1 over N=3 compare equal.
class Cyclotomic {
public:
    Cyclotomic() : order_(1), coeffs_(1) {}
    Cyclotomic(const Rational& q) : order_(1), coeffs_{q} {} // NOLINT: implicit, rationals promote
    Cyclotomic(int q) : Cyclotomic(Rational(q)) {}          // NOLINT
    Cyclotomic(int order, std::vector<Rational> coeffs);

    /// zeta_N^k, k taken mod N.
    static Cyclotomic zeta(int order, long k);

    int order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool isZero() const;
    bool isOne() const;
    /// True when the value is rational (all higher coordinates vanish).
    bool isRational() const;

    Cyclotomic liftedTo(int order) const;
    Cyclotomic inverse() const;
    /// Complex conjugation, z -> z^(N-1).
    Cyclotomic conj() const;

    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
    Cyclotomic operator-() const;

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    /// Human readable form such as "1/2 - z + 3*z^2".
    std::string str() const;

private:
    int order_;
    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c);

inline bool isZero(const Cyclotomic& c) { return c.isZero(); }

} // namespace dybx
