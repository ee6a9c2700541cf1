#include "dybx/cyclotomic.hpp"

#include "dybx/errors.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

namespace dybx {

namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly& p)
{
    while (!p.empty() && sgn(p.back()) == 0)
        p.pop_back();
}

// Divides a by b (b nonzero), returns quotient; a becomes the remainder.
QPoly divmod(QPoly& a, const QPoly& b)
{
    trim(a);
    QPoly q;
    if (a.size() < b.size())
        return q;
    q.assign(a.size() - b.size() + 1, 0);
    const Rational& lead = b.back();
    while (!a.empty() && a.size() >= b.size()) {
        std::size_t shift = a.size() - b.size();
        Rational f = a.back() / lead;
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] -= f * b[i];
        a.pop_back();
        trim(a);
    }
    return q;
}

QPoly mul(const QPoly& a, const QPoly& b)
{
    if (a.empty() || b.empty())
        return {};
    QPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

QPoly sub(QPoly a, const QPoly& b)
{
    if (a.size() < b.size())
        a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] -= b[i];
    trim(a);
    return a;
}

} // namespace

int eulerPhi(int n)
{
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0)
                n /= p;
            result -= result / p;
        }
    }
    if (n > 1)
        result -= result / n;
    return result;
}

std::vector<Integer> cyclotomicPolynomial(int n)
{
    if (n < 1)
        throw DomainError("cyclotomic order must be positive");
    // x^n - 1 divided by Phi_d for every proper divisor d.
    QPoly num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0)
            continue;
        auto sub = cyclotomicPolynomial(d);
        QPoly den(sub.begin(), sub.end());
        QPoly rem = num;
        num = divmod(rem, den);
        if (!rem.empty())
            throw InvariantViolation("cyclotomic division left a remainder");
    }
    std::vector<Integer> out;
    for (auto& c : num) {
        if (c.get_den() != 1)
            throw InvariantViolation("non-integral cyclotomic coefficient");
        out.push_back(c.get_num());
    }
    return out;
}

CyclotomicField::CyclotomicField(int order)
    : order_(order), phi_(eulerPhi(order)), phiPoly_(cyclotomicPolynomial(order))
{
    // z^k for k < N by repeated multiplication by z and reduction.
    std::vector<Rational> cur(phi_, 0);
    cur[0] = 1;
    powers_.push_back(cur);
    for (int k = 1; k < order_; ++k) {
        std::vector<Rational> next(phi_, 0);
        Rational top = cur[phi_ - 1];
        for (int i = phi_ - 1; i > 0; --i)
            next[i] = cur[i - 1];
        // z^phi = -sum_{i<phi} a_i z^i
        for (int i = 0; i < phi_; ++i)
            next[i] -= top * Rational(phiPoly_[i]);
        powers_.push_back(next);
        cur = std::move(next);
    }
}

const CyclotomicField& CyclotomicField::get(int order)
{
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<CyclotomicField>> cache;
    if (order < 1)
        throw DomainError("cyclotomic order must be positive");
    std::lock_guard lock(mutex);
    auto& slot = cache[order];
    if (!slot)
        slot.reset(new CyclotomicField(order));
    return *slot;
}

const std::vector<Rational>& CyclotomicField::power(int k) const
{
    k %= order_;
    if (k < 0)
        k += order_;
    return powers_[k];
}

Cyclotomic::Cyclotomic(int order, std::vector<Rational> coeffs)
    : order_(order), coeffs_(std::move(coeffs))
{
    const auto& field = CyclotomicField::get(order);
    if (static_cast<int>(coeffs_.size()) > field.degree()) {
        // Accept unreduced input and reduce it.
        std::vector<Rational> red(field.degree(), 0);
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (sgn(coeffs_[k]) == 0)
                continue;
            const auto& pk = field.power(static_cast<int>(k));
            for (int i = 0; i < field.degree(); ++i)
                red[i] += coeffs_[k] * pk[i];
        }
        coeffs_ = std::move(red);
    }
    coeffs_.resize(field.degree(), 0);
}

Cyclotomic Cyclotomic::zeta(int order, long k)
{
    const auto& field = CyclotomicField::get(order);
    long m = k % order;
    if (m < 0)
        m += order;
    return Cyclotomic(order, field.power(static_cast<int>(m)));
}

bool Cyclotomic::isZero() const
{
    for (auto& c : coeffs_)
        if (sgn(c) != 0)
            return false;
    return true;
}

bool Cyclotomic::isRational() const
{
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (sgn(coeffs_[i]) != 0)
            return false;
    return true;
}

bool Cyclotomic::isOne() const
{
    return isRational() && coeffs_[0] == 1;
}

Cyclotomic Cyclotomic::liftedTo(int order) const
{
    if (order == order_)
        return *this;
    if (order % order_ != 0)
        throw DomainError("cannot lift Q(zeta_" + std::to_string(order_) + ") into Q(zeta_" +
                          std::to_string(order) + ")");
    const auto& field = CyclotomicField::get(order);
    int step = order / order_;
    std::vector<Rational> out(field.degree(), 0);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (sgn(coeffs_[k]) == 0)
            continue;
        const auto& pk = field.power(static_cast<int>(k) * step);
        for (int i = 0; i < field.degree(); ++i)
            out[i] += coeffs_[k] * pk[i];
    }
    Cyclotomic r;
    r.order_ = order;
    r.coeffs_ = std::move(out);
    return r;
}

namespace {
int lcm(int a, int b) { return std::lcm(a, b); }
} // namespace

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o)
{
    if (o.order_ != order_) {
        int m = lcm(order_, o.order_);
        *this = liftedTo(m);
        return *this += o.liftedTo(m);
    }
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o)
{
    if (o.order_ != order_) {
        int m = lcm(order_, o.order_);
        *this = liftedTo(m);
        return *this -= o.liftedTo(m);
    }
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o)
{
    if (o.isRational()) {
        const Rational& q = o.coeffs_[0];
        for (auto& c : coeffs_)
            c *= q;
        return *this;
    }
    if (isRational()) {
        Rational q = coeffs_[0];
        *this = o;
        for (auto& c : coeffs_)
            c *= q;
        return *this;
    }
    if (o.order_ != order_) {
        int m = lcm(order_, o.order_);
        *this = liftedTo(m);
        return *this *= o.liftedTo(m);
    }
    const auto& field = CyclotomicField::get(order_);
    int phi = field.degree();
    std::vector<Rational> prod(2 * phi - 1, 0);
    for (int i = 0; i < phi; ++i) {
        if (sgn(coeffs_[i]) == 0)
            continue;
        for (int j = 0; j < phi; ++j)
            if (sgn(o.coeffs_[j]) != 0)
                prod[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    std::vector<Rational> out(prod.begin(), prod.begin() + phi);
    for (int k = phi; k < 2 * phi - 1; ++k) {
        if (sgn(prod[k]) == 0)
            continue;
        const auto& pk = field.power(k);
        for (int i = 0; i < phi; ++i)
            out[i] += prod[k] * pk[i];
    }
    coeffs_ = std::move(out);
    return *this;
}

Cyclotomic Cyclotomic::operator-() const
{
    Cyclotomic r = *this;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

Cyclotomic Cyclotomic::inverse() const
{
    if (isZero())
        throw DomainError("inversion of zero in Q(zeta_" + std::to_string(order_) + ")");
    if (isRational())
        return Cyclotomic(order_, {Rational(1) / coeffs_[0]}).liftedTo(order_);
    // Extended Euclid: s*a + t*Phi = 1.
    const auto& field = CyclotomicField::get(order_);
    QPoly a(coeffs_.begin(), coeffs_.end());
    trim(a);
    QPoly b(field.minimalPolynomial().begin(), field.minimalPolynomial().end());
    QPoly s0{1}, s1{};
    QPoly r0 = a, r1 = b;
    while (!r1.empty()) {
        QPoly rem = r0;
        QPoly q = divmod(rem, r1);
        QPoly s2 = sub(s0, mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 is a nonzero constant since Phi is irreducible and a != 0 mod Phi.
    if (r0.size() != 1)
        throw InvariantViolation("cyclotomic gcd is not constant");
    for (auto& c : s0)
        c /= r0[0];
    return Cyclotomic(order_, s0);
}

Cyclotomic Cyclotomic::conj() const
{
    const auto& field = CyclotomicField::get(order_);
    std::vector<Rational> out(field.degree(), 0);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (sgn(coeffs_[k]) == 0)
            continue;
        const auto& pk = field.power(order_ - static_cast<int>(k));
        for (int i = 0; i < field.degree(); ++i)
            out[i] += coeffs_[k] * pk[i];
    }
    Cyclotomic r;
    r.order_ = order_;
    r.coeffs_ = std::move(out);
    return r;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b)
{
    if (a.order_ == b.order_)
        return a.coeffs_ == b.coeffs_;
    int m = std::lcm(a.order_, b.order_);
    return a.liftedTo(m).coeffs_ == b.liftedTo(m).coeffs_;
}

std::string Cyclotomic::str() const
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (sgn(c) == 0)
            continue;
        Rational mag = abs(c);
        if (first)
            os << (sgn(c) < 0 ? "-" : "");
        else
            os << (sgn(c) < 0 ? " - " : " + ");
        first = false;
        if (k == 0)
            os << mag.get_str();
        else {
            if (mag != 1)
                os << mag.get_str() << "*";
            os << "z" << order_;
            if (k > 1)
                os << "^" << k;
        }
    }
    if (first)
        os << "0";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c)
{
    return os << c.str();
}

} // namespace dybx
