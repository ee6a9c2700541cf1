#include "dybx/pbw.hpp"

#include "dybx/errors.hpp"

#include <sstream>

namespace dybx {

namespace {

int degreeGuard(const JetShapePtr& shape) { return 4 * shape->hbarCap() + 4; }

} // namespace

PBWElement::PBWElement(JetShapePtr shape, int order) : shape_(std::move(shape)), order_(order)
{
    if (order_ < 0)
        throw DomainError("negative PBW tensor order");
}

PBWElement PBWElement::unit(JetShapePtr shape, int order)
{
    return monomial(shape, Monomial(2 * order, 0), JetScalar(shape, 1));
}

PBWElement PBWElement::monomial(JetShapePtr shape, const Monomial& m, const JetScalar& c)
{
    PBWElement e(std::move(shape), static_cast<int>(m.size() / 2));
    e.add(m, c);
    return e;
}

PBWElement PBWElement::generatorX(JetShapePtr shape, int order, int leg)
{
    Monomial m(2 * order, 0);
    m.at(2 * leg) = 1;
    return monomial(shape, m, JetScalar(shape, 1));
}

PBWElement PBWElement::generatorY(JetShapePtr shape, int order, int leg)
{
    Monomial m(2 * order, 0);
    m.at(2 * leg + 1) = 1;
    return monomial(shape, m, JetScalar(shape, 1));
}

JetScalar PBWElement::coeff(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? JetScalar(shape_) : it->second;
}

void PBWElement::add(const Monomial& m, const JetScalar& c)
{
    if (static_cast<int>(m.size()) != 2 * order_)
        throw DomainError("PBW monomial has wrong length");
    if (c.isZero())
        return;
    for (int i = 0; i < order_; ++i)
        if (m[2 * i] + m[2 * i + 1] > degreeGuard(shape_))
            throw InvariantViolation("PBW monomial degree exceeds the guard");
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.isZero())
            terms_.erase(it);
    }
}

bool PBWElement::isZero() const
{
    for (auto& [m, c] : terms_)
        if (!c.isZero())
            return false;
    return true;
}

void PBWElement::check(const PBWElement& o) const
{
    if (order_ != o.order_)
        throw DomainError("PBW tensor order mismatch");
    if (!(*shape_ == *o.shape_))
        throw DomainError("PBW jet shapes differ");
}

PBWElement& PBWElement::operator+=(const PBWElement& o)
{
    check(o);
    for (auto& [m, c] : o.terms_)
        add(m, c);
    return *this;
}

PBWElement& PBWElement::operator-=(const PBWElement& o)
{
    check(o);
    for (auto& [m, c] : o.terms_)
        add(m, -c);
    return *this;
}

std::vector<std::pair<int, Rational>> reorderYX(int b, int c)
{
    std::vector<std::pair<int, Rational>> out;
    // (X - b)^c = sum_i binom(c, i) X^i (-b)^{c-i}
    for (int i = 0; i <= c; ++i) {
        Rational coef = binomial(c, i);
        Rational mb(-b);
        for (int k = 0; k < c - i; ++k)
            coef *= mb;
        if (!isZero(coef))
            out.push_back({i, coef});
    }
    return out;
}

PBWElement operator*(const PBWElement& a, const PBWElement& b)
{
    a.check(b);
    PBWElement r(a.shape_, a.order_);
    const int n = a.order_;
    for (auto& [ma, ca] : a.terms_)
        for (auto& [mb, cb] : b.terms_) {
            JetScalar c = ca * cb;
            if (c.isZero())
                continue;
            // Per leg: X^a Y^b X^c Y^d = sum_i w_i X^{a+i} Y^{b+d}.
            std::vector<std::vector<std::pair<int, Rational>>> legs(n);
            for (int l = 0; l < n; ++l)
                legs[l] = reorderYX(ma[2 * l + 1], mb[2 * l]);
            std::vector<std::size_t> idx(n, 0);
            while (true) {
                PBWElement::Monomial m(2 * n);
                Rational w = 1;
                for (int l = 0; l < n; ++l) {
                    auto& [i, coef] = legs[l][idx[l]];
                    m[2 * l] = ma[2 * l] + i;
                    m[2 * l + 1] = ma[2 * l + 1] + mb[2 * l + 1];
                    w *= coef;
                }
                r.add(m, c * w);
                int l = n - 1;
                while (l >= 0 && ++idx[l] == legs[l].size())
                    idx[l--] = 0;
                if (l < 0)
                    break;
            }
        }
    return r;
}

PBWElement operator*(const JetScalar& c, const PBWElement& a)
{
    PBWElement r(a.shape_, a.order_);
    for (auto& [m, v] : a.terms_)
        r.add(m, c * v);
    return r;
}

PBWElement operator*(const Rational& c, const PBWElement& a)
{
    PBWElement r(a.shape_, a.order_);
    for (auto& [m, v] : a.terms_)
        r.add(m, v * c);
    return r;
}

bool operator==(const PBWElement& a, const PBWElement& b)
{
    if (a.order_ != b.order_)
        return false;
    for (auto& [m, c] : a.terms_)
        if (c != b.coeff(m))
            return false;
    for (auto& [m, c] : b.terms_)
        if (c != a.coeff(m))
            return false;
    return true;
}

PBWElement PBWElement::coproduct(int leg) const
{
    if (leg < 0 || leg >= order_)
        throw DomainError("coproduct leg out of range");
    PBWElement r(shape_, order_ + 1);
    for (auto& [m, c] : terms_) {
        int a = m[2 * leg], b = m[2 * leg + 1];
        for (int i = 0; i <= a; ++i)
            for (int j = 0; j <= b; ++j) {
                Monomial out(m.begin(), m.begin() + 2 * leg);
                out.push_back(i);
                out.push_back(j);
                out.push_back(a - i);
                out.push_back(b - j);
                out.insert(out.end(), m.begin() + 2 * leg + 2, m.end());
                r.add(out, c * (binomial(a, i) * binomial(b, j)));
            }
    }
    return r;
}

PBWElement PBWElement::counit(int leg) const
{
    if (leg < 0 || leg >= order_)
        throw DomainError("counit leg out of range");
    PBWElement r(shape_, order_ - 1);
    for (auto& [m, c] : terms_) {
        if (m[2 * leg] != 0 || m[2 * leg + 1] != 0)
            continue;
        Monomial out(m.begin(), m.begin() + 2 * leg);
        out.insert(out.end(), m.begin() + 2 * leg + 2, m.end());
        r.add(out, c);
    }
    return r;
}

PBWElement PBWElement::permuted(const std::vector<int>& perm) const
{
    if (static_cast<int>(perm.size()) != order_)
        throw DomainError("leg permutation has wrong length");
    PBWElement r(shape_, order_);
    for (auto& [m, c] : terms_) {
        Monomial out(2 * order_);
        for (int i = 0; i < order_; ++i) {
            out[2 * i] = m[2 * perm[i]];
            out[2 * i + 1] = m[2 * perm[i] + 1];
        }
        r.add(out, c);
    }
    return r;
}

PBWElement PBWElement::embed(int newOrder, const std::vector<int>& legs) const
{
    if (static_cast<int>(legs.size()) != order_)
        throw DomainError("embedding needs one target leg per tensor leg");
    PBWElement r(shape_, newOrder);
    for (auto& [m, c] : terms_) {
        Monomial out(2 * newOrder, 0);
        for (int i = 0; i < order_; ++i) {
            out.at(2 * legs[i]) = m[2 * i];
            out.at(2 * legs[i] + 1) = m[2 * i + 1];
        }
        r.add(out, c);
    }
    return r;
}

PBWElement PBWElement::shiftLambda(int leg, int sign) const
{
    if (leg < 0 || leg >= order_)
        throw DomainError("shift leg out of range");
    PBWElement r(shape_, order_);
    PBWElement deriv = *this;
    Rational scale = 1;
    for (int k = 0; k <= shape_->hbarCap(); ++k) {
        JetScalar h = JetScalar::monomial(shape_, std::vector<int>(shape_->vars(), 0), k, scale);
        for (auto& [m, c] : deriv.terms_) {
            Monomial out = m;
            out[2 * leg + 1] += k;
            r.add(out, h * c);
        }
        deriv = deriv.derivative(0);
        scale = scale * sign / (k + 1);
    }
    return r;
}

PBWElement PBWElement::derivative(int var) const
{
    PBWElement r(shape_, order_);
    for (auto& [m, c] : terms_)
        r.add(m, c.derivative(var));
    return r;
}

PBWElement PBWElement::hbarCoefficient(int k) const
{
    PBWElement r(shape_, order_);
    for (auto& [m, c] : terms_)
        r.add(m, c.hbarCoefficient(k));
    return r;
}

PBWElement PBWElement::inverse() const
{
    auto one = unit(shape_, order_);
    auto n = *this - one;
    for (auto& [m, c] : n.terms_)
        if (!c.hbarCoefficient(0).isZero())
            throw DomainError("PBW inverse needs an element equal to 1 modulo hbar");
    auto result = one;
    auto power = one;
    for (int k = 1; k <= shape_->hbarCap(); ++k) {
        power = power * n;
        if (k % 2)
            result -= power;
        else
            result += power;
    }
    return result;
}

std::string PBWElement::str() const
{
    if (isZero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms_) {
        if (c.isZero())
            continue;
        if (!first)
            os << " + ";
        first = false;
        os << "(" << c.str() << ")*";
        for (int l = 0; l < order_; ++l) {
            if (l)
                os << "(x)";
            std::string s;
            if (m[2 * l])
                s += m[2 * l] == 1 ? "X" : "X^" + std::to_string(m[2 * l]);
            if (m[2 * l + 1])
                s += m[2 * l + 1] == 1 ? "Y" : "Y^" + std::to_string(m[2 * l + 1]);
            os << (s.empty() ? "1" : s);
        }
    }
    return os.str();
}

} // namespace dybx
