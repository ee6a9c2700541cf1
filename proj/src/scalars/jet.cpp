#include "dybx/jet.hpp"

#include "dybx/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

namespace dybx {

namespace {

void enumerate(int vars, int degree, std::vector<int>& cur, int pos, std::vector<std::vector<int>>& out)
{
    if (pos == vars - 1 || vars == 0) {
        if (vars > 0)
            cur[pos] = degree;
        out.push_back(cur);
        return;
    }
    for (int d = degree; d >= 0; --d) {
        cur[pos] = d;
        enumerate(vars, degree - d, cur, pos + 1, out);
    }
    cur[pos] = 0;
}

} // namespace

JetShape::JetShape(int vars, int degCap, int hbarCap)
    : vars_(vars), degCap_(degCap), hbarCap_(hbarCap)
{
    if (vars < 0 || degCap < 0 || hbarCap < 0)
        throw DomainError("jet shape parameters must be non-negative");
    for (int d = 0; d <= degCap; ++d) {
        std::vector<int> cur(vars, 0);
        if (vars == 0 && d > 0)
            break;
        enumerate(vars, d, cur, 0, monomials_);
    }
    for (auto& m : monomials_) {
        int s = 0;
        for (int e : m)
            s += e;
        degrees_.push_back(s);
    }
    int M = monomialCount();
    mulTable_.assign(M * M, -1);
    for (int a = 0; a < M; ++a)
        for (int b = 0; b < M; ++b) {
            if (degrees_[a] + degrees_[b] > degCap)
                continue;
            std::vector<int> s(vars);
            for (int v = 0; v < vars; ++v)
                s[v] = monomials_[a][v] + monomials_[b][v];
            mulTable_[a * M + b] = indexOf(s);
        }
    deriv_.resize(vars);
    raise_.resize(vars);
    for (int v = 0; v < vars; ++v) {
        for (int m = 0; m < M; ++m) {
            auto alpha = monomials_[m];
            if (alpha[v] == 0)
                deriv_[v].push_back({-1, 0});
            else {
                int f = alpha[v];
                alpha[v] -= 1;
                deriv_[v].push_back({indexOf(alpha), f});
            }
            auto beta = monomials_[m];
            beta[v] += 1;
            raise_[v].push_back(degrees_[m] + 1 > degCap ? -1 : indexOf(beta));
        }
    }
}

int JetShape::indexOf(const std::vector<int>& alpha) const
{
    if (static_cast<int>(alpha.size()) != vars_)
        throw DomainError("multi-index has wrong length");
    int s = 0;
    for (int e : alpha) {
        if (e < 0)
            return -1;
        s += e;
    }
    if (s > degCap_)
        return -1;
    // Monomials are grouped by degree; binary search is overkill at these sizes.
    for (int m = 0; m < static_cast<int>(monomials_.size()); ++m)
        if (degrees_[m] == s && monomials_[m] == alpha)
            return m;
    return -1;
}

std::shared_ptr<const JetShape> JetShape::get(int vars, int degCap, int hbarCap)
{
    static std::mutex mutex;
    static std::map<std::tuple<int, int, int>, std::shared_ptr<const JetShape>> cache;
    std::lock_guard lock(mutex);
    auto key = std::make_tuple(vars, degCap, hbarCap);
    auto it = cache.find(key);
    if (it != cache.end())
        return it->second;
    std::shared_ptr<const JetShape> s(new JetShape(vars, degCap, hbarCap));
    cache.emplace(key, s);
    return s;
}

JetScalar::JetScalar(JetShapePtr shape)
    : shape_(std::move(shape))
{
    c_.assign(static_cast<std::size_t>(shape_->hbarCap() + 1) * shape_->monomialCount(), 0);
    eff_.assign(shape_->hbarCap() + 1, shape_->degCap());
}

JetScalar::JetScalar(JetShapePtr shape, const Rational& constant)
    : JetScalar(std::move(shape))
{
    c_[0] = constant;
}

JetScalar JetScalar::variable(JetShapePtr shape, int var)
{
    std::vector<int> alpha(shape->vars(), 0);
    if (var < 0 || var >= shape->vars())
        throw DomainError("jet variable index out of range");
    alpha[var] = 1;
    return monomial(std::move(shape), alpha, 0, 1);
}

JetScalar JetScalar::hbar(JetShapePtr shape)
{
    std::vector<int> alpha(shape->vars(), 0);
    return monomial(std::move(shape), alpha, 1, 1);
}

JetScalar JetScalar::monomial(JetShapePtr shape, const std::vector<int>& alpha, int k, const Rational& c)
{
    JetScalar j(std::move(shape));
    j.setCoeff(alpha, k, c);
    return j;
}

Rational JetScalar::coeff(const std::vector<int>& alpha, int k) const
{
    if (k < 0 || k > shape_->hbarCap())
        return 0;
    int m = shape_->indexOf(alpha);
    if (m < 0)
        return 0;
    return c_[k * stride() + m];
}

void JetScalar::setCoeff(const std::vector<int>& alpha, int k, const Rational& v)
{
    if (k < 0 || k > shape_->hbarCap())
        return;
    int m = shape_->indexOf(alpha);
    if (m < 0 || shape_->degree(m) > eff_[k])
        return;
    c_[k * stride() + m] = v;
}

void JetScalar::addToCoeff(int k, int m, const Rational& v)
{
    if (shape_->degree(m) > eff_[k])
        return;
    c_[k * stride() + m] += v;
}

int JetScalar::minEffDegree() const
{
    return *std::min_element(eff_.begin(), eff_.end());
}

void JetScalar::capEffDegree(int k, int deg)
{
    if (k < 0 || k >= static_cast<int>(eff_.size()))
        return;
    eff_[k] = std::min(eff_[k], std::max(deg, -1));
    truncateToEff();
}

void JetScalar::capAllEffDegree(int deg)
{
    for (std::size_t k = 0; k < eff_.size(); ++k)
        eff_[k] = std::min(eff_[k], std::max(deg, -1));
    truncateToEff();
}

void JetScalar::truncateToEff()
{
    int M = stride();
    for (std::size_t k = 0; k < eff_.size(); ++k)
        for (int m = 0; m < M; ++m)
            if (shape_->degree(m) > eff_[k])
                c_[k * M + m] = 0;
}

void JetScalar::checkShape(const JetScalar& o) const
{
    if (!shape_ || !o.shape_)
        throw DomainError("operation on an uninitialised jet");
    if (shape_ != o.shape_ && !(*shape_ == *o.shape_))
        throw DomainError("jet shape mismatch");
}

bool JetScalar::isZero() const
{
    for (auto& c : c_)
        if (sgn(c) != 0)
            return false;
    return true;
}

bool JetScalar::isExactlyOne() const
{
    if (c_[0] != 1)
        return false;
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0)
            return false;
    return true;
}

JetScalar JetScalar::hbarCoefficient(int k) const
{
    JetScalar r(shape_);
    if (k < 0 || k > shape_->hbarCap())
        return r;
    int M = stride();
    for (int m = 0; m < M; ++m)
        r.c_[m] = c_[k * M + m];
    std::fill(r.eff_.begin(), r.eff_.end(), eff_[k]);
    return r;
}

JetScalar JetScalar::timesHbar(int j) const
{
    JetScalar r(shape_);
    int M = stride();
    int K = shape_->hbarCap();
    for (int k = 0; k + j <= K; ++k) {
        for (int m = 0; m < M; ++m)
            r.c_[(k + j) * M + m] = c_[k * M + m];
        r.eff_[k + j] = eff_[k];
    }
    return r;
}

bool JetScalar::isHbarFree() const
{
    int M = stride();
    for (std::size_t i = M; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0)
            return false;
    return true;
}

JetScalar JetScalar::derivative(int var) const
{
    JetScalar r(shape_);
    int M = stride();
    for (int k = 0; k <= shape_->hbarCap(); ++k) {
        for (int m = 0; m < M; ++m) {
            const Rational& c = c_[k * M + m];
            if (sgn(c) == 0)
                continue;
            auto [target, factor] = shape_->derivative(var, m);
            if (target >= 0)
                r.c_[k * M + target] += c * factor;
        }
        r.eff_[k] = std::max(eff_[k] - 1, -1);
    }
    r.truncateToEff();
    return r;
}

JetScalar JetScalar::derivative(const std::vector<int>& alpha) const
{
    JetScalar r = *this;
    for (int v = 0; v < static_cast<int>(alpha.size()); ++v)
        for (int i = 0; i < alpha[v]; ++i)
            r = r.derivative(v);
    return r;
}

JetScalar JetScalar::integral(int var) const
{
    JetScalar r(shape_);
    int M = stride();
    for (int k = 0; k <= shape_->hbarCap(); ++k) {
        for (int m = 0; m < M; ++m) {
            const Rational& c = c_[k * M + m];
            if (sgn(c) == 0)
                continue;
            int target = shape_->raise(var, m);
            if (target < 0)
                continue;
            int e = shape_->monomial(target)[var];
            r.c_[k * M + target] += c / e;
        }
        r.eff_[k] = std::min(eff_[k] + 1, shape_->degCap());
    }
    r.truncateToEff();
    return r;
}

JetScalar& JetScalar::operator+=(const JetScalar& o)
{
    checkShape(o);
    for (std::size_t i = 0; i < c_.size(); ++i)
        c_[i] += o.c_[i];
    for (std::size_t k = 0; k < eff_.size(); ++k)
        eff_[k] = std::min(eff_[k], o.eff_[k]);
    truncateToEff();
    return *this;
}

JetScalar& JetScalar::operator-=(const JetScalar& o)
{
    checkShape(o);
    for (std::size_t i = 0; i < c_.size(); ++i)
        c_[i] -= o.c_[i];
    for (std::size_t k = 0; k < eff_.size(); ++k)
        eff_[k] = std::min(eff_[k], o.eff_[k]);
    truncateToEff();
    return *this;
}

JetScalar& JetScalar::operator*=(const Rational& q)
{
    for (auto& c : c_)
        c *= q;
    return *this;
}

JetScalar operator*(const JetScalar& a, const JetScalar& b)
{
    a.checkShape(b);
    const auto& shape = *a.shape_;
    int M = shape.monomialCount();
    int K = shape.hbarCap();
    JetScalar r(a.shape_);
    for (int k = 0; k <= K; ++k) {
        int e = shape.degCap();
        for (int i = 0; i <= k; ++i)
            e = std::min({e, a.eff_[i], b.eff_[k - i]});
        r.eff_[k] = e;
    }
    // Collect nonzero positions once.
    std::vector<std::vector<int>> nzA(K + 1), nzB(K + 1);
    for (int k = 0; k <= K; ++k)
        for (int m = 0; m < M; ++m) {
            if (sgn(a.c_[k * M + m]) != 0)
                nzA[k].push_back(m);
            if (sgn(b.c_[k * M + m]) != 0)
                nzB[k].push_back(m);
        }
    Rational tmp;
    for (int i = 0; i <= K; ++i) {
        if (nzA[i].empty())
            continue;
        for (int j = 0; i + j <= K; ++j) {
            if (nzB[j].empty())
                continue;
            int k = i + j;
            int e = r.eff_[k];
            if (e < 0)
                continue;
            for (int ma : nzA[i]) {
                if (shape.degree(ma) > e)
                    break;
                const Rational& ca = a.c_[i * M + ma];
                for (int mb : nzB[j]) {
                    int t = shape.product(ma, mb);
                    if (t < 0 || shape.degree(t) > e)
                        continue;
                    mpq_mul(tmp.get_mpq_t(), ca.get_mpq_t(), b.c_[j * M + mb].get_mpq_t());
                    r.c_[k * M + t] += tmp;
                }
            }
        }
    }
    return r;
}

JetScalar& JetScalar::operator*=(const JetScalar& o)
{
    *this = *this * o;
    return *this;
}

JetScalar JetScalar::operator-() const
{
    JetScalar r = *this;
    for (auto& c : r.c_)
        c = -c;
    return r;
}

JetScalar JetScalar::inverse() const
{
    if (sgn(c_[0]) == 0 || eff_[0] < 0)
        throw DomainError("jet inverse requires an invertible constant term");
    Rational c0inv = Rational(1) / c_[0];
    // a = c0 (1 + u) with u nilpotent, so u^j = 0 once j > D + K.
    JetScalar u = *this * c0inv;
    u.c_[0] -= 1;
    JetScalar negU = -u;
    JetScalar sum(shape_, 1);
    JetScalar term(shape_, 1);
    int bound = shape_->degCap() + shape_->hbarCap() + 1;
    for (int i = 1; i <= bound; ++i) {
        term = term * negU;
        sum += term;
        if (term.isZero())
            break;
    }
    return sum * c0inv;
}

JetScalar JetScalar::log() const
{
    if (c_[0] != 1)
        throw DomainError("jet log requires constant term 1");
    JetScalar u = *this;
    u.c_[0] -= 1;
    JetScalar sum(shape_);
    JetScalar term(shape_, 1);
    int bound = shape_->degCap() + shape_->hbarCap() + 1;
    for (int i = 1; i <= bound; ++i) {
        term = term * u;
        sum += term * Rational(i % 2 == 1 ? 1 : -1, i);
        if (term.isZero())
            break;
    }
    return sum;
}

JetScalar JetScalar::exp() const
{
    if (sgn(c_[0]) != 0)
        throw DomainError("jet exp requires constant term 0");
    JetScalar sum(shape_, 1);
    JetScalar term(shape_, 1);
    int bound = shape_->degCap() + shape_->hbarCap() + 1;
    for (int i = 1; i <= bound; ++i) {
        term = term * *this * Rational(1, i);
        sum += term;
        if (term.isZero())
            break;
    }
    return sum;
}

bool operator==(const JetScalar& a, const JetScalar& b)
{
    a.checkShape(b);
    const auto& shape = *a.shape_;
    int M = shape.monomialCount();
    for (int k = 0; k <= shape.hbarCap(); ++k) {
        int e = std::min(a.eff_[k], b.eff_[k]);
        for (int m = 0; m < M; ++m) {
            if (shape.degree(m) > e)
                break;
            if (a.c_[k * M + m] != b.c_[k * M + m])
                return false;
        }
    }
    return true;
}

std::vector<JetScalar::Term> JetScalar::terms() const
{
    std::vector<Term> out;
    int M = stride();
    for (int k = 0; k <= shape_->hbarCap(); ++k)
        for (int m = 0; m < M; ++m)
            if (sgn(c_[k * M + m]) != 0)
                out.push_back({shape_->monomial(m), k, c_[k * M + m]});
    return out;
}

std::string JetScalar::str() const
{
    if (!shape_)
        return "<null jet>";
    std::ostringstream os;
    bool first = true;
    for (auto& t : terms()) {
        Rational mag = abs(t.c);
        if (first)
            os << (sgn(t.c) < 0 ? "-" : "");
        else
            os << (sgn(t.c) < 0 ? " - " : " + ");
        first = false;
        bool unit = true;
        for (int e : t.alpha)
            if (e)
                unit = false;
        if (t.k)
            unit = false;
        if (mag != 1 || unit)
            os << mag.get_str();
        bool needStar = mag != 1;
        for (std::size_t v = 0; v < t.alpha.size(); ++v) {
            if (!t.alpha[v])
                continue;
            os << (needStar ? "*" : "") << "t" << (v + 1);
            if (t.alpha[v] > 1)
                os << "^" << t.alpha[v];
            needStar = true;
        }
        if (t.k) {
            os << (needStar ? "*" : "") << "h";
            if (t.k > 1)
                os << "^" << t.k;
        }
    }
    if (first)
        os << "0";
    os << " + O(";
    for (std::size_t k = 0; k < eff_.size(); ++k)
        os << (k ? "," : "") << eff_[k] + 1;
    os << ")";
    return os.str();
}

JetScalar polynomialDerivativeJet(const JetShapePtr& shape, const std::vector<Rational>& coeffs,
                                  int knownDegree, int m, int var)
{
    JetScalar r(shape);
    std::vector<int> alpha(shape->vars(), 0);
    for (int d = 0; d <= shape->degCap(); ++d) {
        std::size_t src = static_cast<std::size_t>(m + d);
        if (src >= coeffs.size())
            break;
        alpha[var] = d;
        Rational c = coeffs[src] * factorial(m + d) / factorial(d);
        r.setCoeff(alpha, 0, c);
    }
    if (knownDegree >= 0)
        r.capAllEffDegree(knownDegree - m);
    return r;
}

} // namespace dybx
