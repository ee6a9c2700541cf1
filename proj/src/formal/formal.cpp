#include "dybx/formal.hpp"

#include "dybx/conventions.hpp"
#include "dybx/errors.hpp"
#include "dybx/matrix.hpp"

#include <functional>
#include <map>
#include <sstream>

namespace dybx {

namespace {

/// Polynomial in commuting symbols eta_1..eta_k with jet coefficients. Every eta
/// enters with a factor of hbar, so monomials above degree K are dropped.
class SymPoly {
public:
    using Mono = std::vector<int>;

    SymPoly(JetShapePtr shape, int nsym) : shape_(std::move(shape)), nsym_(nsym) {}

    static SymPoly constant(const JetShapePtr& shape, int nsym, const JetScalar& c)
    {
        SymPoly p(shape, nsym);
        p.add(Mono(nsym, 0), c);
        return p;
    }
    /// c * eta_i
    static SymPoly symbol(const JetShapePtr& shape, int nsym, int i, const JetScalar& c)
    {
        SymPoly p(shape, nsym);
        Mono m(nsym, 0);
        m[i] = 1;
        p.add(m, c);
        return p;
    }

    void add(const Mono& m, const JetScalar& c)
    {
        int deg = 0;
        for (int e : m)
            deg += e;
        if (deg > shape_->hbarCap() || c.isZero())
            return;
        auto [it, inserted] = t_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.isZero())
                t_.erase(it);
        }
    }

    const std::map<Mono, JetScalar>& terms() const { return t_; }
    JetScalar freePart() const
    {
        auto it = t_.find(Mono(nsym_, 0));
        return it == t_.end() ? JetScalar(shape_) : it->second;
    }
    bool isZero() const { return t_.empty(); }

    SymPoly operator+(const SymPoly& o) const
    {
        SymPoly r = *this;
        for (auto& [m, c] : o.t_)
            r.add(m, c);
        return r;
    }
    SymPoly operator-(const SymPoly& o) const
    {
        SymPoly r = *this;
        for (auto& [m, c] : o.t_)
            r.add(m, -c);
        return r;
    }
    SymPoly operator*(const SymPoly& o) const
    {
        SymPoly r(shape_, nsym_);
        for (auto& [ma, ca] : t_)
            for (auto& [mb, cb] : o.t_) {
                Mono m(nsym_);
                for (int i = 0; i < nsym_; ++i)
                    m[i] = ma[i] + mb[i];
                r.add(m, ca * cb);
            }
        return r;
    }
    SymPoly scaled(const JetScalar& c) const
    {
        SymPoly r(shape_, nsym_);
        for (auto& [m, v] : t_)
            r.add(m, v * c);
        return r;
    }
    SymPoly scaled(const Rational& c) const
    {
        SymPoly r(shape_, nsym_);
        for (auto& [m, v] : t_)
            r.add(m, v * c);
        return r;
    }

    SymPoly inverse() const
    {
        JetScalar c0 = freePart();
        if (dybx::isZero(c0.constantTerm()))
            throw DomainError("symbol series is not invertible");
        JetScalar c0inv = c0.inverse();
        SymPoly e = *this - constant(shape_, nsym_, c0);
        SymPoly q = e.scaled(c0inv); // this = c0 (1 + q), q nilpotent
        SymPoly result = constant(shape_, nsym_, JetScalar(shape_, 1));
        SymPoly power = result;
        for (int k = 1; k <= shape_->hbarCap(); ++k) {
            power = power * q;
            if (power.isZero())
                break;
            result = k % 2 ? result - power : result + power;
        }
        return result.scaled(c0inv);
    }

    /// log of a series equal to 1 modulo hbar.
    SymPoly log() const
    {
        SymPoly u = *this - constant(shape_, nsym_, JetScalar(shape_, 1));
        for (auto& [m, c] : u.t_)
            if (!c.hbarCoefficient(0).isZero())
                throw InvariantViolation("bracket of the rank-one twist is not 1 modulo hbar");
        SymPoly result(shape_, nsym_);
        SymPoly power = constant(shape_, nsym_, JetScalar(shape_, 1));
        for (int k = 1; k <= shape_->hbarCap(); ++k) {
            power = power * u;
            if (power.isZero())
                break;
            Rational c(k % 2 ? 1 : -1, k);
            result = result + power.scaled(c);
        }
        return result;
    }

private:
    JetShapePtr shape_;
    int nsym_;
    std::map<Mono, JetScalar> t_;
};

JetScalar hbarPower(const JetShapePtr& shape, int k, const Rational& c)
{
    return JetScalar::monomial(shape, std::vector<int>(shape->vars(), 0), k, c);
}

/// D(l + delta; s) = sum_{m>=1} (-1)^{m-1} f^{(m)}(l + delta) s^{m-1} / m!, with
/// f^{(m)}(l + delta) = sum_j delta^j / j! f^{(m+j)}(l).
SymPoly dividedDifference(const std::vector<JetScalar>& fd, const SymPoly& delta, const SymPoly& s, int nsym)
{
    const auto& shape = fd[0].shape();
    const int K = shape->hbarCap();
    SymPoly out(shape, nsym);
    SymPoly sPow = SymPoly::constant(shape, nsym, JetScalar(shape, 1));
    Rational mfact = 1;
    for (int m = 1; m <= K + 1; ++m) {
        mfact *= m;
        SymPoly fm(shape, nsym);
        SymPoly dPow = SymPoly::constant(shape, nsym, JetScalar(shape, 1));
        Rational jfact = 1;
        for (int j = 0; j <= K && m + j < static_cast<int>(fd.size()); ++j) {
            if (j > 0) {
                jfact *= j;
                dPow = dPow * delta;
                if (dPow.isZero())
                    break;
            }
            fm = fm + dPow.scaled(fd[m + j] * (Rational(1) / jfact));
        }
        Rational sign = (m - 1) % 2 ? -1 : 1;
        out = out + (fm * sPow).scaled(sign / mfact);
        sPow = sPow * s;
        if (sPow.isZero())
            break;
    }
    return out;
}

std::vector<JetScalar> derivativeTable(const FunctionJet& f, const JetShapePtr& shape)
{
    std::vector<JetScalar> fd;
    for (int m = 0; m <= 2 * shape->hbarCap() + 2; ++m)
        fd.push_back(derivativeJet(f, shape, m));
    return fd;
}

std::vector<std::vector<int>> multiIndices(int n, int maxDeg)
{
    std::vector<std::vector<int>> out;
    std::vector<int> a(n, 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == n) {
            out.push_back(a);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            a[i] = v;
            rec(i + 1, left - v);
        }
        a[i] = 0;
    };
    rec(0, maxDeg);
    return out;
}

Rational multiFactorial(const std::vector<int>& a)
{
    Rational r = 1;
    for (int v : a)
        r *= factorial(v);
    return r;
}

int multiDegree(const std::vector<int>& a)
{
    int s = 0;
    for (int v : a)
        s += v;
    return s;
}

/// rho(y)^alpha = prod_i rho(y_i)^{alpha_i}.
QMatrix yPower(const MatrixRep& rep, const LieAlgebraSpec& g, const std::vector<int>& alpha)
{
    QMatrix r = qIdentity(rep.dim());
    for (int i = 0; i < g.abelianDim(); ++i)
        for (int k = 0; k < alpha[i]; ++k)
            r = r * rep.of(g.abelian()[i]);
    return r;
}

std::string monomialName(const PBWElement::Monomial& m)
{
    std::string s;
    for (std::size_t l = 0; l < m.size() / 2; ++l) {
        if (l)
            s += "(x)";
        std::string leg;
        if (m[2 * l])
            leg += m[2 * l] == 1 ? "X" : "X^" + std::to_string(m[2 * l]);
        if (m[2 * l + 1])
            leg += m[2 * l + 1] == 1 ? "Y" : "Y^" + std::to_string(m[2 * l + 1]);
        s += leg.empty() ? "1" : leg;
    }
    return s;
}

int lowestFailingOrder(const JetScalar& c, int base)
{
    int low = -1;
    for (auto& t : c.terms())
        if (multiDegree(t.alpha) <= base - t.k && (low < 0 || t.k < low))
            low = t.k;
    return low;
}

void compareGraded(CheckResult& check, const PBWElement& residual, int base)
{
    for (auto& [m, c] : residual.terms()) {
        int k = lowestFailingOrder(c, base);
        if (k >= 0)
            check.fail(monomialName(m) + " at hbar^" + std::to_string(k), c.str());
    }
}

int pbwCertified(const PBWElement& u)
{
    int d = u.shape()->degCap();
    for (auto& [m, c] : u.terms())
        d = std::min(d, c.minEffDegree());
    return d;
}

void compareGraded(CheckResult& check, const JMatrix& residual, int base, const std::string& prefix = {})
{
    for (int i = 0; i < residual.rows(); ++i)
        for (auto& e : residual.row(i)) {
            int k = lowestFailingOrder(e.second, base);
            if (k >= 0)
                check.fail(prefix + "(" + std::to_string(i) + "," + std::to_string(e.first) + ") at hbar^" +
                               std::to_string(k),
                           e.second.str());
        }
}

} // namespace

JetScalar derivativeJet(const FunctionJet& f, const JetShapePtr& shape, int m)
{
    return polynomialDerivativeJet(shape, f.coeffs, f.knownDegree, m);
}

LiePtr rankOneAlgebra()
{
    static const LiePtr g = std::make_shared<LieAlgebraSpec>(glSemidirect(1));
    return g;
}

std::shared_ptr<const MatrixRep> rankOneRep()
{
    static const std::shared_ptr<const MatrixRep> r = std::make_shared<MatrixRep>(glSemidirectDefining(1));
    return r;
}

PBWElement gl1Twist(const FunctionJet& f, int K, int D)
{
    auto shape = JetShape::get(1, D, K);
    auto fd = derivativeTable(f, shape);
    if (isZero(fd[1].constantTerm()))
        throw DomainError("f'(0) = 0: the rank-one twist needs an invertible derivative");
    JetScalar h = JetScalar::hbar(shape);
    JetScalar one(shape, 1);
    auto eta1 = SymPoly::symbol(shape, 2, 0, h);
    auto eta2 = SymPoly::symbol(shape, 2, 1, h);
    SymPoly zero(shape, 2);
    SymPoly num = dividedDifference(fd, zero, eta1 + eta2, 2);
    SymPoly b1 = num * dividedDifference(fd, zero - eta2, eta1, 2).inverse();
    SymPoly b2 = num * dividedDifference(fd, zero, eta2, 2).inverse();
    SymPoly l1 = b1.log(), l2 = b2.log();

    std::vector<SymPoly> p1{SymPoly::constant(shape, 2, one)}, p2{SymPoly::constant(shape, 2, one)};
    for (int a = 1; a <= K; ++a) {
        p1.push_back((p1.back() * l1).scaled(Rational(1, a)));
        p2.push_back((p2.back() * l2).scaled(Rational(1, a)));
    }
    PBWElement j(shape, 2);
    for (int a = 0; a <= K; ++a)
        for (int d = 0; d <= K; ++d) {
            SymPoly c = p1[a] * p2[d];
            for (auto& [m, v] : c.terms())
                j.add({a, m[0], d, m[1]}, v);
        }
    return j;
}

Report checkFormalTwist(const PBWElement& j)
{
    Report rep;
    rep.title = "formal dynamical twist";
    const auto& shape = j.shape();
    const int base = pbwCertified(j);

    auto lhs = j.coproduct(0) * j.embed(3, {0, 1}).shiftLambda(2, -1);
    auto rhs = j.coproduct(1) * j.embed(3, {1, 2});
    auto& cocycle = rep.add("shifted-cocycle");
    compareGraded(cocycle, lhs - rhs, base);
    cocycle.detail = "modulo hbar^" + std::to_string(shape->hbarCap() + 1);

    auto& counit = rep.add("counit");
    auto one = PBWElement::unit(shape, 1);
    compareGraded(counit, j.counit(0) - one, base);
    compareGraded(counit, j.counit(1) - one, base);

    auto dy = PBWElement::generatorY(shape, 2, 0) + PBWElement::generatorY(shape, 2, 1);
    auto& zw = rep.add("zero-weight");
    compareGraded(zw, dy * j - j * dy, base);
    return rep;
}

LimitResult quasiClassicalLimit(const PBWElement& j)
{
    if (j.order() != 2)
        throw DomainError("quasi-classical limit needs a two-leg twist");
    const auto& shape = j.shape();
    const int base = pbwCertified(j) - 1;
    LimitResult out{ClassicalR(rankOneAlgebra(), shape, base), {}};
    out.report.title = "quasi-classical limit";
    auto& in = out.report.add("rho-in-g-tensor-g");
    auto& unit = out.report.add("unit-modulo-hbar");
    compareGraded(unit, j.hbarCoefficient(0) - PBWElement::unit(shape, 2), base + 1);

    auto rho = j.hbarCoefficient(1);
    std::vector<JetScalar> r(4, JetScalar(shape));
    for (auto& [m, c] : rho.terms()) {
        if (m[0] + m[1] == 1 && m[2] + m[3] == 1) {
            int a = m[0] ? 0 : 1, b = m[2] ? 0 : 1;
            r[a * 2 + b] += c;
        } else if (!vanishesTo(c, base)) {
            in.fail(monomialName(m), c.str());
        }
    }
    const int s = conventions().limitSign;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            out.r.at(a, b) = (r[b * 2 + a] - r[a * 2 + b]) * Rational(s);
    return out;
}

PinResult pinConventions(const FunctionJet& f, int K, int D)
{
    Conventions saved = conventions();
    auto shape = JetShape::get(1, D, K);
    auto j = gl1Twist(f, K, D);
    std::vector<std::pair<bool, int>> matches;
    PinResult out;
    out.report.title = "convention pinning";
    std::string tried;
    for (bool wedge : {true, false})
        for (int sign : {1, -1}) {
            conventions().wedgeFull = wedge;
            conventions().limitSign = sign;
            auto lim = quasiClassicalLimit(j);
            auto expected = rNF(1, {derivativeJet(f, shape, 0)});
            bool ok = lim.r.equals(expected.result.r);
            tried += std::string(tried.empty() ? "" : "; ") + "wedge=" + (wedge ? "full" : "half") +
                     " sign=" + (sign > 0 ? "+1" : "-1") + (ok ? " matches" : " differs");
            if (ok)
                matches.push_back({wedge, sign});
        }
    conventions() = saved;
    auto& check = out.report.add("unique-convention", matches.size() == 1, tried);
    if (matches.size() != 1) {
        check.fail("candidates", std::to_string(matches.size()) + " conventions match");
        return out;
    }
    out.wedgeFull = matches[0].first;
    out.limitSign = matches[0].second;
    conventions().wedgeFull = out.wedgeFull;
    conventions().limitSign = out.limitSign;
    return out;
}

JMatrix evaluate(const PBWElement& u, const MatrixRep& rep)
{
    const auto& shape = u.shape();
    const int dim = rep.dim();
    int total = 1;
    for (int l = 0; l < u.order(); ++l)
        total *= dim;
    std::map<std::pair<int, int>, QMatrix> cache;
    auto power = [&](int a, int b) -> const QMatrix& {
        auto key = std::make_pair(a, b);
        auto it = cache.find(key);
        if (it != cache.end())
            return it->second;
        QMatrix m = qIdentity(dim);
        for (int i = 0; i < a; ++i)
            m = m * rep.of(0);
        for (int i = 0; i < b; ++i)
            m = m * rep.of(1);
        return cache.emplace(key, std::move(m)).first->second;
    };
    JMatrix out(total, total, JetScalar(shape));
    for (auto& [m, c] : u.terms()) {
        QMatrix k = qIdentity(1);
        for (int l = 0; l < u.order(); ++l)
            k = kron(k, power(m[2 * l], m[2 * l + 1]));
        out += toJetMatrix(k, shape).scaled(c);
    }
    return out;
}

JMatrix shiftedOnLegs(const JMatrix& f, const MatrixRep& rep, const LieAlgebraSpec& g, const std::vector<int>& dims,
                      const std::vector<int>& legs, int leg)
{
    const auto& shape = f.zero().shape();
    const int n = g.abelianDim();
    int total = 1;
    for (int d : dims)
        total *= d;
    JMatrix out(total, total, f.zero());
    for (auto& alpha : multiIndices(n, shape->hbarCap())) {
        JMatrix d = f;
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < alpha[i]; ++k)
                d = derivative(d, i);
        if (d.isZeroMatrix())
            continue;
        int a = multiDegree(alpha);
        Rational c = Rational(a % 2 ? -1 : 1) / multiFactorial(alpha);
        JMatrix ins = toJetMatrix(placeOnLegs(yPower(rep, g, alpha), dims, {leg}), shape);
        out += (placeOnLegs(d, dims, legs) * ins).scaled(hbarPower(shape, a, c));
    }
    return out;
}

RepX xFromGammaRep(const GammaMatrixJet& gm)
{
    const auto& g = *gm.lie;
    const auto& rep = *gm.rep;
    const auto& shape = gm.gamma.zero().shape();
    const int n = g.abelianDim();
    const int K = shape->hbarCap();
    RepX out{JMatrix(rep.dim(), rep.dim(), JetScalar(shape)), {}};
    out.report.title = "x from gamma";
    for (auto& alpha : multiIndices(n, K)) {
        JMatrix d = gm.gamma;
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < alpha[i]; ++k)
                d = derivative(d, i);
        int a = multiDegree(alpha);
        Rational c = Rational(a % 2 ? -1 : 1) / (Rational(a + 1) * multiFactorial(alpha));
        JMatrix y = toJetMatrix(yPower(rep, g, alpha), shape);
        out.x += (conventions().xYPowersLeft ? y * d : d * y).scaled(hbarPower(shape, a, c));
    }
    auto& inv = out.report.add("invertible");
    try {
        (void)inverse(out.x);
    } catch (const DomainError& e) {
        inv.fail("x(0)", e.what());
    }

    auto& real = out.report.add("realization");
    auto fromGamma = rFromGamma(gm);
    if (!fromGamma.report.pass()) {
        real.fail("precondition", "gamma fails the normalizer or gradient condition");
        return out;
    }
    // d^alpha f_j = d^{alpha - e_k} abar[k][j] for any k with alpha_k > 0.
    for (int j = 0; j < n; ++j) {
        JMatrix fj(rep.dim(), rep.dim(), JetScalar(shape));
        for (auto& alpha : multiIndices(n, K + 1)) {
            int a = multiDegree(alpha);
            if (a == 0)
                continue;
            int k = 0;
            while (alpha[k] == 0)
                ++k;
            JetScalar df = fromGamma.abar[k][j];
            auto rest = alpha;
            --rest[k];
            for (int i = 0; i < n; ++i)
                for (int s = 0; s < rest[i]; ++s)
                    df = df.derivative(i);
            Rational c = Rational((a - 1) % 2 ? -1 : 1) / multiFactorial(alpha);
            fj += toJetMatrix(yPower(rep, g, alpha), shape).scaled(df * hbarPower(shape, a - 1, c));
        }
        JMatrix residual = out.x * toJetMatrix(rep.of(g.abelian()[j]), shape) - fj * out.x;
        compareGraded(real, residual, gm.certified, "y_" + std::to_string(j + 1) + " ");
    }
    return out;
}

Report checkRepRMatrix(const JMatrix& R, const MatrixRep& rep, const LieAlgebraSpec& g, int base)
{
    const auto& shape = R.zero().shape();
    const int m = rep.dim();
    Report out;
    out.title = "representation R-matrix";
    std::vector<int> d2{m, m};
    std::vector<int> d3{m, m, m};
    JMatrix lhs, rhs;
    if (conventions().qdybeFelder) {
        lhs = shiftedOnLegs(R, rep, g, d3, {0, 1}, 2) * placeOnLegs(R, d3, {0, 2}) * shiftedOnLegs(R, rep, g, d3, {1, 2}, 0);
        rhs = placeOnLegs(R, d3, {1, 2}) * shiftedOnLegs(R, rep, g, d3, {0, 2}, 1) * placeOnLegs(R, d3, {0, 1});
    } else {
        lhs = placeOnLegs(R, d3, {0, 1}) * shiftedOnLegs(R, rep, g, d3, {0, 2}, 1) * placeOnLegs(R, d3, {1, 2});
        rhs = shiftedOnLegs(R, rep, g, d3, {1, 2}, 0) * placeOnLegs(R, d3, {0, 2}) * shiftedOnLegs(R, rep, g, d3, {0, 1}, 2);
    }
    auto& qd = out.add("qdybe");
    compareGraded(qd, lhs - rhs, base);
    qd.detail = "modulo hbar^" + std::to_string(shape->hbarCap() + 1);

    auto& zw = out.add("zero-weight");
    for (int y : g.abelian()) {
        JMatrix yy = toJetMatrix(placeOnLegs(rep.of(y), d2, {0}) + placeOnLegs(rep.of(y), d2, {1}), shape);
        compareGraded(zw, yy * R - R * yy, base, g.label(y) + " ");
    }

    return out;
}

QuantizeResult quantizeRep(const GammaMatrixJet& gm)
{
    const auto& g = *gm.lie;
    const auto& rep = *gm.rep;
    const auto& shape = gm.gamma.zero().shape();
    const int m = rep.dim();
    const int base = gm.certified;
    auto xr = xFromGammaRep(gm);
    QuantizeResult out{xr.x, JMatrix(), ClassicalR(gm.lie, shape, base - 1), {}};
    out.report.title = "representation quantization";
    out.report.append(xr.report);
    if (!xr.report.passed("invertible"))
        return out;
    JMatrix xinv = inverse(xr.x);

    std::vector<int> d2{m, m};
    JMatrix R = shiftedOnLegs(xr.x, rep, g, d2, {1}, 0) * placeOnLegs(xr.x, d2, {0}) * placeOnLegs(xinv, d2, {1}) *
                shiftedOnLegs(xinv, rep, g, d2, {0}, 1);
    out.R = R;

    auto& unit = out.report.add("unit-constant-term");
    compareGraded(unit, hbarCoefficient(R, 0) - jetIdentity(m * m, shape), base);

    out.report.append(checkRepRMatrix(R, rep, g, base));

    auto& lim = out.report.add("classical-limit");
    auto fromGamma = rFromGamma(gm);
    out.rGamma = fromGamma.r;
    JMatrix rr(m * m, m * m, JetScalar(shape));
    const int dim = g.dim();
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b)
            if (!fromGamma.r.at(a, b).isZero())
                rr += toJetMatrix(kron(rep.of(a), rep.of(b)), shape).scaled(fromGamma.r.at(a, b));
    JMatrix fromR = hbarCoefficient(R, 1).scaled(Rational(-conventions().limitSign));
    JMatrix diff = fromR - rr;
    for (int i = 0; i < diff.rows(); ++i)
        for (auto& e : diff.row(i))
            if (!vanishesTo(e.second, base - 1))
                lim.fail("(" + std::to_string(i) + "," + std::to_string(e.first) + ")", e.second.str());
    return out;
}

GammaMatrixJet rankOneGamma(const FunctionJet& f, int K, int D)
{
    auto shape = JetShape::get(1, D, K);
    auto rn = rNF(1, {derivativeJet(f, shape, 0)});
    GammaMatrixJet gm = rn.gamma;
    gm.lie = rankOneAlgebra();
    gm.rep = rankOneRep();
    return gm;
}

Report crossCheckRankOne(const FunctionJet& f, int K, int D)
{
    Report rep;
    rep.title = "rank-one cross-check";
    auto shape = JetShape::get(1, D, K);
    auto gm = rankOneGamma(f, K, D);
    const auto& rho = *gm.rep;
    auto fd = derivativeTable(f, shape);

    // c(lambda, lambda - hbar Y)^X with the Y-powers on the left. rho(X) is idempotent,
    // so c^X = 1 + rho(X)(c - 1) and the sum is 1 - rho(X) + sum_k rho(Y)^k rho(X) c_k.
    JetScalar h = JetScalar::hbar(shape);
    SymPoly c = dividedDifference(fd, SymPoly(shape, 1), SymPoly::symbol(shape, 1, 0, h), 1);
    JMatrix closed = jetIdentity(2, shape) - toJetMatrix(rho.of(0), shape);
    for (auto& [m, v] : c.terms()) {
        QMatrix y = qIdentity(2);
        for (int k = 0; k < m[0]; ++k)
            y = y * rho.of(1);
        closed += toJetMatrix(y * rho.of(0), shape).scaled(v);
    }
    auto xr = xFromGammaRep(gm);
    auto& xc = rep.add("x-closed-form");
    compareGraded(xc, xr.x - closed, gm.certified);

    auto j = gl1Twist(f, K, D);
    auto ru = j.permuted({1, 0}).inverse() * j;
    auto q = quantizeRep(gm);
    auto& rc = rep.add("R-universal-vs-rep");
    compareGraded(rc, evaluate(ru, rho) - q.R, std::min(gm.certified, pbwCertified(j)));
    return rep;
}

} // namespace dybx
