#include "dybx/classical.hpp"

#include "dybx/conventions.hpp"
#include "dybx/errors.hpp"
#include "dybx/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace dybx {

namespace {

struct StructureTable {
    // nz[i * d + j] = list of (k, c_{ij}^k) with c != 0
    std::vector<std::vector<std::pair<int, Rational>>> nz;
    int d;

    explicit StructureTable(const LieAlgebraSpec& g) : nz(g.dim() * g.dim()), d(g.dim())
    {
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                for (int k = 0; k < d; ++k)
                    if (!isZero(g.structure(i, j, k)))
                        nz[i * d + j].push_back({k, g.structure(i, j, k)});
    }
    const std::vector<std::pair<int, Rational>>& of(int i, int j) const { return nz[i * d + j]; }
};

std::string slot(const LieAlgebraSpec& g, std::initializer_list<int> idx)
{
    std::string s = "(";
    bool first = true;
    for (int i : idx) {
        s += (first ? "" : ",") + g.label(i);
        first = false;
    }
    return s + ")";
}

std::vector<JetScalar> unitVector(const LieAlgebraSpec& g, const JetShapePtr& shape, int b)
{
    std::vector<JetScalar> v(g.dim(), JetScalar(shape));
    v[b] = JetScalar(shape, 1);
    return v;
}

std::vector<JetScalar> jetBracket(const StructureTable& s, const std::vector<JetScalar>& u,
                                  const std::vector<JetScalar>& v)
{
    std::vector<JetScalar> out(s.d, JetScalar(u[0].shape()));
    for (int i = 0; i < s.d; ++i) {
        if (u[i].isZero())
            continue;
        for (int j = 0; j < s.d; ++j) {
            if (v[j].isZero() || s.of(i, j).empty())
                continue;
            JetScalar uv = u[i] * v[j];
            for (auto& [k, c] : s.of(i, j))
                out[k] += uv * c;
        }
    }
    return out;
}

CheckResult zeroWeightCheck(const ClassicalR& r, const StructureTable& s)
{
    const auto& g = *r.lie;
    const int d = g.dim();
    CheckResult res{"zero-weight", true, {}, {}};
    for (int y : g.abelian()) {
        std::vector<JetScalar> z(d * d, JetScalar(r.shape));
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) {
                const JetScalar& rab = r.at(a, b);
                if (rab.isZero())
                    continue;
                for (auto& [k, c] : s.of(y, a))
                    z[k * d + b] += rab * c;
                for (auto& [k, c] : s.of(y, b))
                    z[a * d + k] += rab * c;
            }
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b)
                if (!vanishesTo(z[a * d + b], r.certified))
                    res.fail("y=" + g.label(y) + " " + slot(g, {a, b}), z[a * d + b].str());
    }
    return res;
}

} // namespace

Rational wedgeWeight() { return conventions().wedgeFull ? Rational(1) : Rational(1, 2); }

ClassicalR::ClassicalR(LiePtr l, JetShapePtr s, int cert)
    : lie(std::move(l)), shape(std::move(s)), comps(lie->dim() * lie->dim(), JetScalar(shape)), certified(cert)
{
}

void ClassicalR::addWedge(const std::vector<JetScalar>& u, const std::vector<JetScalar>& v)
{
    const int d = lie->dim();
    Rational w = wedgeWeight();
    for (int a = 0; a < d; ++a) {
        if (u[a].isZero())
            continue;
        for (int b = 0; b < d; ++b) {
            if (v[b].isZero())
                continue;
            JetScalar uv = u[a] * v[b] * w;
            at(a, b) += uv;
            at(b, a) -= uv;
        }
    }
}

void ClassicalR::addWedge(int a, int b, const JetScalar& phi)
{
    JetScalar wphi = phi * wedgeWeight();
    at(a, b) += wphi;
    at(b, a) -= wphi;
}

bool ClassicalR::equals(const ClassicalR& o) const
{
    if (lie->dim() != o.lie->dim())
        return false;
    int trust = std::min(certified, o.certified);
    for (std::size_t i = 0; i < comps.size(); ++i)
        if (!vanishesTo(comps[i] - o.comps[i], trust))
            return false;
    return true;
}

std::string ClassicalR::str() const
{
    std::ostringstream os;
    const int d = lie->dim();
    bool first = true;
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            if (at(a, b).isZero())
                continue;
            os << (first ? "" : " + ") << "(" << at(a, b).str() << ")*" << lie->label(a) << "(x)" << lie->label(b);
            first = false;
        }
    return first ? "0" : os.str();
}

Report checkCDYBE(const ClassicalR& r)
{
    const auto& g = *r.lie;
    const int d = g.dim();
    StructureTable s(g);
    Report rep;
    rep.title = "classical dynamical Yang-Baxter";

    auto& skew = rep.add("skew-symmetry");
    for (int a = 0; a < d; ++a)
        for (int b = a; b < d; ++b) {
            JetScalar sum = r.at(a, b) + r.at(b, a);
            if (!vanishesTo(sum, r.certified))
                skew.fail(slot(g, {a, b}), sum.str());
        }

    std::vector<JetScalar> t(d * d * d, JetScalar(r.shape));
    auto T = [&](int a, int b, int c) -> JetScalar& { return t[(a * d + b) * d + c]; };
    std::vector<std::pair<int, int>> nz;
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            if (!r.at(a, b).isZero())
                nz.push_back({a, b});
    for (auto [a, b] : nz)
        for (auto [c, e] : nz) {
            auto& s13 = s.of(a, c);
            auto& s12 = s.of(b, c);
            auto& s23 = s.of(b, e);
            if (s13.empty() && s12.empty() && s23.empty())
                continue;
            JetScalar prod = r.at(a, b) * r.at(c, e);
            for (auto& [k, v] : s13) // [r12, r13]
                T(k, b, e) += prod * v;
            for (auto& [k, v] : s12) // [r12, r23]
                T(a, k, e) += prod * v;
            for (auto& [k, v] : s23) // [r13, r23]
                T(a, c, k) += prod * v;
        }
    for (int i = 0; i < g.abelianDim(); ++i) {
        int y = g.abelian()[i];
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c) {
                JetScalar dr = r.at(b, c).derivative(i);
                if (dr.isZero())
                    continue;
                T(y, b, c) += dr;
                T(b, y, c) -= dr;
                T(b, c, y) += dr;
            }
    }
    auto& cd = rep.add("cdybe");
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c)
                if (!vanishesTo(T(a, b, c), r.certified - 1))
                    cd.fail(slot(g, {a, b, c}), T(a, b, c).str());
    cd.detail = "up to t-degree " + std::to_string(r.certified - 1);

    rep.checks.push_back(zeroWeightCheck(r, s));
    return rep;
}

bool inNormalizer(const LieAlgebraSpec& g, const std::vector<JetScalar>& x, int trust)
{
    const int d = g.dim();
    for (int y : g.abelian())
        for (int k = 0; k < d; ++k) {
            if (g.isAbelianIndex(k))
                continue;
            JetScalar v(x[0].shape());
            for (int b = 0; b < d; ++b)
                if (!isZero(g.structure(b, y, k)))
                    v += x[b] * g.structure(b, y, k);
            if (!vanishesTo(v, trust))
                return false;
        }
    return true;
}

ClassicalR PFamily::toR() const
{
    ClassicalR r(lie, shape, certified);
    const int n = lie->abelianDim();
    for (int i = 0; i < n; ++i)
        r.addWedge(p[i], unitVector(*lie, shape, lie->abelian()[i]));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            r.at(lie->abelian()[i], lie->abelian()[j]) += omega[i][j];
    return r;
}

DegeneracyResult completeDegeneracy(const ClassicalR& r)
{
    const auto& g = *r.lie;
    const int d = g.dim();
    const int n = g.abelianDim();
    StructureTable s(g);
    DegeneracyResult out;
    out.report.title = "complete degeneracy";
    out.report.checks.push_back(zeroWeightCheck(r, s));

    auto& deg = out.report.add("degenerate");
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            if (!g.isAbelianIndex(a) && !g.isAbelianIndex(b) && !vanishesTo(r.at(a, b), r.certified))
                deg.fail(slot(g, {a, b}), r.at(a, b).str());

    PFamily fam{r.lie, r.shape, {}, {}, r.certified};
    Rational w = wedgeWeight();
    fam.p.assign(n, std::vector<JetScalar>(d, JetScalar(r.shape)));
    fam.omega.assign(n, std::vector<JetScalar>(n, JetScalar(r.shape)));
    for (int i = 0; i < n; ++i) {
        int yi = g.abelian()[i];
        for (int b = 0; b < d; ++b)
            if (!g.isAbelianIndex(b))
                fam.p[i][b] = r.at(b, yi) * (Rational(1) / w);
        for (int j = 0; j < n; ++j)
            fam.omega[i][j] = r.at(yi, g.abelian()[j]);
    }
    auto& inWedge = out.report.add("normalizer-wedge-a");
    for (int i = 0; i < n; ++i)
        if (!inNormalizer(g, fam.p[i], r.certified))
            inWedge.fail("p_" + std::to_string(i + 1), "not in n(a)");
    if (deg.pass && !fam.toR().equals(r))
        inWedge.fail("rebuild", "r is not of the form sum_i p_i ^ y_i + omega");
    out.completelyDegenerate = out.report.passed("zero-weight") && deg.pass;
    if (deg.pass)
        out.family = std::move(fam);
    return out;
}

Report checkFlatness(const PFamily& fam)
{
    const auto& g = *fam.lie;
    const int d = g.dim();
    const int n = g.abelianDim();
    StructureTable s(g);
    Report rep;
    rep.title = "flatness";
    auto& norm = rep.add("normalizer");
    for (int i = 0; i < n; ++i)
        if (!inNormalizer(g, fam.p[i], fam.certified))
            norm.fail("p_" + std::to_string(i + 1), "not in n(a)");

    // Full p_i: the a^a part is split evenly so that sum_i p_i ^ y_i reproduces omega.
    Rational half = Rational(1, 2) / wedgeWeight();
    auto full = fam.p;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            full[i][g.abelian()[j]] += fam.omega[j][i] * half;

    auto curvature = [&](const std::vector<std::vector<JetScalar>>& p, int i, int j) {
        // d_i p_j - d_j p_i - [p_i, p_j], the integrability condition of d_i gamma = p_i gamma
        auto br = jetBracket(s, p[i], p[j]);
        std::vector<JetScalar> k(d, JetScalar(fam.shape));
        for (int b = 0; b < d; ++b)
            k[b] = p[j][b].derivative(i) - p[i][b].derivative(j) - br[b];
        return k;
    };

    const int trust = fam.certified - 1;
    auto& modA = rep.add("flatness-mod-a");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            auto k = curvature(fam.p, i, j);
            for (int b = 0; b < d; ++b)
                if (!g.isAbelianIndex(b) && !vanishesTo(k[b], trust))
                    modA.fail("K_" + std::to_string(i + 1) + std::to_string(j + 1) + "[" + g.label(b) + "]", k[b].str());
        }

    std::vector<JetScalar> t(d * d * d, JetScalar(fam.shape));
    auto T = [&](int a, int b, int c) -> JetScalar& { return t[(a * d + b) * d + c]; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j)
                continue;
            auto k = curvature(full, i, j);
            int yi = g.abelian()[i], yj = g.abelian()[j];
            for (int b = 0; b < d; ++b) {
                if (k[b].isZero())
                    continue;
                T(b, yi, yj) += k[b];
                T(yi, b, yj) -= k[b];
                T(yi, yj, b) += k[b];
            }
        }
    auto& fullCheck = rep.add("flatness-full");
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c)
                if (!vanishesTo(T(a, b, c), trust))
                    fullCheck.fail(slot(g, {a, b, c}), T(a, b, c).str());
    return rep;
}

GammaResult rFromGamma(const GammaMatrixJet& gm)
{
    const auto& g = *gm.lie;
    const auto& rho = *gm.rep;
    const int d = g.dim();
    const int n = g.abelianDim();
    const auto& shape = gm.gamma.zero().shape();
    if (shape->vars() != n)
        throw DomainError("gamma jets must have one variable per basis element of a");
    if (rho.basisSize() != d || gm.gamma.rows() != rho.dim() || gm.gamma.cols() != rho.dim())
        throw DomainError("gamma does not match the representation");
    const int trust = gm.certified - 1;
    JMatrix ginv = inverse(gm.gamma);

    auto nbasis = normalizer(g);
    std::vector<QMatrix> nmats;
    for (auto& v : nbasis)
        nmats.push_back(rho.ofVector(v));
    SpanDecomposer inN(nmats);

    GammaResult out{ClassicalR(gm.lie, shape, trust), {}, {}, {}};
    out.report.title = "r from gamma";
    out.p.assign(n, std::vector<JetScalar>(d, JetScalar(shape)));
    for (int i = 0; i < n; ++i) {
        JMatrix pm = derivative(gm.gamma, i) * ginv;
        auto c = inN.decompose(pm, trust);
        if (!c)
            throw DomainError("d_" + std::to_string(i + 1) + " gamma gamma^-1 is not in rho(n(a))");
        for (std::size_t j = 0; j < nbasis.size(); ++j)
            for (int b = 0; b < d; ++b)
                if (!isZero(nbasis[j][b]))
                    out.p[i][b] += (*c)[j] * nbasis[j][b];
        out.r.addWedge(out.p[i], unitVector(g, shape, g.abelian()[i]));
    }

    std::vector<QMatrix> amats;
    for (int y : g.abelian())
        amats.push_back(rho.of(y));
    SpanDecomposer inA(amats);
    out.abar.assign(n, std::vector<JetScalar>(n, JetScalar(shape)));
    auto& normal = out.report.add("gamma-in-normalizer");
    for (int i = 0; i < n; ++i) {
        JMatrix m = gm.gamma * toJetMatrix(rho.of(g.abelian()[i]), shape) * ginv;
        auto c = inA.decompose(m, gm.certified);
        if (!c) {
            normal.fail("y_" + std::to_string(i + 1), "gamma y gamma^-1 not in a");
            continue;
        }
        for (int j = 0; j < n; ++j)
            out.abar[j][i] = (*c)[j];
    }
    auto& grad = out.report.add("gradient");
    grad.detail = "induced action on a is the Jacobian of some f";
    if (normal.pass)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = j + 1; k < n; ++k) {
                    JetScalar diff = out.abar[j][i].derivative(k) - out.abar[k][i].derivative(j);
                    if (!vanishesTo(diff, gm.certified - 1))
                        grad.fail("not weight zero: column " + std::to_string(i + 1) + ", d" + std::to_string(k + 1) +
                                      " vs d" + std::to_string(j + 1),
                                  diff.str());
                }
    return out;
}

Reconstruction reconstructGamma(const PFamily& fam, const MatrixRep& rep)
{
    const auto& g = *fam.lie;
    const int d = g.dim();
    const int n = g.abelianDim();
    const auto& shape = fam.shape;
    const int m = rep.dim();
    Reconstruction out{JMatrix(), ClassicalR(fam.lie, shape, fam.certified), {}, {}};
    out.report.title = "reconstruct gamma";
    auto flat = checkFlatness(fam);
    out.report.checks.push_back(*flat.find("flatness-mod-a"));

    std::vector<JMatrix> pm;
    for (int i = 0; i < n; ++i) {
        JMatrix acc(m, m, JetScalar(shape));
        for (int b = 0; b < d; ++b)
            if (!g.isAbelianIndex(b) && !fam.p[i][b].isZero())
                acc += toJetMatrix(rep.of(b), shape).scaled(fam.p[i][b]);
        pm.push_back(std::move(acc));
    }

    // Picard iteration of G = 1 + path integral of p G; each pass fixes one more degree.
    const int cap = shape->degCap();
    const int gcert = std::min(cap, fam.certified + 1);
    JMatrix gam = jetIdentity(m, shape);
    for (int pass = 0; pass <= cap; ++pass) {
        std::vector<JMatrix> q;
        for (int i = 0; i < n; ++i)
            q.push_back(pm[i] * gam);
        JMatrix next = jetIdentity(m, shape);
        for (int r = 0; r < m; ++r)
            for (int c = 0; c < m; ++c) {
                JetScalar e = next.at(r, c);
                for (int mi = 0; mi < shape->monomialCount(); ++mi) {
                    const auto& alpha = shape->monomial(mi);
                    int j = -1;
                    for (int v = 0; v < n; ++v)
                        if (alpha[v])
                            j = v;
                    if (j < 0)
                        continue;
                    auto prev = alpha;
                    --prev[j];
                    for (int k = 0; k <= shape->hbarCap(); ++k) {
                        Rational v = q[j].at(r, c).coeff(prev, k);
                        if (!isZero(v))
                            e.setCoeff(alpha, k, v / Rational(alpha[j]));
                    }
                }
                next.set(r, c, e);
            }
        gam = next;
    }
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c)
            if (const JetScalar* e = gam.find(r, c)) {
                JetScalar capped = *e;
                capped.capAllEffDegree(gcert);
                gam.set(r, c, capped);
            }
    out.gammaHat = gam;

    GammaMatrixJet gh{fam.lie, std::make_shared<MatrixRep>(rep), gam, gcert};
    auto fromHat = rFromGamma(gh);
    out.rHat = fromHat.r;

    ClassicalR r = fam.toR();
    const int trust = std::min(r.certified, out.rHat.certified);
    auto& inAA = out.report.add("residue-in-a-wedge-a");
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            if (g.isAbelianIndex(a) && g.isAbelianIndex(b))
                continue;
            JetScalar diff = r.at(a, b) - out.rHat.at(a, b);
            if (!vanishesTo(diff, trust))
                inAA.fail(slot(g, {a, b}), diff.str());
        }
    out.residue.assign(n, std::vector<JetScalar>(n, JetScalar(shape)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int yi = g.abelian()[i], yj = g.abelian()[j];
            out.residue[i][j] = r.at(yi, yj) - out.rHat.at(yi, yj);
        }
    auto& closed = out.report.add("residue-closed");
    closed.detail = n <= 2 ? "vacuous for dim a <= 2" : "";
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                auto& C = out.residue;
                JetScalar dc = C[i][j].derivative(k) + C[j][k].derivative(i) + C[k][i].derivative(j);
                if (!vanishesTo(dc, trust - 1))
                    closed.fail("(" + std::to_string(i + 1) + std::to_string(j + 1) + std::to_string(k + 1) + ")",
                                dc.str());
            }
    return out;
}

RNF rNF(int n, const std::vector<JetScalar>& f)
{
    if (static_cast<int>(f.size()) != n || n < 1)
        throw DomainError("rNF needs n function jets");
    const auto& shape = f[0].shape();
    if (shape->vars() != n)
        throw DomainError("f jets must have n variables");
    auto lie = std::make_shared<LieAlgebraSpec>(glSemidirect(n));
    auto rep = std::make_shared<MatrixRep>(glSemidirectDefining(n));
    JMatrix gamma(n + 1, n + 1, JetScalar(shape));
    int cert = shape->degCap();
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) {
            JetScalar djk = f[j].derivative(k);
            cert = std::min(cert, djk.minEffDegree());
            gamma.set(k, j, djk);
        }
    gamma.set(n, n, JetScalar(shape, 1));
    std::vector<std::vector<Rational>> jac(n, std::vector<Rational>(n, Rational(0)));
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j)
            jac[k][j] = gamma.at(k, j).constantTerm();
    if (rank<Rational>(jac) < n)
        throw DomainError("f'(0) is singular");
    GammaMatrixJet gm{lie, rep, gamma, cert};
    auto result = rFromGamma(gm);
    return RNF{lie, rep, gm, std::move(result)};
}

} // namespace dybx
