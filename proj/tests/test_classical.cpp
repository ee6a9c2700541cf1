#include "dybx/classical.hpp"
#include "dybx/conventions.hpp"
#include "dybx/errors.hpp"
#include "dybx/formal.hpp"

#include <doctest.h>

#include <random>

using namespace dybx;

namespace {

struct ConventionGuard {
    Conventions saved = conventions();
    ~ConventionGuard() { conventions() = saved; }
};

LiePtr gl(int n) { return std::make_shared<const LieAlgebraSpec>(glSemidirect(n)); }

PFamily emptyFamily(LiePtr g, JetShapePtr s, int certified)
{
    int n = g->abelianDim();
    PFamily p{g, s, {}, {}, certified};
    p.p.assign(n, std::vector<JetScalar>(g->dim(), JetScalar(s)));
    p.omega.assign(n, std::vector<JetScalar>(n, JetScalar(s)));
    return p;
}

std::vector<JetScalar> bracket(const LieAlgebraSpec& g, const std::vector<JetScalar>& u,
                               const std::vector<JetScalar>& v)
{
    std::vector<JetScalar> out(g.dim(), JetScalar(u[0].shape()));
    for (int a = 0; a < g.dim(); ++a)
        for (int b = 0; b < g.dim(); ++b)
            for (int k = 0; k < g.dim(); ++k)
                if (g.structure(a, b, k) != 0)
                    out[k] += u[a] * v[b] * g.structure(a, b, k);
    return out;
}

/// d_i p_j - d_j p_i + sign [p_i, p_j], projected away from the abelian part.
bool curvatureVanishesModA(const LieAlgebraSpec& g, const std::vector<std::vector<JetScalar>>& p, int sign,
                           int trust)
{
    for (int i = 0; i < g.abelianDim(); ++i)
        for (int j = 0; j < g.abelianDim(); ++j) {
            auto br = bracket(g, p[i], p[j]);
            for (int a = 0; a < g.dim(); ++a) {
                if (g.isAbelianIndex(a))
                    continue;
                auto c = p[j][a].derivative(i) - p[i][a].derivative(j) + br[a] * Rational(sign);
                if (!vanishesTo(c, trust))
                    return false;
            }
        }
    return true;
}

} // namespace

TEST_CASE("CDYBE on rank-one families")
{
    auto s = JetShape::get(1, 5, 0);
    auto g = rankOneAlgebra();
    ClassicalR zero(g, s, 5);
    CHECK(checkCDYBE(zero).pass());
    std::mt19937 rng(53);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 6);
    for (int trial = 0; trial < 5; ++trial) {
        JetScalar phi(s);
        for (int k = 0; k <= 5; ++k) {
            Rational c(num(rng), den(rng));
            c.canonicalize();
            phi += JetScalar::monomial(s, {k}, 0, c);
        }
        ClassicalR r(g, s, 5);
        r.addWedge(0, 1, phi);
        CHECK(r.at(0, 1) == -r.at(1, 0));
        CHECK(checkCDYBE(r).pass());
    }
}

TEST_CASE("CDYBE detects a non-solution")
{
    auto s = JetShape::get(2, 3, 0);
    auto g = gl(2);
    auto t = JetScalar::variable(s, 0);
    auto r = rNF(2, {t + t * JetScalar::variable(s, 1), JetScalar::variable(s, 1)}).result.r;
    REQUIRE(checkCDYBE(r).pass());
    r.addWedge(g->find("E12"), g->find("E21"), t + JetScalar(s, Rational(1)));
    CHECK_FALSE(checkCDYBE(r).pass());
    ClassicalR asym(g, s, 3);
    asym.at(0, 1) = JetScalar(s, Rational(1));
    CHECK_FALSE(checkCDYBE(asym).pass());
}

TEST_CASE("rNF in rank one is (f''/f') X^Y")
{
    auto s = JetShape::get(1, 5, 0);
    auto t = JetScalar::variable(s, 0);
    auto one = JetScalar(s, Rational(1));
    for (auto f : {t, t + t * t * Rational(1, 2), t.exp() - one, t + t * t * t * Rational(2, 3)}) {
        auto rn = rNF(1, {f});
        auto phi = f.derivative(0).derivative(0) * f.derivative(0).inverse();
        ClassicalR want(rankOneAlgebra(), s, rn.result.r.certified);
        want.addWedge(0, 1, phi);
        CHECK(rn.result.r.equals(want));
        auto deg = completeDegeneracy(rn.result.r);
        CHECK(deg.completelyDegenerate);
        REQUIRE(deg.family.has_value());
        CHECK(vanishesTo(deg.family->p[0][0] - phi, rn.result.r.certified));
    }
    CHECK(rNF(1, {t}).result.r.equals(ClassicalR(rankOneAlgebra(), s, 4)));
    CHECK_THROWS_AS(rNF(1, {t * t}), DomainError);
}

TEST_CASE("rFromGamma outputs are completely degenerate solutions (property)")
{
    auto s = JetShape::get(2, 4, 0);
    auto t1 = JetScalar::variable(s, 0), t2 = JetScalar::variable(s, 1);
    std::mt19937 rng(59);
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
    auto q = [&] {
        Rational c(num(rng), den(rng));
        c.canonicalize();
        return c;
    };
    for (int trial = 0; trial < 3; ++trial) {
        std::vector<JetScalar> f{t1 + t1 * t1 * q() + t1 * t2 * q() + t2 * t2 * q(),
                                 t2 + t1 * t1 * q() + t1 * t2 * q() + t1 * t1 * t2 * q()};
        auto rn = rNF(2, f);
        CHECK(rn.result.report.pass());
        CHECK(checkCDYBE(rn.result.r).pass());
        auto deg = completeDegeneracy(rn.result.r);
        CHECK(deg.report.pass());
        REQUIRE(deg.family.has_value());
        CHECK(checkFlatness(*deg.family).pass());
        auto rec = reconstructGamma(*deg.family, *rn.rep);
        CHECK(rec.report.pass());
        CHECK(rec.rHat.equals(rn.result.r));
    }
    // Gamma = 1 gives r = 0.
    auto g = gl(2);
    auto rep = std::make_shared<const MatrixRep>(glSemidirectDefining(2));
    auto res = rFromGamma(GammaMatrixJet{g, rep, jetIdentity(3, s), 4});
    CHECK(res.r.equals(ClassicalR(g, s, 3)));
}

TEST_CASE("the flatness sign")
{
    // With p_i = d_i gamma gamma^-1 the commutator enters with a minus sign.
    auto s = JetShape::get(2, 4, 0);
    auto t1 = JetScalar::variable(s, 0), t2 = JetScalar::variable(s, 1);
    auto rn = rNF(2, {t1 + t1 * t2, t2 + t1 * t1 * Rational(1, 2)});
    auto& g = *rn.lie;
    int trust = rn.result.r.certified - 1;
    CHECK(curvatureVanishesModA(g, rn.result.p, -1, trust));
    CHECK_FALSE(curvatureVanishesModA(g, rn.result.p, +1, trust));
}

TEST_CASE("degeneracy and flatness negatives")
{
    auto s = JetShape::get(2, 3, 0);
    auto g = gl(2);
    ClassicalR r(g, s, 3);
    r.addWedge(g->find("E12"), g->find("E21"), JetScalar(s, Rational(1)));
    CHECK_FALSE(completeDegeneracy(r).completelyDegenerate);

    auto commuting = emptyFamily(g, s, 3);
    commuting.p[0][g->find("E11")] = JetScalar(s, Rational(1));
    commuting.p[1][g->find("E22")] = JetScalar(s, Rational(1));
    CHECK(checkFlatness(commuting).pass());

    // p_1 = t2 E11, p_2 = E11: d_1 p_2 - d_2 p_1 = -E11.
    auto bent = emptyFamily(g, s, 3);
    bent.p[0][g->find("E11")] = JetScalar::variable(s, 1);
    bent.p[1][g->find("E11")] = JetScalar(s, Rational(1));
    CHECK_FALSE(checkFlatness(bent).pass());
}

TEST_CASE("reconstruction returns the a^a residue")
{
    auto s = JetShape::get(2, 4, 0);
    auto t1 = JetScalar::variable(s, 0), t2 = JetScalar::variable(s, 1);
    auto rn = rNF(2, {t1 + t1 * t2, t2 + t2 * t2});
    auto r = rn.result.r;
    auto c = JetScalar(s, Rational(3, 2)) + t1 * t2;
    r.addWedge(rn.lie->find("e1"), rn.lie->find("e2"), c);
    auto deg = completeDegeneracy(r);
    REQUIRE(deg.family.has_value());
    auto rec = reconstructGamma(*deg.family, *rn.rep);
    CHECK(rec.report.pass());
    CHECK(vanishesTo(rec.residue[0][1] - c, rn.result.r.certified));
    CHECK(vanishesTo(rec.residue[1][0] + c, rn.result.r.certified));

    // In three variables a non-closed residue is reported.
    auto s3 = JetShape::get(3, 3, 0);
    auto g3 = gl(3);
    auto rep3 = glSemidirectDefining(3);
    for (auto [var, closed] : {std::pair{2, true}, std::pair{0, false}}) {
        ClassicalR w(g3, s3, 3);
        w.addWedge(g3->find("e2"), g3->find("e3"), JetScalar::variable(s3, var));
        auto d = completeDegeneracy(w);
        REQUIRE(d.family.has_value());
        auto rc = reconstructGamma(*d.family, rep3);
        REQUIRE(rc.report.find("residue-closed"));
        CHECK(rc.report.find("residue-closed")->pass == closed);
    }
}

TEST_CASE("half wedge breaks the gl(2) examples")
{
    ConventionGuard guard;
    auto s = JetShape::get(2, 3, 0);
    auto t1 = JetScalar::variable(s, 0), t2 = JetScalar::variable(s, 1);
    std::vector<JetScalar> f{t1 + t1 * t2, t2 + t1 * t1 * Rational(1, 2)};
    CHECK(checkCDYBE(rNF(2, f).result.r).pass());
    conventions().wedgeFull = false;
    CHECK_FALSE(checkCDYBE(rNF(2, f).result.r).pass());
}
