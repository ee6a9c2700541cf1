#include "dybx/builtin.hpp"
#include "dybx/conventions.hpp"
#include "dybx/dyntwist.hpp"
#include "dybx/errors.hpp"

#include <doctest.h>

#include <random>

using namespace dybx;

namespace {

SubgroupPtr cyclic(GroupPtr g, const std::string& gen) { return subgroupGeneratedBy(g, {g->find(gen)}); }

/// Random sum_mu c_mu(lambda) P_mu with c_0 = 1 and every c_mu nonzero.
DynamicalMap randomAbelian(SubgroupPtr a, std::mt19937& rng)
{
    std::uniform_int_distribution<int> c(1, 5), k(0, a->exponent() - 1);
    auto P = primitiveIdempotents(*a);
    DynamicalMap x(a, 1);
    for (int l = 0; l < a->characterCount(); ++l) {
        TensorElement v = P[0];
        for (int mu = 1; mu < a->characterCount(); ++mu)
            v += P[mu] * (Cyclotomic(c(rng)) * Cyclotomic::zeta(a->exponent(), k(rng)));
        x.set(l, v);
    }
    return x;
}

DynamicalMap constantElement(SubgroupPtr a, const std::string& label)
{
    auto G = a->parent();
    return DynamicalMap::constant(a, TensorElement::basis(G, {G->find(label)}));
}

struct ConventionGuard {
    Conventions saved = conventions();
    ~ConventionGuard() { conventions() = saved; }
};

} // namespace

TEST_CASE("trivial twist")
{
    auto S3 = symmetricGroup(3);
    auto A = cyclic(S3, "(123)");
    auto one = DynamicalMap::constant(A, TensorElement::unit(S3, 2));
    CHECK(checkTwist(one).pass());
    CHECK(checkQDYBE(dynamicalR(one)).pass());
    CHECK(dynamicalR(one) == one);
}

TEST_CASE("twistFromX gives twists (property)")
{
    std::mt19937 rng(17);
    auto S3 = symmetricGroup(3);
    auto D4 = dihedralGroup(4);
    struct Case {
        SubgroupPtr a;
        std::string normalizer;
    };
    for (auto c : {Case{cyclic(S3, "(123)"), "(12)"}, Case{cyclic(D4, "r"), "s"}}) {
        for (int trial = 0; trial < 4; ++trial) {
            auto x = randomAbelian(c.a, rng);
            if (trial % 2)
                x = constantElement(c.a, c.normalizer) * x;
            auto t = twistFromX(x);
            CHECK(t.zeroWeight);
            CHECK(checkTwist(t.twist).pass());
            CHECK(checkQDYBE(dynamicalR(t.twist)).pass());
        }
    }
}

TEST_CASE("gauge transformations compose")
{
    std::mt19937 rng(23);
    auto S3 = symmetricGroup(3);
    auto A = cyclic(S3, "(123)");
    auto J = twistFromX(constantElement(A, "(12)") * randomAbelian(A, rng)).twist;
    auto x = randomAbelian(A, rng), y = randomAbelian(A, rng);
    auto jx = gauge(J, x);
    CHECK(checkTwist(jx).pass());
    CHECK(gauge(jx, y) == gauge(J, y * x));
    CHECK(gauge(jx, x.inverse()) == J);
    // x must have zero weight
    CHECK_THROWS_AS(gauge(J, constantElement(A, "(12)")), DomainError);
}

TEST_CASE("a perturbed twist fails where it was perturbed")
{
    auto S3 = symmetricGroup(3);
    auto A = cyclic(S3, "(123)");
    auto J = DynamicalMap::constant(A, TensorElement::unit(S3, 2));
    auto bad = J;
    auto two = TensorElement::unit(S3, 2);
    two *= Cyclotomic(2);
    bad.set(0, two);
    auto rep = checkTwist(bad);
    CHECK_FALSE(rep.pass());
    auto where = rep.failingLambdas("counit");
    REQUIRE_FALSE(where.empty());
    for (int l : where)
        CHECK(l == 0);
}

TEST_CASE("vertex-IRF and IRF-vertex are inverse")
{
    std::mt19937 rng(29);
    for (auto [G, gen, n] : {std::tuple{symmetricGroup(3), "(123)", "(12)"}, std::tuple{dihedralGroup(4), "r", "s"}}) {
        auto A = cyclic(G, gen);
        auto trivial = subgroupGeneratedBy(G, {});
        auto jbar = DynamicalMap::constant(trivial, TensorElement::unit(G, 2));
        auto x = constantElement(A, n) * randomAbelian(A, rng);
        auto fwd = vertexIRF(jbar, x);
        REQUIRE(fwd.zeroWeight);
        CHECK(fwd.twist == twistFromX(x).twist);
        auto back = irfVertex(fwd.twist, x.inverse(), trivial);
        CHECK(back.zeroWeight);
        CHECK(back.twist == jbar);
        CHECK(checkRmatRelation(dynamicalR(fwd.twist), jbar, x).pass());
    }
}

TEST_CASE("a non-zero-weight result is reported")
{
    auto S3 = symmetricGroup(3);
    auto A = cyclic(S3, "(123)");
    auto trivial = subgroupGeneratedBy(S3, {});
    // x(lambda) = (l + 2) - (l + 1)(12) has counit 1 but does not normalize C[A]
    DynamicalMap x(A, 1);
    for (int l = 0; l < 3; ++l)
        x.set(l, TensorElement::unit(S3, 1) * Cyclotomic(l + 2) +
                     TensorElement::basis(S3, {S3->find("(12)")}, Cyclotomic(-(l + 1))));
    auto res = vertexIRF(DynamicalMap::constant(trivial, TensorElement::unit(S3, 2)), x);
    CHECK_FALSE(res.zeroWeight);
    CHECK_FALSE(res.detail.empty());
}

TEST_CASE("finite-group R-matrices satisfy both QDYBE shift patterns")
{
    ConventionGuard guard;
    std::mt19937 rng(31);
    auto D4 = dihedralGroup(4);
    auto A = cyclic(D4, "r");
    auto R = dynamicalR(twistFromX(constantElement(A, "s") * randomAbelian(A, rng)).twist);
    conventions().qdybeFelder = false;
    CHECK(checkQDYBE(R).pass());
    conventions().qdybeFelder = true;
    CHECK(checkQDYBE(R).pass());
    // The central subgroup <r^2> as well.
    auto Z = cyclic(D4, "r^2");
    auto Rz = dynamicalR(twistFromX(constantElement(Z, "s") * randomAbelian(Z, rng)).twist);
    CHECK(checkQDYBE(Rz).pass());
    conventions().qdybeFelder = false;
    CHECK(checkQDYBE(Rz).pass());
}

TEST_CASE("shift of a constant map")
{
    auto S3 = symmetricGroup(3);
    auto A = cyclic(S3, "(123)");
    auto c = DynamicalMap::constant(A, TensorElement::basis(S3, {S3->find("(12)"), S3->identity()}));
    CHECK(shift(c, 1, -1) == c);
    CHECK(shift(c, 0, 1, true) == c);
}
