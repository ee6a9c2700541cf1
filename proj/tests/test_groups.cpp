#include "dybx/builtin.hpp"
#include "dybx/errors.hpp"
#include "dybx/tensor.hpp"

#include <doctest.h>

#include <random>

using namespace dybx;

namespace {

TensorElement randomElement(GroupPtr g, int order, std::mt19937& rng, int terms = 4)
{
    std::uniform_int_distribution<int> el(0, g->size() - 1), c(-3, 3);
    TensorElement t(g, order);
    for (int i = 0; i < terms; ++i) {
        std::vector<int> legs(order);
        for (auto& l : legs)
            l = el(rng);
        t.add(legs, Cyclotomic(c(rng)));
    }
    return t;
}

} // namespace

TEST_CASE("builtin groups satisfy the group axioms")
{
    for (auto [name, size] : {std::pair{"S3", 6}, {"D4", 8}, {"Z5", 5}, {"Z2xZ2", 4}, {"S4", 24}}) {
        auto g = builtinGroup(name);
        REQUIRE(g);
        CHECK(g->size() == size);
        int e = g->identity();
        for (int a = 0; a < g->size(); ++a) {
            CHECK(g->mul(a, e) == a);
            CHECK(g->mul(a, g->inv(a)) == e);
            for (int b = 0; b < g->size(); ++b)
                for (int c = 0; c < g->size(); ++c)
                    CHECK(g->mul(g->mul(a, b), c) == g->mul(a, g->mul(b, c)));
        }
    }
    CHECK(builtinGroup("nope") == nullptr);
    CHECK(directProduct(*symmetricGroup(3), *cyclicGroup(2))->size() == 12);
}

TEST_CASE("invalid Cayley tables are rejected")
{
    CHECK_THROWS_AS(FiniteGroup({{0, 1}, {0, 1}}), ParseError);
    CHECK_THROWS_AS(FiniteGroup({{0, 1}, {1}}), ParseError);
}

TEST_CASE("dihedral relation s r s^-1 = r^-1")
{
    auto d = dihedralGroup(4);
    int r = d->find("r"), s = d->find("s");
    REQUIRE(r >= 0);
    REQUIRE(s >= 0);
    CHECK(d->conjugate(s, r) == d->inv(r));
    CHECK(d->order(r) == 4);
}

TEST_CASE("characters of abelian subgroups")
{
    auto g = builtinGroup("Z2xZ2");
    auto a = subgroupGeneratedBy(g, {1, 2, 3});
    CHECK(a->size() == 4);
    CHECK(a->exponent() == 2);
    auto s4 = symmetricGroup(4);
    auto c4 = subgroupGeneratedBy(s4, {s4->find("(1234)")});
    for (auto A : {a, c4}) {
        for (int chi = 0; chi < A->characterCount(); ++chi) {
            // homomorphism
            for (int x : A->elements())
                for (int y : A->elements())
                    CHECK(A->characterValue(chi, A->group().mul(x, y)) ==
                          A->characterValue(chi, x) * A->characterValue(chi, y));
            // group law of A*
            for (int psi = 0; psi < A->characterCount(); ++psi)
                for (int x : A->elements())
                    CHECK(A->characterValue(A->addCharacters(chi, psi), x) ==
                          A->characterValue(chi, x) * A->characterValue(psi, x));
            CHECK(A->addCharacters(chi, A->negateCharacter(chi)) == 0);
            CHECK(A->characterIndex(A->characterTuple(chi)) == chi);
        }
    }
}

TEST_CASE("primitive idempotents")
{
    auto s3 = symmetricGroup(3);
    auto d4 = dihedralGroup(4);
    for (auto A : {subgroupGeneratedBy(s3, {s3->find("(123)")}), subgroupGeneratedBy(d4, {d4->find("r")}),
                   subgroupGeneratedBy(d4, {d4->find("s"), d4->find("r^2")})}) {
        auto G = A->parent();
        auto P = primitiveIdempotents(*A);
        REQUIRE(static_cast<int>(P.size()) == A->characterCount());
        TensorElement sum(G, 1);
        for (int m = 0; m < A->characterCount(); ++m) {
            sum += P[m];
            for (int n = 0; n < A->characterCount(); ++n)
                CHECK(P[m] * P[n] == (m == n ? P[m] : TensorElement(G, 1)));
            for (int x : A->elements())
                CHECK(TensorElement::basis(G, {x}) * P[m] == P[m] * A->characterValue(m, x));
        }
        CHECK(sum == TensorElement::unit(G, 1));
    }
}

TEST_CASE("Hopf structure of the group algebra (property)")
{
    auto g = symmetricGroup(3);
    std::mt19937 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        auto a = randomElement(g, 1, rng), b = randomElement(g, 1, rng);
        CHECK((a * b).coproduct(0) == a.coproduct(0) * b.coproduct(0));
        CHECK(a.coproduct(0).counit(0) == a);
        CHECK(a.coproduct(0).counit(1) == a);
        CHECK(a.coproduct(0).coproduct(0) == a.coproduct(0).coproduct(1));
        auto t = randomElement(g, 2, rng);
        CHECK(t.flip(0, 1).flip(0, 1) == t);
        CHECK(t.embed(3, {0, 2}).counit(1) == t);
    }
}

TEST_CASE("inverses and weights")
{
    auto g = symmetricGroup(3);
    auto A = subgroupGeneratedBy(g, {g->find("(123)")});
    auto one = TensorElement::unit(g, 1);
    auto x = one + TensorElement::basis(g, {g->find("(12)")}, Cyclotomic(Rational(1, 2)));
    CHECK(x * x.inverse() == one);
    CHECK(x.inverse() * x == one);
    auto sing = one + TensorElement::basis(g, {g->find("(12)")});
    int kernel = 0;
    CHECK_FALSE(sing.tryInverse(&kernel).has_value());
    CHECK(kernel > 0);
    CHECK_THROWS_AS(sing.inverse(), DomainError);

    std::mt19937 rng(9);
    for (int trial = 0; trial < 5; ++trial) {
        auto y = randomElement(g, 2, rng, 6);
        auto parts = weightDecompose(y, *A, 0);
        TensorElement sum(g, 2);
        for (int m = 0; m < A->characterCount(); ++m) {
            sum += parts[m];
            // a y_mu a^-1 = mu(a) y_mu on leg 0
            for (int a : A->elements()) {
                auto aa = TensorElement::basis(g, {a, g->identity()});
                auto ai = TensorElement::basis(g, {g->inv(a), g->identity()});
                CHECK(aa * parts[m] * ai == parts[m] * A->characterValue(m, a));
            }
        }
        CHECK(sum == y);
    }
    auto P = primitiveIdempotents(*A);
    CHECK(isZeroWeight(P[1].tensor(P[2]), *A));
    CHECK_FALSE(isZeroWeight(TensorElement::basis(g, {g->find("(12)"), g->identity()}), *A));
}
