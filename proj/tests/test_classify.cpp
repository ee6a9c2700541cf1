#include "dybx/builtin.hpp"
#include "dybx/classify.hpp"
#include "dybx/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace dybx;

namespace {

SubgroupPtr cyclic(GroupPtr g, const std::string& gen) { return subgroupGeneratedBy(g, {g->find(gen)}); }

/// Ind nu(g) = sum over left coset representatives s with s^-1 g s in A.
std::vector<Cyclotomic> inducedByCosets(const AbelianSubgroup& a, int nu)
{
    const auto& G = a.group();
    std::vector<int> reps;
    std::set<int> covered;
    for (int s = 0; s < G.size(); ++s) {
        if (covered.count(s))
            continue;
        reps.push_back(s);
        for (int b : a.elements())
            covered.insert(G.mul(s, b));
    }
    std::vector<Cyclotomic> out(G.size());
    for (int g = 0; g < G.size(); ++g)
        for (int s : reps) {
            int c = G.mul(G.mul(G.inv(s), g), s);
            if (a.contains(c))
                out[g] += a.characterValue(nu, c);
        }
    return out;
}

} // namespace

TEST_CASE("induced characters against the coset sum")
{
    auto s4 = symmetricGroup(4);
    for (auto A : {cyclic(symmetricGroup(3), "(123)"), cyclic(dihedralGroup(4), "r"), cyclic(s4, "(1234)"),
                   cyclic(s4, "(12)")})
        for (int nu = 0; nu < A->characterCount(); ++nu)
            CHECK(inducedCharacter(*A, nu) == inducedByCosets(*A, nu));
}

TEST_CASE("S3/Z3 has six realizable functions")
{
    auto A = cyclic(symmetricGroup(3), "(123)");
    auto fs = realizableFs(*A);
    CHECK(fs.size() == 6);
    std::set<Bijection> set(fs.begin(), fs.end());
    CHECK(set.count(identityBijection(3)));
    CHECK(set.count(negationBijection(*A)));
    for (auto& f : fs)
        CHECK(isBijection(f, 3));
}

TEST_CASE("for abelian G = A only translations are realizable")
{
    for (auto G : {cyclicGroup(5), builtinGroup("Z2xZ2")}) {
        std::vector<int> all(G->size());
        for (int g = 0; g < G->size(); ++g)
            all[g] = g;
        auto A = subgroupGeneratedBy(G, all);
        auto fs = realizableFs(*A);
        CHECK(static_cast<int>(fs.size()) == A->characterCount());
        for (auto& f : fs)
            for (int l = 0; l < A->characterCount(); ++l)
                CHECK(A->subtractCharacters(f[l], l) == f[0]);
    }
}

TEST_CASE("realizableFs guard")
{
    auto A = subgroupGeneratedBy(cyclicGroup(9), {1});
    CHECK_THROWS_AS(realizableFs(*A), DomainError);
}

TEST_CASE("quasi-grouplike elements and recoverF")
{
    for (auto [G, gen] : {std::pair{symmetricGroup(3), "(123)"}, std::pair{dihedralGroup(4), "r"}}) {
        auto A = cyclic(G, gen);
        for (auto& f : realizableFs(*A)) {
            auto w = findGroupWitness(*A, f);
            REQUIRE(w.has_value());
            CHECK_FALSE(checkAdCondition(*A, *w, f).has_value());
            auto q = quasiGrouplike(A, *w, f);
            CHECK(q.agree);
            CHECK(checkRealizes(q.x, f).pass());
            Bijection normalized(f.size());
            for (std::size_t l = 0; l < f.size(); ++l)
                normalized[l] = A->subtractCharacters(f[l], f[0]);
            CHECK(recoverF(q.x) == normalized);
        }
    }
}

TEST_CASE("Ad condition failures")
{
    auto S3 = symmetricGroup(3);
    auto A = cyclic(S3, "(123)");
    auto f = negationBijection(*A);
    // g = 1 everywhere realizes the identity, not the negation
    TwoVarGroupFunction g(3, std::vector<int>(3, S3->identity()));
    CHECK(checkAdCondition(*A, g, f).has_value());
    CHECK_FALSE(checkAdCondition(*A, g, identityBijection(3)).has_value());
    CHECK_THROWS_AS(quasiGrouplike(A, g, f), DomainError);
}

TEST_CASE("piOf rejects x outside the normalizer")
{
    auto S3 = symmetricGroup(3);
    auto A = cyclic(S3, "(123)");
    DynamicalMap x(A, 1);
    for (int l = 0; l < 3; ++l)
        x.set(l, TensorElement::unit(S3, 1) * Cyclotomic(2) +
                     TensorElement::basis(S3, {S3->find("(12)")}, Cyclotomic(-1)));
    CHECK_THROWS_AS(piOf(x), DomainError);
    CHECK_THROWS_AS(recoverF(x), DomainError);
}
