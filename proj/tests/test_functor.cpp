#include "dybx/builtin.hpp"
#include "dybx/functor.hpp"

#include <doctest.h>

using namespace dybx;

namespace {

SubgroupPtr cyclic(GroupPtr g, const std::string& gen) { return subgroupGeneratedBy(g, {g->find(gen)}); }

DynamicalMap sampleX(SubgroupPtr a)
{
    auto G = a->parent();
    auto P = primitiveIdempotents(*a);
    DynamicalMap x(a, 1);
    for (int l = 0; l < a->characterCount(); ++l) {
        TensorElement v = P[0];
        for (int mu = 1; mu < a->characterCount(); ++mu)
            v += P[mu] * Cyclotomic(l + mu + 1);
        x.set(l, v);
    }
    return DynamicalMap::constant(a, TensorElement::basis(G, {G->find("(12)")})) * x;
}

} // namespace

TEST_CASE("modules")
{
    auto S3 = symmetricGroup(3);
    auto reg = GModule::regular(S3);
    CHECK(reg.dim() == 6);
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b)
            CHECK(reg.rho(S3->mul(a, b)) == reg.rho(a) * reg.rho(b));
    auto sq = GModule::tensor(reg, reg);
    CHECK(sq.dim() == 36);
    CHECK(sq.rho(1) == kron(reg.rho(1), reg.rho(1)));
    auto A = cyclic(S3, "(123)");
    auto res = AModule::restriction(reg, A);
    CMatrix sum(6, 6, Cyclotomic());
    for (auto& p : res.projector)
        sum += p;
    CHECK(sum == identityMatrix(6));
}

TEST_CASE("objects of Rep(J) and their images")
{
    auto S3 = symmetricGroup(3);
    auto A = cyclic(S3, "(123)");
    auto x = sampleX(A);
    auto J = twistFromX(x).twist;
    auto reg = GModule::regular(S3);
    std::vector<GModule> family{GModule::trivial(S3), reg};
    auto obj = trivialObject(A);
    CHECK(checkObject(obj, J, family).pass());
    auto one = TensorElement::unit(S3, 2);
    auto img = irfVertexFunctor(obj, x, one);
    CHECK(img.v.dim == A->characterCount());
    CHECK(checkObject(img, DynamicalMap::constant(img.domain, one), family).pass());
    // One perturbed entry of L breaks the tensor relation.
    auto bad = img;
    bad.l = [img](const GModule& X) {
        auto L = img.l(X);
        if (X.name() == "regular")
            L[0].add(0, 0, Cyclotomic(Rational(1, 5)));
        return L;
    };
    CHECK_FALSE(checkObject(bad, DynamicalMap::constant(img.domain, one), {reg}).pass());
}

TEST_CASE("morphisms and the functor on morphisms")
{
    auto S3 = symmetricGroup(3);
    auto A = cyclic(S3, "(123)");
    auto x = sampleX(A);
    auto J = twistFromX(x).twist;
    auto reg = GModule::regular(S3);
    auto obj = trivialObject(A);
    std::vector<CMatrix> scalar(3, identityMatrix(1).scaled(Cyclotomic(Rational(3, 2))));
    CHECK(checkMorphism(scalar, obj, obj, {reg}).pass());
    std::vector<CMatrix> zero(3, CMatrix(1, 1, Cyclotomic()));
    CHECK(checkMorphism(zero, obj, obj, {reg}).pass());
    // lambda-dependent scalars are not morphisms when every weight occurs in X
    std::vector<CMatrix> moving{identityMatrix(1), identityMatrix(1).scaled(Cyclotomic(2)), identityMatrix(1)};
    CHECK_FALSE(checkMorphism(moving, obj, obj, {reg}).pass());

    auto one = TensorElement::unit(S3, 2);
    auto img = irfVertexFunctor(obj, x, one);
    std::vector<CMatrix> image{functorOnMorphism(scalar, 3)};
    CHECK(checkMorphism(image, img, img, {reg}).pass());
    (void)J;
}

TEST_CASE("difference kernel of the image of the trivial object")
{
    auto S3 = symmetricGroup(3);
    auto A = cyclic(S3, "(123)");
    auto x = sampleX(A);
    auto reg = GModule::regular(S3);
    auto img = irfVertexFunctor(trivialObject(A), x, TensorElement::unit(S3, 2));
    auto L = img.l(reg)[0];
    auto K = differenceKernel(L, 6, 3);
    auto P = primitiveIdempotents(*A);
    auto xinv = x.inverse();
    for (int l = 0; l < 3; ++l)
        for (int nu = 0; nu < 3; ++nu)
            CHECK(K[l][A->subtractCharacters(l, nu)] == reg.act(xinv[l] * P[nu] * x[l]));
}
