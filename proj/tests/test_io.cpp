#include "dybx/builtin.hpp"
#include "dybx/errors.hpp"
#include "dybx/io.hpp"

#include <doctest.h>

#include <filesystem>

using namespace dybx;

namespace {

std::string dataFile(const std::string& name) { return std::string(DYBX_DATA_DIR) + "/" + name; }

bool sameTable(const FiniteGroup& a, const FiniteGroup& b)
{
    if (a.size() != b.size())
        return false;
    for (int x = 0; x < a.size(); ++x)
        for (int y = 0; y < a.size(); ++y)
            if (a.mul(x, y) != b.mul(x, y))
                return false;
    return true;
}

} // namespace

TEST_CASE("scalar roundtrips")
{
    for (auto q : {Rational(0), Rational(-7), parseRational("22/7")})
        CHECK(rationalFromJson(toJson(q)) == q);
    CHECK(rationalFromJson(Json(5)) == Rational(5));
    auto c = Cyclotomic::zeta(12, 5) * Cyclotomic(Rational(3, 4)) + Cyclotomic(2);
    CHECK(cyclotomicFromJson(toJson(c)) == c);
    CHECK(cyclotomicFromJson(Json("-1/2")) == Cyclotomic(Rational(-1, 2)));

    auto s = JetShape::get(2, 3, 2);
    auto j = JetScalar::variable(s, 0) * JetScalar::variable(s, 1) * Rational(5, 3) + JetScalar::hbar(s) +
             JetScalar(s, Rational(-2));
    CHECK(jetFromJson(toJson(j), s) == j);
}

TEST_CASE("group data roundtrips")
{
    auto D4 = dihedralGroup(4);
    auto g = groupFromJson(toJson(*D4));
    CHECK(sameTable(*g, *D4));
    CHECK(g->find("r") == D4->find("r"));
    CHECK(sameTable(*groupFromJson(Json{{"builtin", "S3"}}), *symmetricGroup(3)));

    auto A = subgroupGeneratedBy(D4, {D4->find("r")});
    auto a = subgroupFromJson(toJson(*A), D4);
    CHECK(a->elements() == A->elements());
    CHECK(subgroupFromJson(Json{{"generators", {"r"}}}, D4)->elements() == A->elements());

    auto t = TensorElement::basis(D4, {D4->find("s"), D4->find("r")}, Cyclotomic::zeta(4, 1)) +
             TensorElement::unit(D4, 2);
    CHECK(tensorFromJson(toJson(t), D4) == t);

    DynamicalMap m(A, 2);
    for (int l = 0; l < A->characterCount(); ++l)
        m.set(l, t * Cyclotomic(l + 1));
    CHECK(dynamicalMapFromJson(toJson(m), A) == m);
    Json constant{{"order", 2}, {"constant", toJson(t)}};
    CHECK(dynamicalMapFromJson(constant, A) == DynamicalMap::constant(A, t));
}

TEST_CASE("Lie data roundtrips")
{
    auto g = glSemidirect(2);
    auto back = lieFromJson(toJson(g));
    REQUIRE(back->dim() == g.dim());
    for (int a = 0; a < g.dim(); ++a)
        for (int b = 0; b < g.dim(); ++b)
            for (int k = 0; k < g.dim(); ++k)
                CHECK(back->structure(a, b, k) == g.structure(a, b, k));
    CHECK(back->abelian() == g.abelian());
    CHECK(lieFromJson(Json{{"builtin", "gl2"}})->dim() == 6);

    auto rho = glSemidirectDefining(2);
    auto r2 = repFromJson(toJson(rho, g), g);
    for (int b = 0; b < g.dim(); ++b)
        CHECK(r2->of(b) == rho.of(b));

    auto s = JetShape::get(2, 3, 0);
    auto t1 = JetScalar::variable(s, 0), t2 = JetScalar::variable(s, 1);
    auto rn = rNF(2, {t1 + t1 * t2, t2});
    auto r = classicalRFromJson(toJson(rn.result.r), s);
    CHECK(r.equals(rn.result.r));
    auto gm = gammaFromJson(toJson(rn.gamma), s);
    CHECK(gm.gamma == rn.gamma.gamma);
    CHECK(gm.certified == rn.gamma.certified);

    auto u = gl1Twist({{0, 1, Rational(1, 2)}, -1}, 2, 2);
    CHECK(pbwFromJson(toJson(u), u.shape()) == u);
}

TEST_CASE("malformed input is a parse error")
{
    CHECK_THROWS_AS(rationalFromJson(Json("1/0")), ParseError);
    CHECK_THROWS_AS(rationalFromJson(Json::array()), ParseError);
    CHECK_THROWS_AS(cyclotomicFromJson(Json{{"N", 0}, {"coeffs", Json::array()}}), ParseError);
    auto s = JetShape::get(2, 3, 0);
    CHECK_THROWS_AS(jetFromJson(Json{{{1}, 0, "1"}}, s), ParseError);
    CHECK_THROWS_AS(jetFromJson(Json("x"), s), ParseError);
    CHECK_THROWS_AS(groupFromJson(Json{{"builtin", "Q8x"}}), ParseError);
    CHECK_THROWS_AS(groupFromJson(Json{{"size", 2}, {"cayley", {{0, 1}, {0, 1}}}}), ParseError);
    auto S3 = symmetricGroup(3);
    CHECK_THROWS_AS(subgroupFromJson(Json{{"elements", {"e", "(12)", "(13)"}}}, S3), ParseError);
    CHECK_THROWS_AS(tensorFromJson(Json{{"order", 1}, {"terms", {{{"g", {"nope"}}, {"c", "1"}}}}}, S3), ParseError);
    CHECK_THROWS_AS(readJsonFile("/nonexistent/file.json"), ParseError);
    auto bad = std::filesystem::temp_directory_path() / "dybx_bad.json";
    writeJsonFile(bad.string(), Json::object());
    CHECK_NOTHROW(readJsonFile(bad.string()));
    CHECK_THROWS_AS(groupFromJson(readJsonFile(bad.string())), ParseError);
    std::filesystem::remove(bad);
}

TEST_CASE("shipped data files load")
{
    auto S3 = groupFromJson(readJsonFile(dataFile("s3.json")));
    CHECK(S3->size() == 6);
    auto Z3 = subgroupFromJson(readJsonFile(dataFile("z3.json")), S3);
    CHECK(Z3->size() == 3);
    auto x = dynamicalMapFromJson(readJsonFile(dataFile("x_s3.json")), Z3);
    auto xinv = dynamicalMapFromJson(readJsonFile(dataFile("xinv_s3.json")), Z3);
    CHECK(x * xinv == DynamicalMap::constant(Z3, TensorElement::unit(S3, 1)));
    auto J = dynamicalMapFromJson(readJsonFile(dataFile("twist_s3.json")), Z3);
    CHECK(checkTwist(J).pass());
    CHECK(J == twistFromX(x).twist);

    auto s = JetShape::get(2, 4, 0);
    auto gm = gammaFromJson(readJsonFile(dataFile("gamma_gl2.json")), s);
    CHECK(rFromGamma(gm).report.pass());
}
