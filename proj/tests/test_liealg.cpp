#include "dybx/formal.hpp"
#include "dybx/jetmatrix.hpp"
#include "dybx/lie.hpp"
#include "dybx/pbw.hpp"

#include <doctest.h>

#include <random>

using namespace dybx;

namespace {

Rational randomRational(std::mt19937& rng)
{
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

/// X = diag(n-1, ..., 0), Y = superdiagonal shift: [X, Y] = Y with Y^(n-1) != 0.
std::pair<QMatrix, QMatrix> ladder(int n)
{
    QMatrix X(n, n, Rational(0)), Y(n, n, Rational(0));
    for (int i = 0; i < n; ++i)
        X.set(i, i, Rational(n - 1 - i));
    for (int i = 0; i + 1 < n; ++i)
        Y.set(i, i + 1, Rational(1));
    return {X, Y};
}

QMatrix power(const QMatrix& m, int k)
{
    QMatrix p = qIdentity(m.rows());
    for (int i = 0; i < k; ++i)
        p = p * m;
    return p;
}

/// Image of a one-leg element with constant coefficients in the ladder representation.
QMatrix evaluate(const PBWElement& e, int n)
{
    auto [X, Y] = ladder(n);
    QMatrix out = qZero(n);
    for (auto& [m, c] : e.terms())
        out += (power(X, m[0]) * power(Y, m[1])).scaled(c.coeff(std::vector<int>{0}, 0));
    return out;
}

PBWElement randomPBW(JetShapePtr s, int order, std::mt19937& rng, bool constant)
{
    std::uniform_int_distribution<int> e(0, 2);
    PBWElement out(s, order);
    for (int i = 0; i < 3; ++i) {
        PBWElement::Monomial m(2 * order);
        for (auto& v : m)
            v = e(rng);
        JetScalar c(s, randomRational(rng));
        if (!constant)
            c += JetScalar::variable(s, 0) * randomRational(rng);
        out.add(m, c);
    }
    return out;
}

} // namespace

TEST_CASE("reorderYX against a faithful-enough matrix representation")
{
    const int n = 7;
    auto [X, Y] = ladder(n);
    CHECK(X * Y - Y * X == Y);
    for (int b = 0; b <= 3; ++b)
        for (int c = 0; c <= 4; ++c) {
            QMatrix rhs = qZero(n);
            for (auto [i, coef] : reorderYX(b, c))
                rhs += (power(X, i) * power(Y, b)).scaled(coef);
            CHECK(power(Y, b) * power(X, c) == rhs);
        }
}

TEST_CASE("PBW multiplication is a representation (property)")
{
    auto s = JetShape::get(1, 2, 3); // the PBW degree guard grows with the hbar cap
    std::mt19937 rng(41);
    auto x = PBWElement::generatorX(s, 1, 0), y = PBWElement::generatorY(s, 1, 0);
    CHECK(x * y - y * x == y);
    for (int trial = 0; trial < 8; ++trial) {
        auto a = randomPBW(s, 1, rng, true), b = randomPBW(s, 1, rng, true), c = randomPBW(s, 1, rng, true);
        CHECK(evaluate(a * b, 9) == evaluate(a, 9) * evaluate(b, 9));
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("coproduct and counit (property)")
{
    auto s = JetShape::get(1, 3, 1);
    std::mt19937 rng(43);
    for (int trial = 0; trial < 6; ++trial) {
        auto a = randomPBW(s, 1, rng, false), b = randomPBW(s, 1, rng, false);
        CHECK((a * b).coproduct(0) == a.coproduct(0) * b.coproduct(0));
        CHECK(a.coproduct(0).counit(0) == a);
        CHECK(a.coproduct(0).counit(1) == a);
        CHECK(a.coproduct(0).coproduct(0) == a.coproduct(0).coproduct(1));
        auto t = randomPBW(s, 2, rng, false);
        CHECK(t.permuted({1, 0}).permuted({1, 0}) == t);
        CHECK(t.embed(3, {0, 2}).counit(1) == t);
    }
}

TEST_CASE("inverse modulo hbar")
{
    auto s = JetShape::get(1, 3, 3);
    auto h = JetScalar::hbar(s);
    auto one = PBWElement::unit(s, 2);
    auto e = one + h * (PBWElement::generatorX(s, 2, 0) * PBWElement::generatorY(s, 2, 1)) +
             (h * h) * PBWElement::generatorY(s, 2, 0);
    CHECK(e * e.inverse() == one);
    CHECK(e.inverse() * e == one);
    CHECK(e.hbarCoefficient(0) == one.hbarCoefficient(0));
}

TEST_CASE("Lie algebra specifications")
{
    for (int n = 1; n <= 3; ++n) {
        auto g = glSemidirect(n);
        CHECK(g.dim() == n * n + n);
        CHECK(g.abelianDim() == n);
        CHECK(g.validate().pass());
        CHECK(glSemidirectDefining(n).validate(g).pass());
        // C^n is an ideal, so its normalizer is everything.
        CHECK(static_cast<int>(normalizer(g).size()) == g.dim());
    }
    CHECK(rankOneAlgebra()->validate().pass());
    CHECK(rankOneRep()->validate(*rankOneAlgebra()).pass());

    // Jacobi fails for a broken structure constant.
    auto bad = glSemidirect(2);
    bad.setBracket(bad.find("E12"), bad.find("E21"), bad.find("E12"), Rational(1));
    CHECK_FALSE(bad.validate().pass());
    // A representation with one wrong matrix.
    auto g = glSemidirect(2);
    auto rho = glSemidirectDefining(2);
    std::vector<QMatrix> ms;
    for (int b = 0; b < rho.basisSize(); ++b)
        ms.push_back(rho.of(b));
    ms[0] = ms[0].scaled(Rational(2));
    CHECK_FALSE(MatrixRep(rho.dim(), ms).validate(g).pass());
}

TEST_CASE("span decomposition")
{
    auto rho = glSemidirectDefining(2);
    std::vector<QMatrix> basis;
    for (int b = 0; b < rho.basisSize(); ++b)
        basis.push_back(rho.of(b));
    SpanDecomposer dec(basis);
    auto s = JetShape::get(2, 3, 1);
    std::mt19937 rng(47);
    std::vector<JetScalar> coeffs;
    JMatrix m(rho.dim(), rho.dim(), JetScalar(s));
    for (int b = 0; b < dec.size(); ++b) {
        auto c = JetScalar(s, randomRational(rng)) + JetScalar::variable(s, b % 2) * randomRational(rng) +
                 JetScalar::hbar(s) * randomRational(rng);
        coeffs.push_back(c);
        auto term = toJetMatrix(basis[b], s);
        for (int i = 0; i < term.rows(); ++i)
            for (auto& [j, v] : term.row(i))
                m.add(i, j, v * c);
    }
    auto got = dec.decompose(m, 3);
    REQUIRE(got.has_value());
    for (int b = 0; b < dec.size(); ++b)
        CHECK((*got)[b] == coeffs[b]);
    // The identity has a nonzero bottom-right entry, which no basis matrix reaches.
    CHECK_FALSE(dec.decompose(jetIdentity(rho.dim(), s), 3).has_value());
    auto q = decomposeInSpan(basis, rho.of(0) + rho.of(4).scaled(Rational(3)));
    REQUIRE(q.has_value());
    CHECK((*q)[0] == Rational(1));
    CHECK((*q)[4] == Rational(3));
}
