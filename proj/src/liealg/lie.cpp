#include "dybx/lie.hpp"

#include "dybx/errors.hpp"
#include "dybx/linalg.hpp"

#include <algorithm>

namespace dybx {

LieAlgebraSpec::LieAlgebraSpec(std::vector<std::string> labels, std::vector<int> abelian)
    : labels_(std::move(labels)), abelian_(std::move(abelian))
{
    const int d = dim();
    if (d == 0)
        throw ParseError("Lie algebra of dimension 0");
    abelianPos_.assign(d, -1);
    for (std::size_t i = 0; i < abelian_.size(); ++i) {
        int b = abelian_[i];
        if (b < 0 || b >= d || abelianPos_[b] >= 0)
            throw ParseError("bad abelian index");
        abelianPos_[b] = static_cast<int>(i);
    }
    c_.assign(static_cast<std::size_t>(d) * d * d, Rational(0));
}

int LieAlgebraSpec::find(const std::string& label) const
{
    auto it = std::find(labels_.begin(), labels_.end(), label);
    return it == labels_.end() ? -1 : static_cast<int>(it - labels_.begin());
}

void LieAlgebraSpec::setBracket(int i, int j, int k, const Rational& c)
{
    const int d = dim();
    if (i < 0 || j < 0 || k < 0 || i >= d || j >= d || k >= d)
        throw ParseError("bracket index out of range");
    c_[(i * d + j) * d + k] = c;
    c_[(j * d + i) * d + k] = -c;
}

QVector LieAlgebraSpec::basisVector(int i) const
{
    QVector v(dim(), Rational(0));
    v[i] = 1;
    return v;
}

QVector LieAlgebraSpec::bracket(const QVector& u, const QVector& v) const
{
    const int d = dim();
    QVector out(d, Rational(0));
    for (int i = 0; i < d; ++i) {
        if (isZero(u[i]))
            continue;
        for (int j = 0; j < d; ++j) {
            if (isZero(v[j]))
                continue;
            Rational uv = u[i] * v[j];
            for (int k = 0; k < d; ++k)
                if (!isZero(structure(i, j, k)))
                    out[k] += uv * structure(i, j, k);
        }
    }
    return out;
}

Report LieAlgebraSpec::validate() const
{
    const int d = dim();
    Report rep;
    rep.title = "Lie algebra";
    rep.add("antisymmetry");
    rep.add("jacobi");
    rep.add("abelian-subalgebra");
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                if (structure(i, j, k) != -structure(j, i, k))
                    rep.checks[0].fail(label(i) + "," + label(j), "not antisymmetric");
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                auto a = basisVector(i), b = basisVector(j), c = basisVector(k);
                auto s1 = bracket(a, bracket(b, c));
                auto s2 = bracket(b, bracket(c, a));
                auto s3 = bracket(c, bracket(a, b));
                for (int m = 0; m < d; ++m)
                    if (!isZero(s1[m] + s2[m] + s3[m])) {
                        rep.checks[1].fail(label(i) + "," + label(j) + "," + label(k), "Jacobi sum nonzero");
                        break;
                    }
            }
    for (int a : abelian_)
        for (int b : abelian_)
            for (int k = 0; k < d; ++k)
                if (!isZero(structure(a, b, k)))
                    rep.checks[2].fail(label(a) + "," + label(b), "bracket nonzero");
    return rep;
}

LieAlgebraSpec glSemidirect(int n)
{
    if (n < 1)
        throw DomainError("gl(n) semidirect C^n needs n >= 1");
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            labels.push_back(n == 1 ? "X" : "E" + std::to_string(i + 1) + std::to_string(j + 1));
    std::vector<int> ab;
    for (int k = 0; k < n; ++k) {
        labels.push_back(n == 1 ? "Y" : "e" + std::to_string(k + 1));
        ab.push_back(n * n + k);
    }
    LieAlgebraSpec g(labels, ab);
    auto E = [n](int i, int j) { return i * n + j; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    if (E(i, j) >= E(k, l))
                        continue;
                    // [E_ij, E_kl] = d_jk E_il - d_li E_kj
                    std::map<int, Rational> acc;
                    if (j == k)
                        acc[E(i, l)] += 1;
                    if (l == i)
                        acc[E(k, j)] -= 1;
                    for (auto& [b, c] : acc)
                        if (!isZero(c))
                            g.setBracket(E(i, j), E(k, l), b, c);
                }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            g.setBracket(E(i, j), n * n + j, n * n + i, 1);
    return g;
}

QMatrix qIdentity(int n) { return QMatrix::identity(n, Rational(1), Rational(0)); }
QMatrix qZero(int n) { return QMatrix(n, n, Rational(0)); }

MatrixRep::MatrixRep(int dim, std::vector<QMatrix> matrices) : dim_(dim), m_(std::move(matrices))
{
    for (auto& m : m_)
        if (m.rows() != dim_ || m.cols() != dim_)
            throw ParseError("representation matrix has wrong size");
}

QMatrix MatrixRep::ofVector(const QVector& u) const
{
    QMatrix out = qZero(dim_);
    for (std::size_t b = 0; b < u.size(); ++b)
        if (!isZero(u[b]))
            out += m_[b].scaled(u[b]);
    return out;
}

Report MatrixRep::validate(const LieAlgebraSpec& g) const
{
    Report rep;
    rep.title = "representation";
    rep.add("homomorphism");
    if (basisSize() != g.dim()) {
        rep.checks[0].fail("size", "one matrix per basis element required");
        return rep;
    }
    for (int a = 0; a < g.dim(); ++a)
        for (int b = 0; b < g.dim(); ++b) {
            auto lhs = ofVector(g.bracket(g.basisVector(a), g.basisVector(b)));
            auto rhs = m_[a] * m_[b] - m_[b] * m_[a];
            if (lhs != rhs)
                rep.checks[0].fail(g.label(a) + "," + g.label(b), "rho([a,b]) != [rho(a),rho(b)]");
        }
    return rep;
}

MatrixRep glSemidirectDefining(int n)
{
    std::vector<QMatrix> ms;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            QMatrix m = qZero(n + 1);
            m.set(i, j, Rational(1));
            ms.push_back(m);
        }
    for (int k = 0; k < n; ++k) {
        QMatrix m = qZero(n + 1);
        m.set(k, n, Rational(1));
        ms.push_back(m);
    }
    return MatrixRep(n + 1, ms);
}

std::vector<QVector> normalizer(const LieAlgebraSpec& g)
{
    const int d = g.dim();
    // Rows: for each y_i and each non-abelian k, sum_b x_b c_{b, y_i}^k = 0.
    Dense<Rational> m;
    for (int y : g.abelian())
        for (int k = 0; k < d; ++k) {
            if (g.isAbelianIndex(k))
                continue;
            std::vector<Rational> row(d, Rational(0));
            for (int b = 0; b < d; ++b)
                row[b] = g.structure(b, y, k);
            m.push_back(row);
        }
    return nullspace(m, d, Rational(0), Rational(1));
}

std::optional<QVector> decomposeInSpan(const std::vector<QMatrix>& basis, const QMatrix& m)
{
    const int n = m.rows();
    Dense<Rational> a(n * n, std::vector<Rational>(basis.size(), Rational(0)));
    std::vector<Rational> rhs(n * n, Rational(0));
    for (std::size_t b = 0; b < basis.size(); ++b)
        for (int i = 0; i < n; ++i)
            for (auto& e : basis[b].row(i))
                a[i * n + e.first][b] = e.second;
    for (int i = 0; i < n; ++i)
        for (auto& e : m.row(i))
            rhs[i * n + e.first] = e.second;
    auto x = solve(a, rhs, Rational(0));
    if (!x)
        return std::nullopt;
    // solve() leaves free variables at zero; an injective rho has none.
    return x;
}

} // namespace dybx
