#include "dybx/jetmatrix.hpp"

#include "dybx/errors.hpp"
#include "dybx/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace dybx {

JMatrix toJetMatrix(const QMatrix& m, const JetShapePtr& shape)
{
    JMatrix r(m.rows(), m.cols(), JetScalar(shape));
    for (int i = 0; i < m.rows(); ++i)
        for (auto& e : m.row(i))
            r.set(i, e.first, JetScalar(shape, e.second));
    return r;
}

JMatrix jetIdentity(int n, const JetShapePtr& shape) { return toJetMatrix(qIdentity(n), shape); }

JMatrix derivative(const JMatrix& m, int var)
{
    return m.mapped([var](const JetScalar& j) { return j.derivative(var); }, m.zero());
}

JMatrix hbarCoefficient(const JMatrix& m, int k)
{
    return m.mapped([k](const JetScalar& j) { return j.hbarCoefficient(k); }, m.zero());
}

QMatrix constantTerm(const JMatrix& m)
{
    QMatrix r(m.rows(), m.cols(), Rational(0));
    for (int i = 0; i < m.rows(); ++i)
        for (auto& e : m.row(i))
            r.set(i, e.first, e.second.constantTerm());
    return r;
}

JMatrix inverse(const JMatrix& m)
{
    if (m.rows() != m.cols())
        throw DomainError("inverse of a non-square matrix");
    const int n = m.rows();
    const auto& shape = m.zero().shape();
    QMatrix c0 = constantTerm(m);
    Dense<Rational> dense(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i)
        for (auto& e : c0.row(i))
            dense[i][e.first] = e.second;
    auto inv0 = inverse(dense, Rational(0), Rational(1));
    if (!inv0)
        throw DomainError("matrix jet is singular at the base point");
    QMatrix q(n, n, Rational(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            q.set(i, j, (*inv0)[i][j]);
    JMatrix a0inv = toJetMatrix(q, shape);
    // m = c0 (1 + c0^{-1} N); N has no constant term, so the series stops.
    JMatrix nTerm = a0inv * (m - toJetMatrix(c0, shape));
    JMatrix result = jetIdentity(n, shape);
    JMatrix power = result;
    const int steps = shape->degCap() + shape->hbarCap();
    for (int k = 1; k <= steps; ++k) {
        power = power * nTerm;
        if (power.isZeroMatrix())
            break;
        if (k % 2)
            result -= power;
        else
            result += power;
    }
    return result * a0inv;
}

int certifiedDegree(const JMatrix& m)
{
    int d = m.zero().shape()->degCap();
    for (int i = 0; i < m.rows(); ++i)
        for (auto& e : m.row(i))
            d = std::min(d, e.second.minEffDegree());
    return d;
}

bool vanishesTo(const JetScalar& j, int deg)
{
    for (auto& t : j.terms()) {
        int d = 0;
        for (int a : t.alpha)
            d += a;
        if (d <= deg)
            return false;
    }
    return true;
}

bool vanishesTo(const JMatrix& m, int deg)
{
    for (int i = 0; i < m.rows(); ++i)
        for (auto& e : m.row(i))
            if (!vanishesTo(e.second, deg))
                return false;
    return true;
}

bool vanishesGraded(const JetScalar& j, int base)
{
    for (auto& t : j.terms()) {
        int d = 0;
        for (int a : t.alpha)
            d += a;
        if (d <= base - t.k)
            return false;
    }
    return true;
}

bool vanishesGraded(const JMatrix& m, int base)
{
    for (int i = 0; i < m.rows(); ++i)
        for (auto& e : m.row(i))
            if (!vanishesGraded(e.second, base))
                return false;
    return true;
}

JetScalar reshape(const JetScalar& j, const JetShapePtr& shape)
{
    if (j.shape()->vars() != shape->vars())
        throw DomainError("reshape cannot change the number of variables");
    JetScalar r(shape);
    for (int k = 0; k <= shape->hbarCap(); ++k)
        r.capEffDegree(k, k <= j.shape()->hbarCap() ? j.effDegree(k) : shape->degCap());
    for (auto& t : j.terms())
        r.setCoeff(t.alpha, t.k, t.c);
    return r;
}

std::string str(const JMatrix& m)
{
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < m.rows(); ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < m.cols(); ++j)
            os << (j ? ", " : "") << m.at(i, j).str();
    }
    os << "]";
    return os.str();
}

SpanDecomposer::SpanDecomposer(std::vector<QMatrix> basis) : basis_(std::move(basis))
{
    if (basis_.empty())
        return;
    n_ = basis_[0].rows();
    const int b = size();
    // Columns of the transpose are matrix entries; its pivots pick independent rows.
    Dense<Rational> t(b, std::vector<Rational>(n_ * n_, Rational(0)));
    for (int j = 0; j < b; ++j)
        for (int i = 0; i < n_; ++i)
            for (auto& e : basis_[j].row(i))
                t[j][i * n_ + e.first] = e.second;
    Dense<Rational> reduced = t;
    rows_ = rowReduce(reduced);
    if (static_cast<int>(rows_.size()) != b)
        throw DomainError("representation is not injective on the requested span");
    Dense<Rational> block(b, std::vector<Rational>(b, Rational(0)));
    for (int r = 0; r < b; ++r)
        for (int j = 0; j < b; ++j)
            block[r][j] = t[j][rows_[r]];
    auto inv = inverse(block, Rational(0), Rational(1));
    if (!inv)
        throw InvariantViolation("selected block of an independent family is singular");
    s_ = *inv;
}

std::optional<std::vector<JetScalar>> SpanDecomposer::decompose(const JMatrix& m, int trust) const
{
    const auto& shape = m.zero().shape();
    const int b = size();
    std::vector<JetScalar> c(b, JetScalar(shape));
    for (int j = 0; j < b; ++j)
        for (int r = 0; r < b; ++r) {
            if (isZero(s_[j][r]))
                continue;
            c[j] += m.at(rows_[r] / n_, rows_[r] % n_) * s_[j][r];
        }
    JMatrix rebuilt(m.rows(), m.cols(), m.zero());
    for (int j = 0; j < b; ++j)
        rebuilt += toJetMatrix(basis_[j], shape).scaled(c[j]);
    if (!vanishesTo(rebuilt - m, trust))
        return std::nullopt;
    return c;
}

} // namespace dybx
