#pragma once

#include "dybx/jet.hpp"
#include "dybx/lie.hpp"
#include "dybx/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dybx {

/// Matrix with jet entries (a matrix-valued function of lambda near the base point).
using JMatrix = SparseMatrix<JetScalar>;

JMatrix toJetMatrix(const QMatrix& m, const JetShapePtr& shape);
JMatrix jetIdentity(int n, const JetShapePtr& shape);
JMatrix derivative(const JMatrix& m, int var);
JMatrix hbarCoefficient(const JMatrix& m, int k);
/// Value at the base point with hbar = 0.
QMatrix constantTerm(const JMatrix& m);
/// Inverse by a Neumann series around the constant term; DomainError when singular.
JMatrix inverse(const JMatrix& m);
/// Smallest effective t-degree over the stored entries (the cap when none are stored).
int certifiedDegree(const JMatrix& m);

/// True when no coefficient of t-degree <= deg is nonzero (any hbar order).
bool vanishesTo(const JetScalar& j, int deg);
bool vanishesTo(const JMatrix& m, int deg);
/// Like vanishesTo, but at hbar^k only t-degrees <= base - k are inspected
/// (each hbar order in a formal identity costs at most one derivative).
bool vanishesGraded(const JetScalar& j, int base);
bool vanishesGraded(const JMatrix& m, int base);
/// The same series in another shape (extra orders are dropped, precision kept).
JetScalar reshape(const JetScalar& j, const JetShapePtr& shape);

std::string str(const JMatrix& m);

/// Solves m = sum_j c_j B_j for jet coefficients c_j against fixed rational
/// matrices B_j (linearly independent).
class SpanDecomposer {
public:
    explicit SpanDecomposer(std::vector<QMatrix> basis);
    int size() const { return static_cast<int>(basis_.size()); }
    /// nullopt when m is not in the span up to t-degree `trust`.
    std::optional<std::vector<JetScalar>> decompose(const JMatrix& m, int trust) const;

private:
    std::vector<QMatrix> basis_;
    int n_ = 0;
    std::vector<int> rows_;               // flattened entry indices used for the solve
    std::vector<std::vector<Rational>> s_; // inverse of the selected square block
};

} // namespace dybx
