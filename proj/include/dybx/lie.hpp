#pragma once

#include "dybx/jet.hpp"
#include "dybx/matrix.hpp"
#include "dybx/rational.hpp"
#include "dybx/report.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dybx {

using QMatrix = SparseMatrix<Rational>;
using QVector = std::vector<Rational>;

/// Lie algebra by structure constants [e_i, e_j] = sum_k c_{ij}^k e_k with a
/// distinguished abelian subalgebra spanned by basis elements.
class LieAlgebraSpec {
public:
    LieAlgebraSpec(std::vector<std::string> labels, std::vector<int> abelian);

    int dim() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int i) const { return labels_[i]; }
    int find(const std::string& label) const;
    /// Indices of y_1..y_n.
    const std::vector<int>& abelian() const { return abelian_; }
    int abelianDim() const { return static_cast<int>(abelian_.size()); }
    bool isAbelianIndex(int b) const { return abelianPos_[b] >= 0; }
    /// Position of basis index b among the y_i, or -1.
    int abelianPosition(int b) const { return abelianPos_[b]; }

    /// Sets c_{ij}^k and c_{ji}^k = -c.
    void setBracket(int i, int j, int k, const Rational& c);
    const Rational& structure(int i, int j, int k) const { return c_[(i * dim() + j) * dim() + k]; }
    QVector bracket(const QVector& u, const QVector& v) const;
    QVector basisVector(int i) const;

    /// Antisymmetry, Jacobi and [a, a] = 0, exactly.
    Report validate() const;

private:
    std::vector<std::string> labels_;
    std::vector<int> abelian_;
    std::vector<int> abelianPos_;
    std::vector<Rational> c_;
};

/// gl(n) semidirect C^n: E_ij (index i*n + j) then e_k (index n*n + k), with
/// [E_ij, E_kl] = d_jk E_il - d_li E_kj and [E_ij, e_k] = d_jk e_i; abelian part C^n.
LieAlgebraSpec glSemidirect(int n);

/// Exact matrix representation, one matrix per basis element.
class MatrixRep {
public:
    MatrixRep(int dim, std::vector<QMatrix> matrices);

    int dim() const { return dim_; }
    const QMatrix& of(int b) const { return m_[b]; }
    int basisSize() const { return static_cast<int>(m_.size()); }
    QMatrix ofVector(const QVector& u) const;

    /// rho([a, b]) = [rho(a), rho(b)] on all basis pairs.
    Report validate(const LieAlgebraSpec& g) const;

private:
    int dim_;
    std::vector<QMatrix> m_;
};

/// (n+1) x (n+1) defining representation: E_ij -> unit (i, j), e_k -> unit (k, n).
MatrixRep glSemidirectDefining(int n);

QMatrix qIdentity(int n);
QMatrix qZero(int n);

/// Basis of n(a) = {x : [x, a] in a}.
std::vector<QVector> normalizer(const LieAlgebraSpec& g);

/// Coordinates of `m` in the span of the matrices rho(basis[i]), or nullopt.
std::optional<QVector> decomposeInSpan(const std::vector<QMatrix>& basis, const QMatrix& m);

} // namespace dybx
