#pragma once

#include "dybx/classical.hpp"
#include "dybx/jetmatrix.hpp"
#include "dybx/pbw.hpp"
#include "dybx/report.hpp"

#include <vector>

namespace dybx {

/// Taylor coefficients of f at the base point (coeffs[i] multiplies t^i).
/// knownDegree < 0: f is exactly this polynomial; otherwise higher coefficients are unknown.
struct FunctionJet {
    std::vector<Rational> coeffs;
    int knownDegree = -1;
};

/// d^m f / dt^m as a jet in one variable.
JetScalar derivativeJet(const FunctionJet& f, const JetShapePtr& shape, int m);

/// <X, Y | [X, Y] = Y> with a = <Y>, and its 2-dimensional representation
/// X -> diag(1, 0), Y -> E_12.
LiePtr rankOneAlgebra();
std::shared_ptr<const MatrixRep> rankOneRep();

/// The normal-ordered twist
/// J = :B_1^{X (x) 1} B_2^{1 (x) X}: with B_1 = D(l; h(Y1+Y2)) / D(l - hY2; hY1),
/// B_2 = D(l; h(Y1+Y2)) / D(l; hY2) and D(l; s) = (f(l) - f(l - s)) / s.
/// DomainError when f'(0) = 0.
PBWElement gl1Twist(const FunctionJet& f, int K, int D);

/// Shifted cocycle, both counit identities and zero weight, modulo hbar^{K+1}.
/// Checks: "shifted-cocycle", "counit", "zero-weight".
Report checkFormalTwist(const PBWElement& j);

struct LimitResult {
    ClassicalR r;
    Report report;
};

/// r = s (rho21 - rho) with J = 1 + hbar rho + O(hbar^2), s the pinned sign.
/// Check "rho-in-g-tensor-g" fails when the hbar^1 part is not in g (x) g.
LimitResult quasiClassicalLimit(const PBWElement& j);

struct PinResult {
    bool wedgeFull = true;
    int limitSign = 1;
    Report report;
};

/// Tries every (wedge, sign) pair on the rank-one instance and installs the unique
/// pair for which quasiClassicalLimit(gl1Twist(f)) equals rNF(1, f).
PinResult pinConventions(const FunctionJet& f, int K, int D);

/// rho^{(x) n} applied to an element of U(g)^{(x) n}; X is basis index 0, Y index 1.
JMatrix evaluate(const PBWElement& u, const MatrixRep& rep);

/// F(lambda - hbar h^{(leg)}) for an operator F placed on `legs` of a space with factor
/// dimensions `dims`: sum_alpha (-hbar)^|alpha| / alpha! d^alpha F rho(y)^alpha_leg.
JMatrix shiftedOnLegs(const JMatrix& f, const MatrixRep& rep, const LieAlgebraSpec& g, const std::vector<int>& dims,
                      const std::vector<int>& legs, int leg);

struct RepX {
    JMatrix x;
    Report report;
};

/// x = sum_alpha (-hbar)^|alpha| / ((|alpha| + 1) alpha!) rho(y)^alpha d^alpha gamma.
/// The y-powers sit left of the derivative; with them on the right the realization
/// identity breaks at hbar^1 wherever y^2 != 0 (e.g. on V (x) V).
/// Checks: "invertible", "realization" (x rho(y_j) = hbar^{-1}(f_j(l) - f_j(l - hbar h)) x).
RepX xFromGammaRep(const GammaMatrixJet& g);

/// QDYBE in V (x) V (x) V (active convention) and zero weight for a matrix jet R on
/// V (x) V, both modulo hbar^{K+1} with t-degrees trusted up to base - k at hbar^k.
/// Checks: "qdybe", "zero-weight".
Report checkRepRMatrix(const JMatrix& R, const MatrixRep& rep, const LieAlgebraSpec& g, int base);

struct QuantizeResult {
    JMatrix x;
    JMatrix R;
    ClassicalR rGamma;
    Report report;
};

/// R = x2(l - hbar h1) x1 x2^{-1} x1(l - hbar h2)^{-1} on V (x) V.
/// Checks: "invertible", "realization", "unit-constant-term", "qdybe", "zero-weight", "classical-limit".
QuantizeResult quantizeRep(const GammaMatrixJet& g);

/// Cross-validation on the rank-one algebra. Checks: "x-closed-form" (x from the series
/// against ((f(l) - f(l - hbar Y)) / (hbar Y))^X with the Y-powers on the left) and
/// "R-universal-vs-rep" (rho (x) rho of J21^{-1} J against quantizeRep).
Report crossCheckRankOne(const FunctionJet& f, int K, int D);

/// Gamma = diag(f'(lambda), 1) on the rank-one representation in jets of shape (1, D, K).
GammaMatrixJet rankOneGamma(const FunctionJet& f, int K, int D);

} // namespace dybx
