#pragma once

#include "dybx/jetmatrix.hpp"
#include "dybx/lie.hpp"
#include "dybx/report.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace dybx {

using LiePtr = std::shared_ptr<const LieAlgebraSpec>;

/// Weight of u^v relative to u(x)v - v(x)u under the active convention.
Rational wedgeWeight();

/// Classical dynamical r-matrix r(lambda) in g(x)g, stored as tensor components
/// r^{ab} (coefficient of e_a (x) e_b) with jet entries in t_i = <lambda, y_i>.
struct ClassicalR {
    LiePtr lie;
    JetShapePtr shape;
    std::vector<JetScalar> comps;
    /// Entries are exact up to this t-degree.
    int certified = 0;

    ClassicalR(LiePtr lie, JetShapePtr shape, int certified);

    const JetScalar& at(int a, int b) const { return comps[a * lie->dim() + b]; }
    JetScalar& at(int a, int b) { return comps[a * lie->dim() + b]; }
    /// r += u ^ v for g-vectors with jet coordinates.
    void addWedge(const std::vector<JetScalar>& u, const std::vector<JetScalar>& v);
    void addWedge(int a, int b, const JetScalar& phi);
    /// Components as a dim^2 x 1 comparison up to the certified degree.
    bool equals(const ClassicalR& o) const;
    std::string str() const;
};

/// Skew-symmetry, the classical dynamical Yang-Baxter equation and zero weight.
/// Checks: "skew-symmetry", "cdybe", "zero-weight".
Report checkCDYBE(const ClassicalR& r);

/// p_i(lambda) in g (coordinates per basis element) plus the a^a component
/// omega_ij = r^{y_i y_j}, so that r = sum_i p_i ^ y_i + sum_ij omega_ij y_i (x) y_j.
struct PFamily {
    LiePtr lie;
    JetShapePtr shape;
    std::vector<std::vector<JetScalar>> p;
    std::vector<std::vector<JetScalar>> omega;
    int certified = 0;

    ClassicalR toR() const;
};

struct DegeneracyResult {
    Report report;
    bool completelyDegenerate = false;
    std::optional<PFamily> family;
};

/// Checks: "zero-weight", "degenerate" (no (g/a)^(g/a) part) and "normalizer-wedge-a"
/// (every p_i lies in n(a) and r is rebuilt from the family).
DegeneracyResult completeDegeneracy(const ClassicalR& r);

/// Checks: "normalizer", "flatness-mod-a" and "flatness-full" (the three-slot identity).
Report checkFlatness(const PFamily& p);

/// A curve lambda -> gamma(lambda) in N(a), given in a representation.
struct GammaMatrixJet {
    LiePtr lie;
    std::shared_ptr<const MatrixRep> rep;
    JMatrix gamma;
    int certified = 0;
};

struct GammaResult {
    ClassicalR r;
    /// Induced action on a: gamma rho(y_i) gamma^{-1} = sum_j abar[j][i] rho(y_j).
    std::vector<std::vector<JetScalar>> abar;
    /// p_i = d_i gamma gamma^{-1} as g-coordinates.
    std::vector<std::vector<JetScalar>> p;
    Report report;
};

/// r_gamma = sum_i d_i gamma gamma^{-1} ^ y_i. Checks: "gamma-in-normalizer" (induced
/// action lands in a) and "gradient" (the induced action is a Jacobian).
/// Throws DomainError when some d_i gamma gamma^{-1} is not in rho(n(a)).
GammaResult rFromGamma(const GammaMatrixJet& g);

struct Reconstruction {
    JMatrix gammaHat;
    ClassicalR rHat;
    /// C_ij = (r - r_gammaHat)^{y_i y_j}.
    std::vector<std::vector<JetScalar>> residue;
    Report report;
};

/// Integrates d_i gammaHat = rho(p_i) gammaHat with gammaHat(0) = 1 along the
/// coordinate path (t_1 first, then t_2, ...), ignoring the a-components of p.
/// Checks: "flatness-mod-a", "residue-in-a-wedge-a", "residue-closed".
Reconstruction reconstructGamma(const PFamily& p, const MatrixRep& rep);

struct RNF {
    LiePtr lie;
    std::shared_ptr<const MatrixRep> rep;
    GammaMatrixJet gamma;
    GammaResult result;
};

/// g = gl(n) semidirect C^n, gamma = f'(lambda)^* as the block diag(A, 1) with
/// A_kj = d_k f_j. `f` holds n jets in n variables. DomainError when f'(0) is singular.
RNF rNF(int n, const std::vector<JetScalar>& f);

/// Membership of a jet vector in n(a), up to the given degree.
bool inNormalizer(const LieAlgebraSpec& g, const std::vector<JetScalar>& x, int trust);

} // namespace dybx
