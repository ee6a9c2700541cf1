#pragma once

#include <string>

namespace dybx {

/// Global normalizations the source leaves implicit. Set once before a run.
struct Conventions {
    /// u^v = u(x)v - v(x)u when true, half of that otherwise.
    bool wedgeFull = true;
    /// QDYBE shift pattern: R12(l-h3) R13 R23(l-h1) = R23 R13(l-h2) R12 when true;
    /// the mirrored pattern R12 R13(l-h2) R23 = R23(l-h1) R13 R12(l-h3) otherwise.
    /// Shifts are inserted right next to the shifted factor. With that reading,
    /// R = J21^-1 J of a twist satisfies the mirrored pattern.
    bool qdybeFelder = false;
    /// Sign s in r = s * (rho21 - rho) for the quasi-classical limit.
    int limitSign = -1;
    /// Order in the x series: rho(y)^alpha d^alpha gamma when true. False puts the
    /// derivative on the left, which breaks the realization identity once y^2 != 0.
    bool xYPowersLeft = true;

    std::string describe() const;
};

Conventions& conventions();

} // namespace dybx
