#pragma once

// Frozen sign configuration.
//
// The Berezin/residue orientation and the signs of the degree>=4 Cartan
// generating functions of k(1|6) are conventions, not derivable facts.  They
// were calibrated once, by requiring the dual relations H_i^* = H_{i+4}, the
// centrality of the quadratic Casimir elements of po(0|2k) (k = 1, 2) and of
// the banded k(1|6) Casimir, and the 2-rho sum rule to hold simultaneously;
// the result is frozen here and asserted by regression tests.  Do not edit
// one constant in isolation.

namespace spo {

// Orientation of the Berezin integral and of the residue: the top
// coefficient is multiplied by this sign.
inline constexpr int kConvSign = -1;

// Sign of the canonical monomials t^{-1} xi^J eta^J (|J| = 2) and
// t^{-2} xi1 xi2 xi3 eta1 eta2 eta3 inside the named Cartan elements
// H_5..H_8 of k(1|6).
inline constexpr int kK16CartanSign = -1;

// Coefficients of the linear (Cartan) part of the k(1|6) Casimir on
// (H_5, H_6, H_8), in the basis fixed by kK16CartanSign.  Half of this
// element, read as a weight through the invariant form, is rho.
inline constexpr int kK16LinearH5 = -4;
inline constexpr int kK16LinearH6 = -2;
inline constexpr int kK16LinearH8 = -4;

// The linear part of the po(0|2k) Casimir is (-2)^(k-1) * H_{I \ {k}}; rho
// is half of it, i.e. -(-2)^(k-2) * H_{I \ {k}}.

}  // namespace spo
