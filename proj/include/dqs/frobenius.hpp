#pragma once

// Graded Frobenius extensions R^I <= R^J for nested parabolic labels J <= I:
// homogeneous bases, dual bases with respect to the Demazure trace, and the
// trace maps themselves. Bases are constructed greedily degree by degree with
// exact rational linear algebra; ranks and graded ranks are checked against
// the Poincare polynomial ratio pi_I^+ / pi_J^+.

#include "dqs/multipoly.hpp"

#include <utility>
#include <vector>

namespace dqs {

struct FrobeniusStep {
    ParabolicLabel lower;  // I: the base ring R^I
    ParabolicLabel upper;  // J, a subset of I: the extension ring R^J
    std::vector<MultiPoly> basis;  // homogeneous basis of R^J over R^I
    std::vector<MultiPoly> dual;   // tr(basis[a] * dual[b]) = delta_{ab}
    std::vector<int> trace_word;   // canonical reduced word of w_I w_J^{-1}

    // tr_I^J(f); rejects f not invariant under W_J and checks the result is
    // W_I-invariant.
    MultiPoly trace(const MultiPoly& f) const;
    int rank() const { return (int)basis.size(); }
    // The pairs (b, b_dual) representing the coproduct of 1.
    std::vector<std::pair<MultiPoly, MultiPoly>> coproduct() const;
};

// Build (and memoize) the Frobenius step data for J a subset of I.
const FrobeniusStep& frobenius_step(const ParabolicLabel& I, const ParabolicLabel& J);

// W_I-orbit sums of monomials of total exponent degree k: a Q-basis of the
// degree-2k component of R^I.
std::vector<MultiPoly> invariant_basis(const ParabolicLabel& I, int k);

// Write f in R^J as sum_a coeff_a * basis[a] with coeff_a in R^I:
// coeff_a = tr(f * dual[a]).
std::vector<MultiPoly> expand_over_base(const FrobeniusStep& step, const MultiPoly& f);

// The alternating product formula eta_I^J = prod_{J<=K<=I} mu_K^{+-1}
// (sign by |K| = |I| mod 2), a polynomial in R^J.
MultiPoly eta_alternating(const ParabolicLabel& I, const ParabolicLabel& J);

}  // namespace dqs
