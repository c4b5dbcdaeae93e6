#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "dqs/frobenius.hpp"
#include "dqs/symfunc.hpp"

#include <random>

using namespace dqs;

namespace {

// All Frobenius steps exercised by the library at a given rank, kept at
// brute-force-friendly sizes.
std::vector<std::pair<ParabolicLabel, ParabolicLabel>> standard_steps(int l) {
    std::vector<std::pair<ParabolicLabel, ParabolicLabel>> out = {
        {label_Op(l), label_O(l)},    {label_Om(l), label_O(l)},
        {label_Opm(l), label_Op(l)},  {label_Opm(l), label_Om(l)},
        {label_O(l), label_empty(l)}, {label_O(l), label_O(l)},
    };
    if (l <= 3) out.push_back({label_Opm(l), label_O(l)});
    return out;
}

// Canonical left-module coordinates of a tensor sum_k x_k (x) y_k in
// R^K (x)_{R^I} R^M, relative to the basis of R^K over R^I: coordinate i is
// sum_k tr(x_k * dual_i) * y_k in R^M.
std::vector<MultiPoly> tensor_coords(const FrobeniusStep& left_step,
                                     const std::vector<std::pair<MultiPoly, MultiPoly>>& pairs) {
    std::vector<MultiPoly> coords(left_step.rank(), MultiPoly(left_step.lower.l));
    for (const auto& [x, y] : pairs) {
        auto cs = expand_over_base(left_step, x);
        for (int i = 0; i < left_step.rank(); ++i) coords[i] += cs[i] * y;
    }
    return coords;
}

MultiPoly random_invariant(const ParabolicLabel& J, std::mt19937& rng, int max_deg = 3) {
    MultiPoly f(J.l);
    std::uniform_int_distribution<int> dc(-4, 4);
    for (int k = 0; k <= max_deg; ++k)
        for (const auto& b : invariant_basis(J, k)) f += b.scale(dc(rng));
    return f;
}

}  // namespace

TEST_CASE("duality, counit, and rank for all standard steps") {
    for (int l = 2; l <= 4; ++l) {
        for (const auto& [I, J] : standard_steps(l)) {
            const auto& step = frobenius_step(I, J);
            auto pI = longest_and_poincare(I);
            auto pJ = longest_and_poincare(J);
            CHECK(Laurent(step.rank()) ==
                  Laurent(pI.poincare.eval_at_one() / pJ.poincare.eval_at_one()));
            // tr(basis[a] * dual[b]) = delta_{ab}
            for (int a = 0; a < step.rank(); ++a)
                for (int b = 0; b < step.rank(); ++b) {
                    MultiPoly expect = MultiPoly::constant(l, a == b ? 1 : 0);
                    CHECK(step.trace(step.basis[a] * step.dual[b]) == expect);
                }
            // counit: sum_b b * tr(dual of b) = 1
            MultiPoly counit(l);
            for (int b = 0; b < step.rank(); ++b) counit += step.basis[b] * step.trace(step.dual[b]);
            CHECK(counit == MultiPoly::constant(l, 1));
            // sum_b b * dual of b = mu_I / mu_J
            MultiPoly casimir(l);
            for (int b = 0; b < step.rank(); ++b) casimir += step.basis[b] * step.dual[b];
            CHECK(casimir == eta(I, J));
        }
    }
}

TEST_CASE("trace is R^I-bilinear and rejects non-invariant input") {
    std::mt19937 rng(2024);
    for (int l = 2; l <= 3; ++l) {
        ParabolicLabel I = label_Op(l), J = label_O(l);
        const auto& step = frobenius_step(I, J);
        MultiPoly f = random_invariant(J, rng);
        for (const auto& a : invariant_basis(I, 2)) CHECK(step.trace(a * f) == a * step.trace(f));
        if (l >= 3) CHECK_THROWS(step.trace(MultiPoly::var(l, 2)));  // x_2 not W_O-invariant
    }
}

TEST_CASE("explicit dual pair for the step (O+, O)") {
    for (int l = 2; l <= 4; ++l) {
        const auto& step = frobenius_step(label_Op(l), label_O(l));
        REQUIRE(step.rank() == l);
        for (int r = 0; r < l; ++r) {
            CHECK(step.basis[r] == MultiPoly::var(l, 1).pow(r));
            CHECK(step.dual[r] ==
                  elementary_poly(l, l - 1 - r, 2, l).scale(r % 2 == 0 ? 1 : -1));
        }
        // The pairing property for the pair {(-1)^r x_1^r} / {e_{l-1-r}(x_2..x_l)}
        // checked directly against the raw Demazure trace.
        for (int r = 0; r < l; ++r)
            for (int s = 0; s < l; ++s) {
                MultiPoly prod = MultiPoly::var(l, 1).pow(r).scale(r % 2 == 0 ? 1 : -1) *
                                 elementary_poly(l, l - 1 - s, 2, l);
                CHECK(frob_trace(label_Op(l), label_O(l), prod) ==
                      MultiPoly::constant(l, r == s ? 1 : 0));
            }
    }
}

TEST_CASE("explicit dual pair for the step (O hat2 +-, O hat2 +)") {
    for (int l = 3; l <= 4; ++l) {
        const auto& step = frobenius_step(label_Ohat_pm(l, 2), label_Ohat_p(l, 2));
        REQUIRE(step.rank() == 2);
        MultiPoly alpha = MultiPoly::var(l, 1) + MultiPoly::var(l, 2);
        CHECK(step.basis[0] == MultiPoly::constant(l, 1));
        CHECK(step.basis[1] == alpha);
        CHECK(step.dual[0] == alpha.scale(Rat(1, 2)));
        CHECK(step.dual[1] == MultiPoly::constant(l, Rat(1, 2)));
    }
}

TEST_CASE("coproduct of (O+, O) at l=2 and the trivial step") {
    const auto& step = frobenius_step(label_Op(2), label_O(2));
    auto cop = step.coproduct();
    REQUIRE(cop.size() == 2);
    CHECK(cop[0].first == MultiPoly::constant(2, 1));
    CHECK(cop[0].second == MultiPoly::var(2, 2));
    CHECK(cop[1].first == MultiPoly::var(2, 1));
    CHECK(cop[1].second == MultiPoly::constant(2, -1));
    // As a tensor this agrees with the pair (1 (x) x_2) + (-x_1 (x) 1).
    auto lhs = tensor_coords(step, cop);
    auto rhs = tensor_coords(step, {{MultiPoly::constant(2, 1), MultiPoly::var(2, 2)},
                                    {-MultiPoly::var(2, 1), MultiPoly::constant(2, 1)}});
    CHECK(lhs == rhs);

    for (int l = 2; l <= 4; ++l) {
        const auto& triv = frobenius_step(label_Op(l), label_Op(l));
        REQUIRE(triv.rank() == 1);
        CHECK(triv.basis[0] == MultiPoly::constant(l, 1));
        CHECK(triv.dual[0] == MultiPoly::constant(l, 1));
        CHECK(triv.trace_word.empty());
    }
}

TEST_CASE("transitivity of traces and product bases on the standard chain") {
    std::mt19937 rng(99);
    for (int l = 2; l <= 3; ++l) {
        std::vector<ParabolicLabel> chain = {label_empty(l), label_O(l), label_Op(l),
                                             label_Opm(l)};
        for (size_t ci = 0; ci < chain.size(); ++ci)
            for (size_t cj = ci; cj < chain.size(); ++cj)
                for (size_t ck = cj; ck < chain.size(); ++ck) {
                    const ParabolicLabel &K = chain[ci], &J = chain[cj], &I = chain[ck];
                    for (int trial = 0; trial < 3; ++trial) {
                        MultiPoly f = random_invariant(K, rng);
                        CHECK(frob_trace(I, K, f) == frob_trace(I, J, frob_trace(J, K, f)));
                    }
                    // Product bases with product duals pair to delta.
                    const auto& lower_step = frobenius_step(I, J);   // B_I^J
                    const auto& upper_step = frobenius_step(J, K);   // B_J^K
                    for (const auto& [a, ad] : upper_step.coproduct())
                        for (const auto& [b, bd] : lower_step.coproduct())
                            for (const auto& [a2, ad2] : upper_step.coproduct())
                                for (const auto& [b2, bd2] : lower_step.coproduct()) {
                                    MultiPoly tr = frob_trace(I, K, a * b * ad2 * bd2);
                                    bool diag = a == a2 && b == b2;
                                    CHECK(tr == MultiPoly::constant(l, diag ? 1 : 0));
                                }
                }
    }
}

TEST_CASE("deadhead identities on the chain O in O+ in O+-") {
    std::mt19937 rng(5150);
    for (int l = 2; l <= 3; ++l) {
        ParabolicLabel K = label_O(l), J = label_Op(l), I = label_Opm(l);
        const auto& step_IK = frobenius_step(I, K);  // B_I^K, basis of R^K over R^I
        const auto& step_IJ = frobenius_step(I, J);  // B_I^J
        const auto& step_JK = frobenius_step(J, K);  // tr^K_J
        for (int trial = 0; trial < 3; ++trial) {
            MultiPoly f = random_invariant(K, rng);
            // (deadhead1) in R^K (x)_{R^I} R^J
            std::vector<std::pair<MultiPoly, MultiPoly>> lhs1, rhs1;
            for (const auto& [b, bd] : step_IK.coproduct())
                lhs1.push_back({b, step_JK.trace(f * bd)});
            for (const auto& [a, ad] : step_IJ.coproduct()) rhs1.push_back({a * f, ad});
            CHECK(tensor_coords(step_IK, lhs1) == tensor_coords(step_IK, rhs1));
            // (deadhead2) in R^J (x)_{R^I} R^K
            std::vector<std::pair<MultiPoly, MultiPoly>> lhs2, rhs2;
            for (const auto& [b, bd] : step_IK.coproduct())
                lhs2.push_back({step_JK.trace(b * f), bd});
            for (const auto& [a, ad] : step_IJ.coproduct()) rhs2.push_back({a, f * ad});
            CHECK(tensor_coords(step_IJ, lhs2) == tensor_coords(step_IJ, rhs2));
            // (deadhead3) in R^J (x)_{R^I} R^J
            MultiPoly g = random_invariant(J, rng);
            std::vector<std::pair<MultiPoly, MultiPoly>> lhs3, rhs3;
            for (const auto& [b, bd] : step_IJ.coproduct()) {
                lhs3.push_back({b * g, bd});
                rhs3.push_back({b, g * bd});
            }
            CHECK(tensor_coords(step_IJ, lhs3) == tensor_coords(step_IJ, rhs3));
        }
        // (deadhead4) with the intermediate trace: sum b * tr^K_J(dual b) = mu_I/mu_J
        MultiPoly dh4(l);
        for (const auto& [b, bd] : step_IK.coproduct()) dh4 += b * step_JK.trace(bd);
        CHECK(dh4 == eta(I, J));
    }
}

TEST_CASE("alternating mu-product formula for eta") {
    for (int l = 2; l <= 4; ++l) {
        // One-step: eta_{Ii}^I = mu_{Ii}/mu_I.
        CHECK(eta_alternating(label_Op(l), label_O(l)) == eta(label_Op(l), label_O(l)));
        CHECK(eta_alternating(label_Om(l), label_O(l)) == eta(label_Om(l), label_O(l)));
        // Two-step: eta_{Iij}^I = mu_{Iij} mu_I / (mu_{Ii} mu_{Ij}).
        MultiPoly expect = (mu(label_Opm(l)) * mu(label_O(l)))
                               .divide_exact(mu(label_Op(l)) * mu(label_Om(l)));
        CHECK(eta_alternating(label_Opm(l), label_O(l)) == expect);
        CHECK(eta_alternating(label_Opm(l), label_O(l)).invariant_under(label_O(l)));
    }
}

TEST_CASE("trace oracle values for tr^O_{O+}") {
    for (int l = 2; l <= 4; ++l) {
        ParabolicLabel I = label_Op(l), J = label_O(l);
        const auto& step = frobenius_step(I, J);
        CHECK(step.trace(MultiPoly::constant(l, 1)).is_zero());
        CHECK(step.trace(MultiPoly::var(l, 1).pow(l - 1)) ==
              MultiPoly::constant(l, l % 2 == 0 ? -1 : 1));
        // tr^O_{O+}(x_1^n eta^O_{O-}): t at n = 0, -(-1)^l q_n(x)/2 at n > 0.
        MultiPoly eta_minus = eta(label_Om(l), J);
        int t = l % 2 == 0 ? 0 : 1;
        CHECK(step.trace(eta_minus) == MultiPoly::constant(l, t));
        for (int n = 1; n <= 4; ++n) {
            MultiPoly lhs = step.trace(MultiPoly::var(l, 1).pow(n) * eta_minus);
            MultiPoly rhs = schur_q(n).evaluate(l).scale(Rat(l % 2 == 0 ? -1 : 1, 2));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("expansion over the base recovers the element") {
    std::mt19937 rng(77);
    for (int l = 2; l <= 3; ++l) {
        for (const auto& [I, J] : standard_steps(l)) {
            const auto& step = frobenius_step(I, J);
            MultiPoly f = random_invariant(J, rng);
            auto coeffs = expand_over_base(step, f);
            MultiPoly back(l);
            for (int i = 0; i < step.rank(); ++i) {
                CHECK(coeffs[i].invariant_under(I));
                back += coeffs[i] * step.basis[i];
            }
            CHECK(back == f);
        }
    }
}
