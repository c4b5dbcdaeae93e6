#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "dqs/hecke.hpp"
#include "dqs/vmodule.hpp"

using namespace dqs;

namespace {

VlElt b_act_pow(int l, int n) {
    VlElt v = VlElt::eta(l);
    for (int k = 0; k < n; ++k) v = b_act(v);
    return v;
}

// The isomorphism phi: V(l) -> V, f^{(n)} eta |-> bar of the standard coset
// element (so that bar f^{(n)} eta |-> h_{(O+)d_n(O+)} resp. its s_0-twist).
SchurElt phi(const VlElt& v) {
    SchurElt out(v.l);
    for (int n = 0; n <= v.l; ++n)
        out += v_standard_elt(v.l, n).bar().scale(v.coords[n]);
    return out;
}

}  // namespace

TEST_CASE("icanonical closed formula agrees with the recursion") {
    for (int l = 1; l <= 6; ++l)
        for (int n = 0; n <= l + 2; ++n) {
            VlElt v = icanonical(l, n);  // throws if formula and recursion differ
            if (n > l) CHECK(v.is_zero());
        }
    CHECK(icanonical(3, 0) == VlElt::eta(3));
    // b^{(2)} eta_2 = f^{(2)} eta_2 + q^-1 eta_2
    VlElt expect = VlElt::standard(2, 2) + VlElt::eta(2).scale(Laurent::q(-1));
    CHECK(icanonical(2, 2) == expect);
}

TEST_CASE("b-action examples and the ryder recursion") {
    CHECK(b_act(VlElt::eta(3)) == VlElt::standard(3, 1));
    // b.f^{(1)} eta_2 = [2] f^{(2)} eta_2 + q^-1 [2] eta_2
    CHECK(b_act(VlElt::standard(2, 1)) ==
          VlElt::standard(2, 2).scale(qint(2)) + VlElt::eta(2).scale(qint(2).times_q(-1)));
    for (int l = 1; l <= 6; ++l)
        for (int n = 0; n <= l; ++n) {
            VlElt lhs = b_act(icanonical(l, n));
            VlElt rhs = icanonical(l, n + 1).scale(qint(n + 1));
            if (n % 2 == parity_t(l)) rhs = rhs + icanonical(l, n - 1 < 0 ? l + 1 : n - 1)
                                                .scale(n == 0 ? Laurent() : qint(n));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("icanonical minus standard lies in q^-1 Z[q^-1] lower terms") {
    for (int l = 1; l <= 6; ++l)
        for (int n = 0; n <= l; ++n) {
            VlElt diff = icanonical(l, n) - VlElt::standard(l, n);
            for (int i = 0; i <= l; ++i) {
                if (i >= n) CHECK(diff.coords[i].is_zero());
                if (!diff.coords[i].is_zero()) CHECK(diff.coords[i].top_degree() <= -1);
            }
        }
}

TEST_CASE("monomial expansion: product-formula inversion equals the partition formula") {
    for (int t = 0; t <= 1; ++t)
        for (int n = 0; n <= 8; ++n) {
            auto lhs = monomial_expand_t(n, t);
            auto rhs = ohio_expand_t(n, t);
            CHECK(lhs == rhs);
            for (const auto& c : lhs) {
                CHECK(c == c.bar());  // bar-symmetric
                for (const auto& [e, a] : c.coeffs()) CHECK(a > 0);  // N-combination
            }
        }
    // n=2: b^2 = [2] b^{(2)} + b^{(0)} at t=1, and [2] b^{(2)} alone at t=0.
    auto t1 = monomial_expand_t(2, 1);
    CHECK(t1[0] == Laurent(1));
    CHECK(t1[1].is_zero());
    CHECK(t1[2] == qint(2));
    auto t0 = monomial_expand_t(2, 0);
    CHECK(t0[0].is_zero());
    CHECK(t0[2] == qint(2));
    // V(l)-truncation drops nothing but the vanishing coordinates.
    auto v = monomial_expand(6, 3);
    auto full = monomial_expand_t(6, 1);
    CHECK(v.size() == 4);
    CHECK(v == std::vector<Laurent>(full.begin(), full.begin() + 4));
}

TEST_CASE("bilinear form: diagonal values, cute1, cute2") {
    for (int l = 1; l <= 6; ++l) {
        CHECK(bilinear_form_l(VlElt::eta(l), VlElt::eta(l)) == Laurent(1));
        int t = parity_t(l);
        for (int n = 0; n <= l; ++n) {
            Laurent d = bilinear_form_l(VlElt::standard(l, n), VlElt::standard(l, n));
            CHECK(d.bar() == Laurent::q(n * (l - n)) * qbinom(l, n));
        }
        // cute1: (eta, b^{(2n)} eta) = q^{-n(l+t-1)} qbinom((l-t)/2, n)_{q^2}
        for (int n = 0; 2 * n <= l + 2; ++n) {
            Laurent lhs = bilinear_form_l(VlElt::eta(l), 2 * n <= l ? icanonical(l, 2 * n)
                                                                    : VlElt(l));
            CHECK(lhs == Laurent::q(-n * (l + t - 1)) * qbinom((l - t) / 2, n, 2));
        }
        // cute2: top degree of (b^n eta, b^n eta)
        for (int n = 0; n <= l + 2; ++n) {
            VlElt v = b_act_pow(l, n);
            Laurent f = bilinear_form_l(v, v);
            int expect = n <= l ? n * (n - 1) : (2 * n - l) * (l - 1);
            CHECK(f.top_degree() == expect);
        }
    }
    CHECK(bilinear_form_l(VlElt::standard(2, 1), VlElt::standard(2, 1)) ==
          qint(2).times_q(-1));
}

TEST_CASE("ibar is an anti-linear involution fixing the icanonical basis") {
    for (int l = 1; l <= 5; ++l) {
        for (int n = 0; n <= l; ++n) {
            CHECK(ibar(icanonical(l, n)) == icanonical(l, n));
            VlElt v = VlElt::standard(l, n);
            CHECK(ibar(ibar(v)) == v);
            CHECK(ibar(v.scale(Laurent::q(3))) == ibar(v).scale(Laurent::q(-3)));
            CHECK(ibar(b_act(v)) == b_act(ibar(v)));
        }
        CHECK(ibar(VlElt::eta(l)) == VlElt::eta(l));
    }
}

TEST_CASE("degenerate level 1: the model Z[q,q^-1][b]/(b^2-1)") {
    VlElt eta = VlElt::eta(1);
    CHECK(b_act(b_act(eta)) == eta);
    CHECK(icanonical(1, 1) == VlElt::standard(1, 1));
    // b^3 = [2][3] b^{(3)} + b^{(1)} at t=1; in V(1) the first term dies.
    CHECK(monomial_expand_t(3, 1)[1] == Laurent(1));
    CHECK(monomial_expand_t(3, 1)[3] == qint(2) * qint(3));
    CHECK(monomial_expand(3, 1) == std::vector<Laurent>{Laurent(), Laurent(1)});
}

TEST_CASE("phi intertwines the b-action, bar, and forms (l <= 3)") {
    for (int l = 2; l <= 3; ++l) {
        SchurElt b = schur_b(l);
        CHECK(phi(VlElt::eta(l)) == SchurElt::unit(label_Op(l)));
        for (int n = 0; n <= l; ++n) {
            VlElt v = VlElt::standard(l, n);
            CHECK(phi(b_act(v)) == b.compose(phi(v)));
            CHECK(phi(ibar(v)) == phi(v).bar());
            // phi(b^{(n)} eta) is the Kazhdan-Lusztig coset element.
            CHECK(phi(icanonical(l, n)) == kl_coset_elt(l, n));
            // bar((bar u, bar w)_l) = q^{-binom(l,2)} (phi u, phi w)
            for (int m = 0; m <= l; ++m) {
                VlElt w = VlElt::standard(l, m);
                Laurent lhs = bilinear_form_l(ibar(v), ibar(w)).bar();
                Laurent rhs = phi(v).form(phi(w)).times_q(-l * (l - 1) / 2);
                CHECK(lhs == rhs);
            }
        }
    }
}
