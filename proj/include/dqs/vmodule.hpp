#pragma once

// The level-l module V(l) over Z[q,q^-1]: standard basis f^{(n)} eta_l,
// icanonical basis b^{(n)} eta_l, the b-action, the bar involution, the
// bilinear form, and the expansion of monomials b^n in idivided powers.

#include "dqs/laurent.hpp"

#include <vector>

namespace dqs {

struct VlElt {
    int l = 0;
    std::vector<Laurent> coords;  // coords[n] on f^{(n)} eta_l, 0 <= n <= l

    explicit VlElt(int l_) : l(l_), coords(l_ + 1) {}
    static VlElt eta(int l);
    static VlElt standard(int l, int n);  // f^{(n)} eta_l; zero for n outside 0..l

    bool is_zero() const;
    bool operator==(const VlElt& o) const { return l == o.l && coords == o.coords; }
    bool operator!=(const VlElt& o) const { return !(*this == o); }
    VlElt operator+(const VlElt& o) const;
    VlElt operator-(const VlElt& o) const;
    VlElt scale(const Laurent& c) const;
};

// t = l mod 2, the parity parameter of the iquantum algebra acting on V(l).
inline int parity_t(int l) { return l & 1; }

// Coefficient of f^{(n-2i)} eta_l in b^{(n)} eta_l (closed formula).
Laurent icanonical_coeff(int l, int n, int i);
// b^{(n)} eta_l; zero for n > l. The closed formula is cross-checked against
// the recursion b.b^{(n)} = [n+1] b^{(n+1)} (+ [n] b^{(n-1)} iff n = t mod 2);
// any disagreement throws.
VlElt icanonical(int l, int n);

VlElt f_act(const VlElt& v);      // f.f^{(n)} = [n+1] f^{(n+1)}
VlElt rho_f_act(const VlElt& v);  // rho(f).f^{(n)} = q^{2n-l-1}[l+1-n] f^{(n-1)}
VlElt b_act(const VlElt& v);      // b = f + rho(f)

// The symmetric bilinear form with (eta,eta) = 1 and
// (f^{(n)} eta, f^{(n)} eta) = bar(q^{n(l-n)} qbinom(l,n)).
Laurent bilinear_form_l(const VlElt& u, const VlElt& v);

// The anti-linear involution fixing eta_l and commuting with the b-action;
// it fixes every b^{(n)} eta_l.
VlElt ibar(const VlElt& v);

// Coefficients of b^n on the idivided powers b^{(m)}, m = 0..n, in the
// abstract algebra at parameter t; computed by exact triangular inversion of
// the product formula for b^{(m)} in Q(q)[b].
std::vector<Laurent> monomial_expand_t(int n, int t);
// The same coefficients from the partition-combinatorial formula, under the
// convention that all i parts of the padded partition (zeros included) must
// be != t mod 2.
std::vector<Laurent> ohio_expand_t(int n, int t);
// V(l)-truncation: coefficients of b^n eta_l on b^{(m)} eta_l, m = 0..min(n,l).
std::vector<Laurent> monomial_expand(int n, int l);

}  // namespace dqs
