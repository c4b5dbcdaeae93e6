#pragma once

// The Hecke algebra of type D_l with full multiplication at desk scale, the
// q-Schur algebroid and its extension by the diagram automorphism, the
// subalgebra V = 1_{O+} (S + s_0 S) 1_{O+}, and the element b.

#include "dqs/laurent.hpp"
#include "dqs/signed_perm.hpp"

#include <map>

namespace dqs {

class HeckeElt {
public:
    HeckeElt() = default;
    explicit HeckeElt(int l) : l_(l) {}
    static HeckeElt unit(int l);  // h_1
    static HeckeElt basis(const SignedPerm& w);

    int l() const { return l_; }
    const std::map<SignedPerm, Laurent>& support() const { return sup_; }
    Laurent coeff(const SignedPerm& w) const;
    void add(const SignedPerm& w, const Laurent& c);
    bool is_zero() const { return sup_.empty(); }
    bool operator==(const HeckeElt& o) const { return l_ == o.l_ && sup_ == o.sup_; }
    bool operator!=(const HeckeElt& o) const { return !(*this == o); }

    HeckeElt operator+(const HeckeElt& o) const;
    HeckeElt operator-(const HeckeElt& o) const;
    HeckeElt scale(const Laurent& c) const;
    HeckeElt& operator+=(const HeckeElt& o) { return *this = *this + o; }
    HeckeElt& operator-=(const HeckeElt& o) { return *this = *this - o; }

    HeckeElt mult_gen(int i) const;       // right multiplication by h_i, i in N
    HeckeElt mult_gen_left(int i) const;  // left multiplication by h_i
    HeckeElt operator*(const HeckeElt& o) const;

    HeckeElt bar() const;          // anti-linear algebra involution
    HeckeElt rho() const;          // linear anti-involution h_w -> h_{w^{-1}}
    HeckeElt gamma_twist() const;  // algebra automorphism h_w -> h_{gamma(w)}
    Laurent tr() const;            // coefficient of h_1
    HeckeElt divide_exact(const Laurent& c) const;

private:
    int l_ = 0;
    std::map<SignedPerm, Laurent> sup_;  // w -> nonzero coefficient
};

// b_{w_I} = sum_{w in W_I} q^{l(w_I)-l(w)} h_w.
HeckeElt b_longest(const ParabolicLabel& I);
// pi_I (balanced Poincare polynomial), cached.
const Laurent& poincare(const ParabolicLabel& I);

struct SchurBlockKey {
    ParabolicLabel left, right;
    bool twisted = false;  // if set, the element is s_0 * (stored Hecke elt)

    bool operator<(const SchurBlockKey& o) const;
    bool operator==(const SchurBlockKey& o) const {
        return left == o.left && right == o.right && twisted == o.twisted;
    }
};

// An element of the extended q-Schur algebroid S + s_0 S: a sum of blocks,
// the block at (I, J, twisted) storing x in b_{w_I} H n H b_{w_J} and
// representing x (untwisted) or s_0 x (twisted).
class SchurElt {
public:
    SchurElt() = default;
    explicit SchurElt(int l) : l_(l) {}
    static SchurElt unit(const ParabolicLabel& I);  // 1_I = b_{w_I} as a block
    // Wrap a Hecke element as a block; validates the divisibility invariants
    // h_i x = q^{-1} x (i in I) and x h_j = q^{-1} x (j in J).
    static SchurElt block(const ParabolicLabel& I, const ParabolicLabel& J, bool twisted,
                          const HeckeElt& x);

    int l() const { return l_; }
    const std::map<SchurBlockKey, HeckeElt>& blocks() const { return blocks_; }
    HeckeElt block_at(const ParabolicLabel& I, const ParabolicLabel& J, bool twisted) const;
    bool is_zero() const { return blocks_.empty(); }
    bool operator==(const SchurElt& o) const { return l_ == o.l_ && blocks_ == o.blocks_; }
    bool operator!=(const SchurElt& o) const { return !(*this == o); }

    SchurElt operator+(const SchurElt& o) const;
    SchurElt operator-(const SchurElt& o) const;
    SchurElt scale(const Laurent& c) const;
    SchurElt& operator+=(const SchurElt& o) { return *this = *this + o; }

    // Composition x o y = (1/pi_mid) x y blockwise, with the twist rule
    // (x + s_0 y)(u + s_0 v) = (x u + gamma(y) v) + s_0 (y u + gamma(x) v).
    SchurElt compose(const SchurElt& o) const;
    SchurElt bar() const;  // blockwise bar
    SchurElt rho() const;  // rho(x + s_0 y) = rho(x) + s_0 gamma(rho(y))
    // (x + s_0 y, u + s_0 v) = (x, u) + (y, v) with (x, u) = tr(rho(x) u)/pi_I
    // on matching blocks, distinct summands orthogonal.
    Laurent form(const SchurElt& o) const;

private:
    int l_ = 0;
    std::map<SchurBlockKey, HeckeElt> blocks_;

    void add_block(const SchurBlockKey& key, const HeckeElt& x);
};

// h_{IdJ} = sum_{w in W_I d W_J} q^{l(IdJ)-l(w)} h_w; d must be the minimal
// length element of its double coset.
SchurElt standard_basis_elt(const ParabolicLabel& I, const SignedPerm& d,
                            const ParabolicLabel& J, bool twisted = false);
// b_{I,J} := b_{I1J} = h_{I1J}, defined for any I, J.
SchurElt b_IJ(const ParabolicLabel& I, const ParabolicLabel& J);

// The Kazhdan-Lusztig basis element of V for the n-th double coset:
// b_{(O+)d_n(O+)} for n even, s_0 b_{(O-)s_0d_n(O+)} for n odd; constructed
// by transporting the icanonical expansion through the V(l)-isomorphism
// (coefficients bar-applied onto bars of standard elements).
SchurElt kl_coset_elt(int l, int n);
// The corresponding standard element of V: h_{(O+)d_n(O+)} or
// s_0 h_{(O-)s_0d_n(O+)}.
SchurElt v_standard_elt(int l, int n);

// b = s_0 b_{O-,O+}.
SchurElt schur_b(int l);
// b^{on}, computed by Hecke composition and independently checked against the
// recursion transported from V(l); disagreement throws.
SchurElt b_power(int n, int l);

}  // namespace dqs
