#include "dqs/hecke.hpp"

#include "dqs/vmodule.hpp"

#include <mutex>
#include <stdexcept>

namespace dqs {

HeckeElt HeckeElt::unit(int l) { return basis(SignedPerm::identity(l)); }

HeckeElt HeckeElt::basis(const SignedPerm& w) {
    HeckeElt out(w.l());
    out.add(w, Laurent(1));
    return out;
}

Laurent HeckeElt::coeff(const SignedPerm& w) const {
    auto it = sup_.find(w);
    return it == sup_.end() ? Laurent() : it->second;
}

void HeckeElt::add(const SignedPerm& w, const Laurent& c) {
    if (c.is_zero()) return;
    Laurent& slot = sup_[w];
    slot += c;
    if (slot.is_zero()) sup_.erase(w);
}

HeckeElt HeckeElt::operator+(const HeckeElt& o) const {
    HeckeElt out = *this;
    for (const auto& [w, c] : o.sup_) out.add(w, c);
    return out;
}

HeckeElt HeckeElt::operator-(const HeckeElt& o) const {
    HeckeElt out = *this;
    for (const auto& [w, c] : o.sup_) out.add(w, -c);
    return out;
}

HeckeElt HeckeElt::scale(const Laurent& c) const {
    HeckeElt out(l_);
    for (const auto& [w, cw] : sup_) out.add(w, cw * c);
    return out;
}

HeckeElt HeckeElt::mult_gen(int i) const {
    HeckeElt out(l_);
    SignedPerm s = SignedPerm::gen(l_, i);
    Laurent drop = Laurent::q(-1) - Laurent::q(1);
    for (const auto& [w, c] : sup_) {
        SignedPerm ws = w * s;
        out.add(ws, c);
        if (ws.length() < w.length()) out.add(w, c * drop);
    }
    return out;
}

HeckeElt HeckeElt::mult_gen_left(int i) const {
    HeckeElt out(l_);
    SignedPerm s = SignedPerm::gen(l_, i);
    Laurent drop = Laurent::q(-1) - Laurent::q(1);
    for (const auto& [w, c] : sup_) {
        SignedPerm sw = s * w;
        out.add(sw, c);
        if (sw.length() < w.length()) out.add(w, c * drop);
    }
    return out;
}

HeckeElt HeckeElt::operator*(const HeckeElt& o) const {
    HeckeElt out(l_);
    for (const auto& [w, c] : o.sup_) {
        HeckeElt t = *this;
        for (int i : canonical_word(w)) t = t.mult_gen(i);
        out += t.scale(c);
    }
    return out;
}

HeckeElt HeckeElt::bar() const {
    HeckeElt out(l_);
    Laurent raise = Laurent::q(1) - Laurent::q(-1);
    for (const auto& [w, c] : sup_) {
        // bar(h_w) = bar(h_{i_1}) ... bar(h_{i_k}) with bar(h_i) = h_i + (q - q^{-1}).
        HeckeElt t = unit(l_);
        for (int i : canonical_word(w)) t = t.mult_gen(i) + t.scale(raise);
        out += t.scale(c.bar());
    }
    return out;
}

HeckeElt HeckeElt::rho() const {
    HeckeElt out(l_);
    for (const auto& [w, c] : sup_) out.add(w.inverse(), c);
    return out;
}

HeckeElt HeckeElt::gamma_twist() const {
    HeckeElt out(l_);
    for (const auto& [w, c] : sup_) out.add(w.gamma(), c);
    return out;
}

Laurent HeckeElt::tr() const { return coeff(SignedPerm::identity(l_)); }

HeckeElt HeckeElt::divide_exact(const Laurent& c) const {
    HeckeElt out(l_);
    for (const auto& [w, cw] : sup_) out.add(w, cw.divide_exact(c));
    return out;
}

HeckeElt b_longest(const ParabolicLabel& I) {
    HeckeElt out(I.l);
    long top = longest_and_poincare(I).length;
    for (const auto& w : parabolic_elements(I)) out.add(w, Laurent::q((int)(top - w.length())));
    return out;
}

const Laurent& poincare(const ParabolicLabel& I) {
    static std::mutex lock;
    static std::map<ParabolicLabel, Laurent> cache;
    std::lock_guard<std::mutex> guard(lock);
    auto it = cache.find(I);
    if (it == cache.end()) it = cache.emplace(I, longest_and_poincare(I).poincare).first;
    return it->second;
}

bool SchurBlockKey::operator<(const SchurBlockKey& o) const {
    if (!(left == o.left)) return left < o.left;
    if (!(right == o.right)) return right < o.right;
    return twisted < o.twisted;
}

SchurElt SchurElt::unit(const ParabolicLabel& I) {
    return block(I, I, false, b_longest(I));
}

SchurElt SchurElt::block(const ParabolicLabel& I, const ParabolicLabel& J, bool twisted,
                         const HeckeElt& x) {
    SchurElt out(I.l);
    if (x.is_zero()) return out;
    Laurent qinv = Laurent::q(-1);
    for (int i : I.gens)
        if (x.mult_gen_left(i) != x.scale(qinv))
            throw std::runtime_error("SchurElt: block not left-divisible by b_{w_I}");
    for (int j : J.gens)
        if (x.mult_gen(j) != x.scale(qinv))
            throw std::runtime_error("SchurElt: block not right-divisible by b_{w_J}");
    out.blocks_.emplace(SchurBlockKey{I, J, twisted}, x);
    return out;
}

HeckeElt SchurElt::block_at(const ParabolicLabel& I, const ParabolicLabel& J,
                            bool twisted) const {
    auto it = blocks_.find(SchurBlockKey{I, J, twisted});
    return it == blocks_.end() ? HeckeElt(l_) : it->second;
}

void SchurElt::add_block(const SchurBlockKey& key, const HeckeElt& x) {
    if (x.is_zero()) return;
    auto it = blocks_.find(key);
    if (it == blocks_.end()) {
        blocks_.emplace(key, x);
        return;
    }
    it->second += x;
    if (it->second.is_zero()) blocks_.erase(it);
}

SchurElt SchurElt::operator+(const SchurElt& o) const {
    SchurElt out = *this;
    for (const auto& [key, x] : o.blocks_) out.add_block(key, x);
    return out;
}

SchurElt SchurElt::operator-(const SchurElt& o) const {
    SchurElt out = *this;
    for (const auto& [key, x] : o.blocks_) out.add_block(key, x.scale(Laurent(-1)));
    return out;
}

SchurElt SchurElt::scale(const Laurent& c) const {
    SchurElt out(l_);
    if (c.is_zero()) return out;
    for (const auto& [key, x] : blocks_) out.add_block(key, x.scale(c));
    return out;
}

SchurElt SchurElt::compose(const SchurElt& o) const {
    SchurElt out(l_);
    for (const auto& [k1, x] : blocks_)
        for (const auto& [k2, y] : o.blocks_) {
            // (s_0^a x)(s_0^b y) with s_0 pulled to the front via gamma.
            const HeckeElt& lhs_raw = x;
            HeckeElt lhs = k2.twisted ? lhs_raw.gamma_twist() : lhs_raw;
            ParabolicLabel lhs_left = k2.twisted ? k1.left.gamma() : k1.left;
            ParabolicLabel lhs_right = k2.twisted ? k1.right.gamma() : k1.right;
            if (!(lhs_right == k2.left)) continue;
            SchurBlockKey key{lhs_left, k2.right, k1.twisted != k2.twisted};
            out.add_block(key, (lhs * y).divide_exact(poincare(k2.left)));
        }
    return out;
}

SchurElt SchurElt::bar() const {
    SchurElt out(l_);
    for (const auto& [key, x] : blocks_) out.add_block(key, x.bar());
    return out;
}

SchurElt SchurElt::rho() const {
    SchurElt out(l_);
    for (const auto& [key, x] : blocks_) {
        if (!key.twisted) {
            out.add_block(SchurBlockKey{key.right, key.left, false}, x.rho());
        } else {
            // rho(s_0 y) = s_0 gamma(rho(y))
            out.add_block(SchurBlockKey{key.right.gamma(), key.left.gamma(), true},
                          x.rho().gamma_twist());
        }
    }
    return out;
}

Laurent SchurElt::form(const SchurElt& o) const {
    Laurent out;
    for (const auto& [key, x] : blocks_) {
        auto it = o.blocks_.find(key);
        if (it == o.blocks_.end()) continue;
        out += (x.rho() * it->second).tr().divide_exact(poincare(key.left));
    }
    return out;
}

SchurElt standard_basis_elt(const ParabolicLabel& I, const SignedPerm& d,
                            const ParabolicLabel& J, bool twisted) {
    for (int i : I.gens)
        if (d.left_descent(i)) throw std::runtime_error("standard_basis_elt: d not minimal");
    for (int j : J.gens)
        if (d.right_descent(j)) throw std::runtime_error("standard_basis_elt: d not minimal");
    auto data = coset_length_data(I, d, J);
    HeckeElt x(I.l);
    for (const auto& w : double_coset_elements(I, d, J))
        x.add(w, Laurent::q((int)(data.ell - w.length())));
    return SchurElt::block(I, J, twisted, x);
}

SchurElt b_IJ(const ParabolicLabel& I, const ParabolicLabel& J) {
    return standard_basis_elt(I, SignedPerm::identity(I.l), J);
}

SchurElt v_standard_elt(int l, int n) {
    if (n % 2 == 0) return standard_basis_elt(label_Op(l), d_elt(l, n), label_Op(l));
    return standard_basis_elt(label_Om(l), s0n_d_elt(l, n), label_Op(l), true);
}

SchurElt kl_coset_elt(int l, int n) {
    SchurElt out(l);
    for (int i = 0; 2 * i <= n; ++i) {
        if (n - 2 * i > l) continue;
        out += v_standard_elt(l, n - 2 * i).bar().scale(icanonical_coeff(l, n, i));
    }
    return out;
}

SchurElt schur_b(int l) {
    return standard_basis_elt(label_Om(l), SignedPerm::identity(l), label_Op(l), true);
}

SchurElt b_power(int n, int l) {
    SchurElt p = SchurElt::unit(label_Op(l));
    SchurElt b = schur_b(l);
    for (int k = 0; k < n; ++k) p = b.compose(p);
    // Independent check through V(l): expand b^n over the idivided powers and
    // transport each b^{(m)} to its Kazhdan-Lusztig coset element.
    auto coeffs = monomial_expand(n, l);
    SchurElt expect(l);
    for (size_t m = 0; m < coeffs.size(); ++m)
        expect += kl_coset_elt(l, (int)m).scale(coeffs[m]);
    if (p != expect) throw std::runtime_error("b_power: Hecke and V(l) expansions disagree");
    return p;
}

}  // namespace dqs
