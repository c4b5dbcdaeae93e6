#pragma once

// The Weyl group of type D_l realized as signed permutations of {1,...,l}
// with an even number of sign changes, together with its parabolic subgroup
// combinatorics: lengths, longest elements, Poincare polynomials, and
// minimal double coset representatives.
//
// Generator indexing: N = {-1, 1, 2, ..., l-1}.
//   s_i (1 <= i <= l-1) swaps i and i+1;
//   s_{-1} maps 1 -> -2, 2 -> -1, fixing the rest.
// The extra reflection s_0 (1 -> -1) is not in W but generates the extension
// to the full hyperoctahedral group; elements with an odd number of sign
// changes (such as d_n for n odd) live there.

#include "dqs/laurent.hpp"

#include <set>
#include <vector>

namespace dqs {

struct ParabolicLabel {
    int l = 0;
    std::set<int> gens;  // subset of {-1, 1, 2, ..., l-1}

    bool contains(int i) const { return gens.count(i) > 0; }
    ParabolicLabel with(int i) const;
    ParabolicLabel without(int i) const;
    ParabolicLabel unite(const ParabolicLabel& o) const;
    ParabolicLabel intersect(const ParabolicLabel& o) const;
    // Diagram automorphism swapping -1 <-> 1.
    ParabolicLabel gamma() const;
    bool gamma_stable() const { return contains(-1) == contains(1); }

    bool operator==(const ParabolicLabel& o) const { return l == o.l && gens == o.gens; }
    bool operator<(const ParabolicLabel& o) const;
    std::string to_string() const;
};

// Standard labels: O = {2,...,l-1}, O+ = O u {1}, O- = O u {-1}, O+- = O u {-1,1},
// and the n-hatted versions with n removed from the middle part.
ParabolicLabel label_O(int l);
ParabolicLabel label_Op(int l);
ParabolicLabel label_Om(int l);
ParabolicLabel label_Opm(int l);
ParabolicLabel label_Ohat(int l, int n);    // O minus {n}
ParabolicLabel label_Ohat_p(int l, int n);  // (O minus {n}) u {1}
ParabolicLabel label_Ohat_m(int l, int n);  // (O minus {n}) u {-1}
ParabolicLabel label_Ohat_pm(int l, int n);
ParabolicLabel label_empty(int l);

class SignedPerm {
public:
    SignedPerm() = default;
    explicit SignedPerm(std::vector<int> images);

    static SignedPerm identity(int l);
    // i in {-1, 0, 1, ..., l-1}; s_0 is the extended reflection 1 -> -1.
    static SignedPerm gen(int l, int i);

    int l() const { return (int)img_.size(); }
    // w(v) for signed v with 1 <= |v| <= l.
    int apply(int v) const;
    const std::vector<int>& images() const { return img_; }

    SignedPerm operator*(const SignedPerm& o) const;  // (a*b)(v) = a(b(v))
    SignedPerm inverse() const;
    bool operator==(const SignedPerm& o) const { return img_ == o.img_; }
    bool operator<(const SignedPerm& o) const { return img_ < o.img_; }

    int neg_count() const;
    bool in_weyl_group() const { return neg_count() % 2 == 0; }
    // Type D length; requires in_weyl_group().
    long length() const;
    bool left_descent(int i) const;   // l(s_i w) < l(w), i in N
    bool right_descent(int i) const;  // l(w s_i) < l(w)
    // Conjugation by s_0 (the diagram automorphism on W).
    SignedPerm gamma() const;

    std::string to_string() const;

private:
    std::vector<int> img_;
};

// The signed permutation d_n: x_i -> -x_{n+1-i} for i <= n, fixing the rest.
SignedPerm d_elt(int l, int n);
// s_0^n d_n, which lies in W for all n.
SignedPerm s0n_d_elt(int l, int n);

// All elements of the parabolic subgroup W_I (BFS closure over its generators).
std::vector<SignedPerm> parabolic_elements(const ParabolicLabel& I);

struct LongestPoincare {
    SignedPerm w0;
    long length = 0;
    Laurent poincare_plus;  // pi_I^+ = sum over W_I of q^{2 l(w)}
    Laurent poincare;       // pi_I = q^{-l(w_I)} pi_I^+
};
LongestPoincare longest_and_poincare(const ParabolicLabel& I);

// All elements of the full Weyl group of type D_l (use only for small l).
std::vector<SignedPerm> weyl_elements(int l);

// Minimal-length representatives of double cosets W_I \ W / W_J, sorted by length.
std::vector<SignedPerm> min_double_cosets(const ParabolicLabel& I, const ParabolicLabel& J);

// All elements of W_I d W_J.
std::vector<SignedPerm> double_coset_elements(const ParabolicLabel& I, const SignedPerm& d,
                                              const ParabolicLabel& J);

struct CosetLengthData {
    ParabolicLabel left_redundancy;  // {i in I : s_i d = d s_j for some j in J}
    long ell = 0;                    // l(IdJ) = l(w_I) - l(w_LR) + l(d) + l(w_J)
};
CosetLengthData coset_length_data(const ParabolicLabel& I, const SignedPerm& d,
                                  const ParabolicLabel& J);

// Lexicographically smallest reduced word of w over generators indexed by N
// with the order -1 < 1 < 2 < ... (greedy smallest left descent).
std::vector<int> canonical_word(const SignedPerm& w);
// Reduced word of w_I w_J^{-1} (J need not be contained in I, but for Frobenius
// traces it is used with J subset of I).
std::vector<int> canonical_word(const ParabolicLabel& I, const ParabolicLabel& J);

}  // namespace dqs
