#pragma once

// Sparse multivariate polynomials over Q in variables x_1,...,x_l, graded with
// deg x_i = 2, together with the Weyl group action for the type D realization
// (alpha_i = x_{i+1} - x_i for i >= 1, alpha_{-1} = x_2 + x_1, s_0: x_1 -> -x_1)
// and the Demazure operators partial_i(f) = (f - s_i f)/alpha_i.

#include "dqs/signed_perm.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <vector>

namespace dqs {

using Rat = boost::multiprecision::cpp_rational;

class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(int l) : l_(l) {}
    static MultiPoly constant(int l, const Rat& c);
    static MultiPoly var(int l, int i);  // x_i, 1 <= i <= l

    int l() const { return l_; }
    bool is_zero() const { return terms_.empty(); }
    bool operator==(const MultiPoly& o) const { return l_ == o.l_ && terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }
    bool operator<(const MultiPoly& o) const;

    const std::map<std::vector<int>, Rat>& terms() const { return terms_; }
    void add_term(const std::vector<int>& exps, const Rat& c);

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly scale(const Rat& c) const;
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    MultiPoly pow(int n) const;

    // Degree with deg x_i = 2 (top degree over terms); -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;

    // Substitution action of a (possibly extended) signed permutation:
    // x_i -> sign * x_j where w(i) = +-j.
    MultiPoly act(const SignedPerm& w) const;
    MultiPoly gamma() const;  // s_0 substitution, x_1 -> -x_1

    bool invariant_under(int i) const;  // under s_i, i in {-1,0,...}
    bool invariant_under(const ParabolicLabel& I) const;

    // Demazure operator for i in N = {-1, 1, ..., l-1}.
    MultiPoly demazure(int i) const;
    // Composite partial_{w[0]} . partial_{w[1]} . ... (leftmost letter applied last...
    // the word (i_1,...,i_k) gives partial_{i_1} applied to (partial_{i_2} (... f)).
    MultiPoly demazure_word(const std::vector<int>& word) const;

    // Exact division (throws std::runtime_error on inexactness).
    MultiPoly divide_exact(const MultiPoly& divisor) const;

    std::string to_string() const;

private:
    int l_ = 0;
    std::map<std::vector<int>, Rat> terms_;  // exponent vector -> nonzero coeff
};

// e_r(x_lo,...,x_hi) as a polynomial in l variables.
MultiPoly elementary_poly(int l, int r, int lo, int hi);
// h_r(x_1,...,x_l)
MultiPoly complete_poly(int l, int r);
// Product of the positive roots of the parabolic W_I.
MultiPoly mu(const ParabolicLabel& I);
// mu_I / mu_J (exact division); the product-coproduct element of R^J over R^I
// when J is a sub-label of I.
MultiPoly eta(const ParabolicLabel& I, const ParabolicLabel& J);
// The Frobenius trace R^J -> R^I for J a sub-label of I: the Demazure word for
// the canonical reduced word of w_I w_J^{-1}.
MultiPoly frob_trace(const ParabolicLabel& I, const ParabolicLabel& J, const MultiPoly& f);

}  // namespace dqs
