#pragma once

// The extended-Soergel-bimodule engine: B^{(x)n} in exact coordinates, the
// elementary diagrammatic maps (dots, cups, caps, crossings), the builders
// u_n, v_n, w_n, r_n, and the primitive idempotents f_n = r_n o v_n.
//
// Conventions: A = R^{O+} (symmetric polynomials); B is R^O as an
// (A,A)-bimodule with the left action twisted by gamma (x_1 -> -x_1) and
// identity in degree 1-l.  Tensor products are over A; normalization moves
// all coefficients to the leftmost factor using the basis {x_1^r} of R^O
// over A together with the gamma sign rule.

#include "dqs/frobenius.hpp"

#include <functional>
#include <map>
#include <vector>

namespace dqs {

class TensorElt {
public:
    TensorElt() = default;
    TensorElt(int l, int n) : l_(l), n_(n) {}
    // 1 (x) 1 (x) ... (x) 1.
    static TensorElt unit(int l, int n);
    // Normalize a pure tensor f_1 (x) ... (x) f_n (all f_i in R^O).
    static TensorElt from_tensor(int l, const std::vector<MultiPoly>& strands);
    // The grid generator x_1^{powers[0]} (x) ... (x) x_1^{powers[n-1]}.
    static TensorElt generator(int l, const std::vector<int>& powers);

    int l() const { return l_; }
    int n() const { return n_; }
    const std::map<std::vector<int>, MultiPoly>& coords() const { return coords_; }
    bool is_zero() const { return coords_.empty(); }
    bool operator==(const TensorElt& o) const;
    bool operator!=(const TensorElt& o) const { return !(*this == o); }

    TensorElt operator+(const TensorElt& o) const;
    TensorElt operator-(const TensorElt& o) const;
    TensorElt scale(const Rat& c) const;
    TensorElt& operator+=(const TensorElt& o) { return *this = *this + o; }

    // Left action of a in A: gamma(a) multiplies the leftmost factor.
    TensorElt left_act(const MultiPoly& a) const;
    // Right action of a in A on the last factor.
    TensorElt right_act(const MultiPoly& a) const;

    // Degree in q-units (x_i has degree 2, each strand shifted by 1-l);
    // throws if inhomogeneous; 0 for the zero element.
    int degree() const;

    void add_basis(const std::vector<int>& key, const MultiPoly& c);
    // One pure tensor (leading coefficient, x_1-powers...) per coordinate.
    std::vector<std::vector<MultiPoly>> pure_tensors() const;

private:
    int l_ = 0, n_ = 0;
    // (r_2..r_n) -> coefficient in R^O; for n = 0 the single key {} has its
    // coefficient in A.
    std::map<std::vector<int>, MultiPoly> coords_;
};

struct BimodMap {
    int l = 0, n_in = 0, n_out = 0;
    int degree = 0;  // declared degree, additive under composition
    std::function<TensorElt(const TensorElt&)> action;

    TensorElt operator()(const TensorElt& v) const { return action(v); }
    // this o other (apply other first).
    BimodMap compose(const BimodMap& other) const;
};

BimodMap identity_map(int l, int n);

// Dot on strand pos (1-based): right multiplication by x_1 on that factor.
BimodMap theta_dot(int l, int n, int pos);
// Cup inserted after strand pos (0 <= pos <= n):
// 1 -> sum_r e_r(x_2..x_l) (x) x_1^{l-1-r}.
BimodMap theta_cup(int l, int n, int pos);
// Cap of strands pos, pos+1: f (x) g -> partial_{l-1}...partial_1(gamma(f)g).
BimodMap theta_cap(int l, int n, int pos);
// Crossing of strands pos, pos+1: v_2 threaded through the 2-hatted
// Frobenius steps (for l = 2 the color-2 circle is omitted, giving u_2).
BimodMap theta_cross(int l, int n, int pos);

// The intermediate object X_n = (tau_0, O+-, O+) reached by the bottom half
// of u_n, in canonical coordinates over the basis of R^{O+} over R^{O+-}:
// sum_a coords[a] (x) basis[a] with coords[a] in R^{tau_0},
// tau_0 = O+ (n even) / O- (n odd).
struct XElt {
    int l = 0, n = 0;
    std::map<int, MultiPoly> coords;

    bool is_zero() const { return coords.empty(); }
    bool operator==(const XElt& o) const;
    bool operator!=(const XElt& o) const { return !(*this == o); }
    void add(int a, const MultiPoly& c);
};

// The object Y_n = (tau_0, hat tau_0, Ohn+-, Ohn+, tau_n) reached by the
// bottom half of v_n; coordinates over the basis of R^{Ohn+} over R^{Ohn+-}
// with coefficients in R^{hat tau_0}.
struct YElt {
    int l = 0, n = 0;
    std::map<int, MultiPoly> coords;

    bool is_zero() const { return coords.empty(); }
    bool operator==(const YElt& o) const;
    bool operator!=(const YElt& o) const { return !(*this == o); }
    void add(int a, const MultiPoly& c);
};

// Bottom and top halves of u_n (1 <= n <= l).
XElt u_hat_apply(const TensorElt& v);
TensorElt u_check_apply(int l, int n, const XElt& x);
// Bottom and top halves of the circled builder (2 <= n <= l-1).
YElt v_hat_apply(const TensorElt& v);
TensorElt v_check_apply(int l, int n, const YElt& y);
// The right-hand side of the hat-arc identity: X_n -> Y_n, threading an
// n-colored arc across both strands.
YElt hat_arc_apply(int l, int n, const XElt& x);
// Degrees of the halves in q-units, measured on the unit tensor.
int u_hat_degree(int l, int n);
int v_hat_degree(int l, int n);

// Builders.
BimodMap u_builder(int l, int n);  // u_check o u_hat, 1 <= n <= l
BimodMap v_builder(int l, int n);  // u_n with an n-colored circle, 0 <= n <= l
BimodMap w_builder(int l, int n);  // B^{(x)n} -> B, n-1 rightward caps
BimodMap r_builder(int l, int n);  // dot^{n-i} on strand i
// f_n = r_n o v_n for 0 <= n <= l, the zero map for n > l.
BimodMap idempotent_f(int l, int n);
// Crossings along the lex-smallest reduced word of the longest element of
// the symmetric group S_n.
BimodMap half_twist(int l, int n);

// Cyclotomic checks: left/right actions of x_1...x_l on B differ by a sign.
bool check_action_sign(int l);
// The f-decorated bubble acts on A as multiplication by f, for f = e_1..e_r.
bool check_bubble_multiplication(int l, int rmax);
// cap o dot^m o cup applied to 1, as an element of A (the dotted bubble).
MultiPoly dotted_bubble(int l, int m);

}  // namespace dqs
