#pragma once

// The ring of symmetric functions over Q, with elements written in the basis
// of monomials e_lambda in the elementary symmetric functions. Provides the
// complete symmetric functions h_r (via e(-u)h(u) = 1), the q-functions
// q_r = sum_s h_s e_{r-s}, the doubled elementary functions e_r^[2], and the
// evaluation homomorphism ev_l to polynomials in l variables.

#include "dqs/multipoly.hpp"

#include <map>
#include <vector>

namespace dqs {

class SymFunc {
public:
    SymFunc() = default;
    static SymFunc constant(const Rat& c);
    static SymFunc e(int r);  // e_r; e_0 = 1, e_r = 0 for r < 0

    bool is_zero() const { return terms_.empty(); }
    bool operator==(const SymFunc& o) const { return terms_ == o.terms_; }
    bool operator!=(const SymFunc& o) const { return !(*this == o); }

    // keys: partitions as weakly decreasing vectors of parts >= 1 (empty = 1)
    const std::map<std::vector<int>, Rat>& terms() const { return terms_; }
    void add_term(const std::vector<int>& partition, const Rat& c);

    SymFunc operator+(const SymFunc& o) const;
    SymFunc operator-(const SymFunc& o) const;
    SymFunc operator-() const;
    SymFunc operator*(const SymFunc& o) const;
    SymFunc scale(const Rat& c) const;
    SymFunc& operator+=(const SymFunc& o) { return *this = *this + o; }
    SymFunc& operator-=(const SymFunc& o) { return *this = *this - o; }
    SymFunc& operator*=(const SymFunc& o) { return *this = *this * o; }

    // ev_l: e_r -> e_r(x_1,...,x_l)
    MultiPoly evaluate(int l) const;

    std::string to_string() const;

private:
    std::map<std::vector<int>, Rat> terms_;
};

// h_r, determined by sum_{s} (-1)^s e_s h_{r-s} = delta_{r,0}.
SymFunc complete_h(int r);
// q_r = sum_{s=0}^{r} h_s e_{r-s}.
SymFunc schur_q(int r);
// e_r^[2] = 2(-1)^r e_{2r} + e_r^2 + 2 sum_{s=1}^{r-1} (-1)^{r-s} e_s e_{2r-s};
// ev_l(e_r^[2]) = e_r(x_1^2,...,x_l^2).
SymFunc e2_part(int r);

}  // namespace dqs
