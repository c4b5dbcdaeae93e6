#pragma once

// Sparse Laurent polynomials in one variable q with arbitrary-precision integer
// coefficients, plus the standard quantum combinatorics built on them:
// balanced quantum integers [n] = (q^n - q^-n)/(q - q^-1), factorials, and
// binomial coefficients in base q or base q^2.

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>

namespace dqs {

using Int = boost::multiprecision::cpp_int;

class Laurent {
public:
    Laurent() = default;
    explicit Laurent(long c) { if (c != 0) coeffs_[0] = c; }
    explicit Laurent(const Int& c) { if (c != 0) coeffs_[0] = c; }
    // c * q^e
    Laurent(const Int& c, int e) { if (c != 0) coeffs_[e] = c; }

    static Laurent q(int e = 1) { return Laurent(Int(1), e); }

    bool is_zero() const { return coeffs_.empty(); }
    bool operator==(const Laurent& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Laurent& o) const { return !(*this == o); }

    const std::map<int, Int>& coeffs() const { return coeffs_; }
    Int coeff(int e) const;

    // Degree of the highest / lowest power of q present. Zero polynomial: 0.
    int top_degree() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }
    int low_degree() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }

    Laurent operator+(const Laurent& o) const;
    Laurent operator-(const Laurent& o) const;
    Laurent operator-() const;
    Laurent operator*(const Laurent& o) const;
    Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
    Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

    Laurent times_q(int e) const;  // multiply by q^e
    Laurent pow(int n) const;      // n >= 0

    // bar involution q -> q^{-1}
    Laurent bar() const;

    // Exact division; asserts that the remainder is zero.
    Laurent divide_exact(const Laurent& divisor) const;
    // True if divisor divides *this exactly.
    bool divisible_by(const Laurent& divisor) const;

    // Evaluation at q = 1.
    Int eval_at_one() const;

    std::string to_string() const;
    std::string to_latex() const;

private:
    std::map<int, Int> coeffs_;  // exponent -> nonzero coefficient
    void trim(int e) { if (coeffs_[e] == 0) coeffs_.erase(e); }
};

// Balanced quantum integer [n], n may be negative ([-n] = -[n]).
Laurent qint(int n);
// [n]! for n >= 0.
Laurent qfact(int n);
// Quantum binomial [n choose r] in base q (base==1) or base q^2 (base==2).
// n may be negative; r < 0 gives 0.
Laurent qbinom(int n, int r, int base = 1);

}  // namespace dqs
