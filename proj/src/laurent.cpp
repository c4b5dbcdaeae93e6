#include "dqs/laurent.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace dqs {

Int Laurent::coeff(int e) const {
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? Int(0) : it->second;
}

Laurent Laurent::operator+(const Laurent& o) const {
    Laurent r = *this;
    for (const auto& [e, c] : o.coeffs_) {
        r.coeffs_[e] += c;
        r.trim(e);
    }
    return r;
}

Laurent Laurent::operator-() const {
    Laurent r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
    return r;
}

Laurent Laurent::operator-(const Laurent& o) const { return *this + (-o); }

Laurent Laurent::operator*(const Laurent& o) const {
    Laurent r;
    for (const auto& [e1, c1] : coeffs_)
        for (const auto& [e2, c2] : o.coeffs_) {
            r.coeffs_[e1 + e2] += c1 * c2;
            r.trim(e1 + e2);
        }
    return r;
}

Laurent Laurent::times_q(int e) const {
    Laurent r;
    for (const auto& [e1, c] : coeffs_) r.coeffs_[e1 + e] = c;
    return r;
}

Laurent Laurent::pow(int n) const {
    assert(n >= 0);
    Laurent r(1);
    Laurent base = *this;
    while (n > 0) {
        if (n & 1) r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

Laurent Laurent::bar() const {
    Laurent r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[-e] = c;
    return r;
}

Laurent Laurent::divide_exact(const Laurent& divisor) const {
    if (divisor.is_zero()) throw std::runtime_error("Laurent: division by zero");
    if (is_zero()) return Laurent();
    // Shift so both operands are ordinary polynomials with nonzero constant
    // term, then run ordinary polynomial division (this terminates).
    const int sa = low_degree(), sb = divisor.low_degree();
    Laurent rem = times_q(-sa), div = divisor.times_q(-sb), quot;
    const int de = div.top_degree();
    const Int& dc = div.coeffs_.rbegin()->second;
    while (!rem.is_zero() && rem.top_degree() >= de) {
        int e = rem.top_degree();
        Int c = rem.coeffs_.rbegin()->second;
        if (c % dc != 0) throw std::runtime_error("Laurent: inexact division");
        Int qc = c / dc;
        quot.coeffs_[e - de] += qc;
        quot.trim(e - de);
        rem -= div.times_q(e - de) * Laurent(qc);
    }
    if (!rem.is_zero()) throw std::runtime_error("Laurent: inexact division");
    return quot.times_q(sa - sb);
}

bool Laurent::divisible_by(const Laurent& divisor) const {
    try {
        divide_exact(divisor);
        return true;
    } catch (const std::runtime_error&) {
        return false;
    }
}

Int Laurent::eval_at_one() const {
    Int s = 0;
    for (const auto& [e, c] : coeffs_) s += c;
    return s;
}

std::string Laurent::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        Int c = it->second;
        int e = it->first;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Int a = c < 0 ? Int(-c) : c;
        if (a != 1 || e == 0) os << a.str();
        if (e != 0) {
            if (a != 1) os << "*";
            os << "q";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

std::string Laurent::to_latex() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        Int c = it->second;
        int e = it->first;
        if (!first) os << (c > 0 ? "+" : "-");
        else if (c < 0) os << "-";
        first = false;
        Int a = c < 0 ? Int(-c) : c;
        if (a != 1 || e == 0) os << a.str();
        if (e != 0) {
            os << "q";
            if (e != 1) os << "^{" << e << "}";
        }
    }
    return os.str();
}

Laurent qint(int n) {
    // [n] = q^{n-1} + q^{n-3} + ... + q^{1-n}; [-n] = -[n].
    if (n < 0) return -qint(-n);
    Laurent r;
    for (int e = n - 1; e >= 1 - n; e -= 2) r += Laurent::q(e);
    return r;
}

Laurent qfact(int n) {
    assert(n >= 0);
    Laurent r(1);
    for (int i = 2; i <= n; ++i) r *= qint(i);
    return r;
}

namespace {
Laurent in_base(const Laurent& p, int base) {
    if (base == 1) return p;
    Laurent r;
    for (const auto& [e, c] : p.coeffs()) r += Laurent(c, e * base);
    return r;
}
}  // namespace

Laurent qbinom(int n, int r, int base) {
    if (r < 0) return Laurent();
    Laurent num(1), den(1);
    for (int i = 1; i <= r; ++i) {
        num *= in_base(qint(n - i + 1), base);
        den *= in_base(qint(i), base);
    }
    return num.divide_exact(den);
}

}  // namespace dqs
