#include "dqs/vmodule.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace dqs {

VlElt VlElt::eta(int l) { return standard(l, 0); }

VlElt VlElt::standard(int l, int n) {
    VlElt v(l);
    if (0 <= n && n <= l) v.coords[n] = Laurent(1);
    return v;
}

bool VlElt::is_zero() const {
    for (const auto& c : coords)
        if (!c.is_zero()) return false;
    return true;
}

VlElt VlElt::operator+(const VlElt& o) const {
    VlElt out(l);
    for (int n = 0; n <= l; ++n) out.coords[n] = coords[n] + o.coords[n];
    return out;
}

VlElt VlElt::operator-(const VlElt& o) const {
    VlElt out(l);
    for (int n = 0; n <= l; ++n) out.coords[n] = coords[n] - o.coords[n];
    return out;
}

VlElt VlElt::scale(const Laurent& c) const {
    VlElt out(l);
    for (int n = 0; n <= l; ++n) out.coords[n] = coords[n] * c;
    return out;
}

VlElt f_act(const VlElt& v) {
    VlElt out(v.l);
    for (int n = 0; n < v.l; ++n) out.coords[n + 1] += v.coords[n] * qint(n + 1);
    return out;
}

VlElt rho_f_act(const VlElt& v) {
    VlElt out(v.l);
    for (int n = 1; n <= v.l; ++n)
        out.coords[n - 1] += v.coords[n] * Laurent::q(2 * n - v.l - 1) * qint(v.l + 1 - n);
    return out;
}

VlElt b_act(const VlElt& v) { return f_act(v) + rho_f_act(v); }

Laurent icanonical_coeff(int l, int n, int i) {
    int t = parity_t(l);
    if (n > l || i < 0 || 2 * i > n) return Laurent();
    if ((n - t) % 2 == 0)
        return Laurent::q(-i * (l + 2 * i - n - 1)) * qbinom((l + 2 * i - n) / 2, i, 2);
    return Laurent::q(-i * (l + 2 * i - n)) * qbinom((l + 2 * i - n - 1) / 2, i, 2);
}

namespace {

// Recursion b^{(n+1)} = (b.b^{(n)} - [n] b^{(n-1)} [iff n = t]) / [n+1],
// memoized per l; entries beyond n = l are computed too (they must vanish).
const VlElt& icanonical_recursive(int l, int n) {
    static std::recursive_mutex lock;  // the memo recursion re-enters
    static std::map<std::pair<int, int>, VlElt> cache;
    std::lock_guard<std::recursive_mutex> guard(lock);
    auto key = std::make_pair(l, n);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    VlElt v(l);
    if (n == 0) {
        v = VlElt::eta(l);
    } else {
        VlElt prev = icanonical_recursive(l, n - 1);
        VlElt num = b_act(prev);
        if ((n - 1) % 2 == parity_t(l) && n >= 2)
            num = num - icanonical_recursive(l, n - 2).scale(qint(n - 1));
        for (int m = 0; m <= l; ++m)
            v.coords[m] = num.coords[m].is_zero() ? Laurent()
                                                  : num.coords[m].divide_exact(qint(n));
    }
    return cache.emplace(key, std::move(v)).first->second;
}

}  // namespace

VlElt icanonical(int l, int n) {
    VlElt v(l);
    for (int i = 0; 2 * i <= n; ++i) {
        if (n - 2 * i > l) continue;
        v.coords[n - 2 * i] = icanonical_coeff(l, n, i);
    }
    if (n > l) v = VlElt(l);
    if (v != icanonical_recursive(l, n))
        throw std::runtime_error("icanonical: closed formula disagrees with recursion");
    return v;
}

Laurent bilinear_form_l(const VlElt& u, const VlElt& v) {
    if (u.l != v.l) throw std::runtime_error("bilinear_form_l: level mismatch");
    Laurent out;
    for (int n = 0; n <= u.l; ++n)
        out += u.coords[n] * v.coords[n] * Laurent::q(-n * (u.l - n)) * qbinom(u.l, n);
    return out;
}

VlElt ibar(const VlElt& v) {
    // Expand over the icanonical basis (unitriangular), bar the coefficients,
    // re-expand.
    std::vector<Laurent> c(v.l + 1);
    VlElt rem = v;
    for (int n = v.l; n >= 0; --n) {
        c[n] = rem.coords[n];  // b^{(n)} eta = f^{(n)} eta + lower terms
        rem = rem - icanonical(v.l, n).scale(c[n]);
    }
    if (!rem.is_zero()) throw std::runtime_error("ibar: expansion failed");
    VlElt out(v.l);
    for (int n = 0; n <= v.l; ++n) out = out + icanonical(v.l, n).scale(c[n].bar());
    return out;
}

namespace {

// Monic polynomial Q_n(b) = [n]! b^{(n)} as coefficients on powers of b.
std::vector<Laurent> monic_idivided(int n, int t) {
    std::vector<Laurent> q{Laurent(1)};
    auto times_b = [](std::vector<Laurent> p) {
        p.insert(p.begin(), Laurent());
        return p;
    };
    auto times_b2_minus = [&](const std::vector<Laurent>& p, const Laurent& c2) {
        std::vector<Laurent> out(p.size() + 2);
        for (size_t j = 0; j < p.size(); ++j) {
            out[j + 2] += p[j];
            out[j] -= p[j] * c2;
        }
        return out;
    };
    if (n % 2 == 1) q = times_b(q);
    for (int k = n % 2 == 0 ? 0 : 1; k <= n - 1; ++k) {
        if (k % 2 != t % 2) continue;
        q = times_b2_minus(q, qint(k) * qint(k));
    }
    return q;  // degree n, leading coefficient 1
}

}  // namespace

std::vector<Laurent> monomial_expand_t(int n, int t) {
    // b^n as a polynomial in b, reduced against the monic Q_m top-down.
    std::vector<Laurent> rem(n + 1);
    rem[n] = Laurent(1);
    std::vector<Laurent> out(n + 1);
    for (int m = n; m >= 0; --m) {
        Laurent c = rem[m];
        if (c.is_zero()) continue;
        auto qm = monic_idivided(m, t);
        for (int j = 0; j <= m; ++j) rem[j] -= c * qm[j];
        out[m] = c * qfact(m);
    }
    for (const auto& c : rem)
        if (!c.is_zero()) throw std::runtime_error("monomial_expand_t: inexact inversion");
    return out;
}

std::vector<Laurent> ohio_expand_t(int n, int t) {
    std::vector<Laurent> out(n + 1);
    for (int i = 0; 2 * i <= n; ++i) {
        int c = n - 2 * i;
        // Sum over partitions with i parts (zeros allowed), each part <= c and
        // each part (including zeros) != t mod 2, of prod [part+1]^2.
        Laurent sum;
        std::vector<int> parts(i, 0);
        auto rec = [&](auto&& self, int pos, int maxpart) -> void {
            if (pos == i) {
                Laurent prod(1);
                for (int p : parts) prod *= qint(p + 1) * qint(p + 1);
                sum += prod;
                return;
            }
            for (int p = maxpart; p >= 0; --p) {
                if (p % 2 == t % 2) continue;
                parts[pos] = p;
                self(self, pos + 1, p);
            }
        };
        rec(rec, 0, c);
        out[c] = qfact(c) * sum;
    }
    return out;
}

std::vector<Laurent> monomial_expand(int n, int l) {
    auto full = monomial_expand_t(n, parity_t(l));
    full.resize(std::min(n, l) + 1);
    return full;
}

}  // namespace dqs
