#include "dqs/multipoly.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dqs {

MultiPoly MultiPoly::constant(int l, const Rat& c) {
    MultiPoly r(l);
    if (c != 0) r.terms_[std::vector<int>(l, 0)] = c;
    return r;
}

MultiPoly MultiPoly::var(int l, int i) {
    assert(1 <= i && i <= l);
    MultiPoly r(l);
    std::vector<int> e(l, 0);
    e[i - 1] = 1;
    r.terms_[e] = 1;
    return r;
}

bool MultiPoly::operator<(const MultiPoly& o) const {
    if (l_ != o.l_) return l_ < o.l_;
    return std::lexicographical_compare(
        terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end());
}

void MultiPoly::add_term(const std::vector<int>& exps, const Rat& c) {
    assert((int)exps.size() == l_);
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        if (c != 0) terms_[exps] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    assert(l_ == o.l_ || is_zero() || o.is_zero());
    MultiPoly r = is_zero() && l_ == 0 ? MultiPoly(o.l_) : *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(l_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    assert(l_ == o.l_);
    MultiPoly r(l_);
    std::vector<int> e(l_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            for (int i = 0; i < l_; ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

MultiPoly MultiPoly::scale(const Rat& c) const {
    MultiPoly r(l_);
    if (c == 0) return r;
    for (const auto& [e, cc] : terms_) r.terms_[e] = cc * c;
    return r;
}

MultiPoly MultiPoly::pow(int n) const {
    assert(n >= 0);
    MultiPoly r = constant(l_, 1);
    for (int i = 0; i < n; ++i) r *= *this;
    return r;
}

int MultiPoly::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, 2 * std::accumulate(e.begin(), e.end(), 0));
    return d;
}

bool MultiPoly::is_homogeneous() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int t = std::accumulate(e.begin(), e.end(), 0);
        if (d == -1) d = t;
        else if (d != t) return false;
    }
    return true;
}

MultiPoly MultiPoly::act(const SignedPerm& w) const {
    assert(w.l() == l_);
    MultiPoly r(l_);
    for (const auto& [e, c] : terms_) {
        std::vector<int> e2(l_, 0);
        Rat sign = 1;
        for (int i = 1; i <= l_; ++i) {
            int v = w.apply(i);
            e2[std::abs(v) - 1] += e[i - 1];
            if (v < 0 && e[i - 1] % 2 == 1) sign = -sign;
        }
        r.add_term(e2, c * sign);
    }
    return r;
}

MultiPoly MultiPoly::gamma() const { return act(SignedPerm::gen(l_, 0)); }

bool MultiPoly::invariant_under(int i) const { return act(SignedPerm::gen(l_, i)) == *this; }

bool MultiPoly::invariant_under(const ParabolicLabel& I) const {
    for (int i : I.gens)
        if (!invariant_under(i)) return false;
    return true;
}

MultiPoly MultiPoly::demazure(int i) const {
    MultiPoly num = *this - act(SignedPerm::gen(l_, i));
    MultiPoly alpha =
        i == -1 ? MultiPoly::var(l_, 2) + MultiPoly::var(l_, 1)
                : MultiPoly::var(l_, i + 1) - MultiPoly::var(l_, i);
    return num.divide_exact(alpha);
}

MultiPoly MultiPoly::demazure_word(const std::vector<int>& word) const {
    MultiPoly r = *this;
    for (auto it = word.rbegin(); it != word.rend(); ++it) r = r.demazure(*it);
    return r;
}

MultiPoly MultiPoly::divide_exact(const MultiPoly& divisor) const {
    if (divisor.is_zero()) throw std::runtime_error("MultiPoly: division by zero");
    MultiPoly rem = *this, quot(l_);
    // lex order on exponent vectors: std::map's largest key is the leading term
    const auto& dl = *divisor.terms_.rbegin();
    while (!rem.is_zero()) {
        const auto& rl = *rem.terms_.rbegin();
        std::vector<int> e(l_);
        bool ok = true;
        for (int i = 0; i < l_; ++i) {
            e[i] = rl.first[i] - dl.first[i];
            if (e[i] < 0) ok = false;
        }
        if (!ok) throw std::runtime_error("MultiPoly: inexact division");
        Rat c = rl.second / dl.second;
        MultiPoly mono(l_);
        mono.terms_[e] = c;
        quot += mono;
        rem -= mono * divisor;
    }
    return quot;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Rat& c = it->second;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Rat a = c < 0 ? Rat(-c) : c;
        bool hasvar = std::any_of(it->first.begin(), it->first.end(), [](int e) { return e > 0; });
        if (a != 1 || !hasvar) os << a.str();
        bool need_star = (a != 1);
        for (int i = 0; i < l_; ++i)
            if (it->first[i] > 0) {
                if (need_star) os << "*";
                need_star = true;
                os << "x" << (i + 1);
                if (it->first[i] > 1) os << "^" << it->first[i];
            }
    }
    return os.str();
}

MultiPoly elementary_poly(int l, int r, int lo, int hi) {
    assert(1 <= lo && hi <= l);
    int n = hi - lo + 1;
    if (r < 0 || r > std::max(n, 0)) return MultiPoly(l);
    // iterative: e_r over growing variable set
    std::vector<MultiPoly> e(r + 1, MultiPoly(l));
    e[0] = MultiPoly::constant(l, 1);
    for (int v = lo; v <= hi; ++v)
        for (int k = r; k >= 1; --k) e[k] += e[k - 1] * MultiPoly::var(l, v);
    return e[r];
}

MultiPoly complete_poly(int l, int r) {
    if (r < 0) return MultiPoly(l);
    // h_r = sum over monomials of degree r: recursion h_r(x_1..x_v) = h_r(x_1..x_{v-1}) + x_v h_{r-1}(x_1..x_v)
    std::vector<std::vector<MultiPoly>> h(l + 1, std::vector<MultiPoly>(r + 1, MultiPoly(l)));
    for (int v = 0; v <= l; ++v) h[v][0] = MultiPoly::constant(l, 1);
    for (int v = 1; v <= l; ++v)
        for (int k = 1; k <= r; ++k)
            h[v][k] = h[v - 1][k] + MultiPoly::var(l, v) * h[v][k - 1];
    return h[l][r];
}

MultiPoly mu(const ParabolicLabel& I) {
    int l = I.l;
    auto W = parabolic_elements(I);
    std::set<SignedPerm> WI(W.begin(), W.end());
    MultiPoly r = MultiPoly::constant(l, 1);
    for (int i = 1; i <= l; ++i)
        for (int j = i + 1; j <= l; ++j) {
            // root x_j - x_i, reflection = transposition (i j)
            {
                auto id = SignedPerm::identity(l).images();
                std::swap(id[i - 1], id[j - 1]);
                if (WI.count(SignedPerm(id))) r *= MultiPoly::var(l, j) - MultiPoly::var(l, i);
            }
            // root x_j + x_i, reflection: i -> -j, j -> -i
            {
                auto id = SignedPerm::identity(l).images();
                id[i - 1] = -j;
                id[j - 1] = -i;
                if (WI.count(SignedPerm(id))) r *= MultiPoly::var(l, j) + MultiPoly::var(l, i);
            }
        }
    return r;
}

MultiPoly eta(const ParabolicLabel& I, const ParabolicLabel& J) {
    return mu(I).divide_exact(mu(J));
}

MultiPoly frob_trace(const ParabolicLabel& I, const ParabolicLabel& J, const MultiPoly& f) {
    return f.demazure_word(canonical_word(I, J));
}

}  // namespace dqs
