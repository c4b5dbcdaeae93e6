#include "dqs/symfunc.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace dqs {

SymFunc SymFunc::constant(const Rat& c) {
    SymFunc r;
    if (c != 0) r.terms_[{}] = c;
    return r;
}

SymFunc SymFunc::e(int r) {
    SymFunc s;
    if (r == 0) return constant(1);
    if (r > 0) s.terms_[{r}] = 1;
    return s;
}

void SymFunc::add_term(const std::vector<int>& partition, const Rat& c) {
    std::vector<int> key = partition;
    std::sort(key.begin(), key.end(), std::greater<int>());
    assert(key.empty() || key.back() >= 1);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        if (c != 0) terms_[key] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SymFunc SymFunc::operator+(const SymFunc& o) const {
    SymFunc r = *this;
    for (const auto& [p, c] : o.terms_) r.add_term(p, c);
    return r;
}

SymFunc SymFunc::operator-() const {
    SymFunc r;
    for (const auto& [p, c] : terms_) r.terms_[p] = -c;
    return r;
}

SymFunc SymFunc::operator-(const SymFunc& o) const { return *this + (-o); }

SymFunc SymFunc::operator*(const SymFunc& o) const {
    SymFunc r;
    for (const auto& [p1, c1] : terms_)
        for (const auto& [p2, c2] : o.terms_) {
            std::vector<int> p = p1;
            p.insert(p.end(), p2.begin(), p2.end());
            r.add_term(p, c1 * c2);
        }
    return r;
}

SymFunc SymFunc::scale(const Rat& c) const {
    SymFunc r;
    if (c == 0) return r;
    for (const auto& [p, cc] : terms_) r.terms_[p] = cc * c;
    return r;
}

MultiPoly SymFunc::evaluate(int l) const {
    MultiPoly r(l);
    for (const auto& [p, c] : terms_) {
        MultiPoly m = MultiPoly::constant(l, c);
        for (int part : p) m *= elementary_poly(l, part, 1, l);
        r += m;
    }
    return r;
}

std::string SymFunc::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : terms_) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Rat a = c < 0 ? Rat(-c) : c;
        if (a != 1 || p.empty()) os << a.str();
        for (size_t i = 0; i < p.size(); ++i) os << "e" << p[i];
    }
    return os.str();
}

SymFunc complete_h(int r) {
    if (r < 0) return SymFunc();
    static std::vector<SymFunc> cache{SymFunc::constant(1)};
    for (int k = (int)cache.size(); k <= r; ++k) {
        // h_k = sum_{s=1}^{k} (-1)^{s-1} e_s h_{k-s}
        SymFunc h;
        for (int s = 1; s <= k; ++s) {
            SymFunc t = SymFunc::e(s) * cache[k - s];
            h += (s % 2 == 1) ? t : -t;
        }
        cache.push_back(h);
    }
    return cache[r];
}

SymFunc schur_q(int r) {
    SymFunc q;
    for (int s = 0; s <= r; ++s) q += complete_h(s) * SymFunc::e(r - s);
    return q;
}

SymFunc e2_part(int r) {
    if (r < 0) return SymFunc();
    if (r == 0) return SymFunc::constant(1);
    SymFunc s = SymFunc::e(2 * r).scale(r % 2 == 0 ? 2 : -2) + SymFunc::e(r) * SymFunc::e(r);
    for (int k = 1; k <= r - 1; ++k) {
        SymFunc t = (SymFunc::e(k) * SymFunc::e(2 * r - k)).scale(2);
        s += ((r - k) % 2 == 0) ? t : -t;
    }
    return s;
}

}  // namespace dqs
