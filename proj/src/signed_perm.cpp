#include "dqs/signed_perm.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>

namespace dqs {

ParabolicLabel ParabolicLabel::with(int i) const {
    ParabolicLabel r = *this;
    r.gens.insert(i);
    return r;
}

ParabolicLabel ParabolicLabel::without(int i) const {
    ParabolicLabel r = *this;
    r.gens.erase(i);
    return r;
}

ParabolicLabel ParabolicLabel::unite(const ParabolicLabel& o) const {
    assert(l == o.l);
    ParabolicLabel r = *this;
    r.gens.insert(o.gens.begin(), o.gens.end());
    return r;
}

ParabolicLabel ParabolicLabel::intersect(const ParabolicLabel& o) const {
    assert(l == o.l);
    ParabolicLabel r{l, {}};
    for (int i : gens)
        if (o.gens.count(i)) r.gens.insert(i);
    return r;
}

ParabolicLabel ParabolicLabel::gamma() const {
    ParabolicLabel r{l, {}};
    for (int i : gens) {
        if (i == -1) r.gens.insert(1);
        else if (i == 1) r.gens.insert(-1);
        else r.gens.insert(i);
    }
    return r;
}

bool ParabolicLabel::operator<(const ParabolicLabel& o) const {
    if (l != o.l) return l < o.l;
    return std::lexicographical_compare(gens.begin(), gens.end(), o.gens.begin(), o.gens.end());
}

std::string ParabolicLabel::to_string() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (int i : gens) {
        if (!first) os << ",";
        first = false;
        os << i;
    }
    os << "}";
    return os.str();
}

ParabolicLabel label_O(int l) {
    ParabolicLabel r{l, {}};
    for (int i = 2; i <= l - 1; ++i) r.gens.insert(i);
    return r;
}
ParabolicLabel label_Op(int l) { return label_O(l).with(1); }
ParabolicLabel label_Om(int l) { return label_O(l).with(-1); }
ParabolicLabel label_Opm(int l) { return label_O(l).with(1).with(-1); }
ParabolicLabel label_Ohat(int l, int n) { return label_O(l).without(n); }
ParabolicLabel label_Ohat_p(int l, int n) { return label_Ohat(l, n).with(1); }
ParabolicLabel label_Ohat_m(int l, int n) { return label_Ohat(l, n).with(-1); }
ParabolicLabel label_Ohat_pm(int l, int n) { return label_Ohat(l, n).with(1).with(-1); }
ParabolicLabel label_empty(int l) { return ParabolicLabel{l, {}}; }

SignedPerm::SignedPerm(std::vector<int> images) : img_(std::move(images)) {
    // sanity: a signed permutation of {1,...,l}
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
        int a = std::abs(v);
        assert(a >= 1 && a <= (int)img_.size() && !seen[a - 1]);
        seen[a - 1] = true;
    }
}

SignedPerm SignedPerm::identity(int l) {
    std::vector<int> img(l);
    for (int i = 0; i < l; ++i) img[i] = i + 1;
    return SignedPerm(img);
}

SignedPerm SignedPerm::gen(int l, int i) {
    std::vector<int> img(l);
    for (int k = 0; k < l; ++k) img[k] = k + 1;
    if (i == 0) {
        img[0] = -1;
    } else if (i == -1) {
        assert(l >= 2);
        img[0] = -2;
        img[1] = -1;
    } else {
        assert(i >= 1 && i <= l - 1);
        std::swap(img[i - 1], img[i]);
    }
    return SignedPerm(img);
}

int SignedPerm::apply(int v) const {
    int a = std::abs(v);
    assert(a >= 1 && a <= l());
    int r = img_[a - 1];
    return v > 0 ? r : -r;
}

SignedPerm SignedPerm::operator*(const SignedPerm& o) const {
    assert(l() == o.l());
    std::vector<int> img(l());
    for (int k = 1; k <= l(); ++k) img[k - 1] = apply(o.apply(k));
    return SignedPerm(img);
}

SignedPerm SignedPerm::inverse() const {
    std::vector<int> img(l());
    for (int k = 1; k <= l(); ++k) {
        int v = img_[k - 1];
        img[std::abs(v) - 1] = v > 0 ? k : -k;
    }
    return SignedPerm(img);
}

int SignedPerm::neg_count() const {
    int c = 0;
    for (int v : img_) c += (v < 0);
    return c;
}

long SignedPerm::length() const {
    assert(in_weyl_group());
    long inv = 0, nsp = 0;
    for (int i = 0; i < l(); ++i)
        for (int j = i + 1; j < l(); ++j) {
            if (img_[i] > img_[j]) ++inv;
            if (img_[i] + img_[j] < 0) ++nsp;
        }
    return inv + nsp;
}

bool SignedPerm::left_descent(int i) const {
    return (gen(l(), i) * *this).length() < length();
}

bool SignedPerm::right_descent(int i) const {
    return (*this * gen(l(), i)).length() < length();
}

SignedPerm SignedPerm::gamma() const {
    SignedPerm s0 = gen(l(), 0);
    return s0 * *this * s0;
}

std::string SignedPerm::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < l(); ++i) {
        if (i) os << ",";
        os << img_[i];
    }
    os << "]";
    return os.str();
}

SignedPerm d_elt(int l, int n) {
    assert(0 <= n && n <= l);
    std::vector<int> img(l);
    for (int i = 1; i <= l; ++i) img[i - 1] = i <= n ? -(n + 1 - i) : i;
    return SignedPerm(img);
}

SignedPerm s0n_d_elt(int l, int n) {
    SignedPerm d = d_elt(l, n);
    if (n % 2 == 1) d = SignedPerm::gen(l, 0) * d;
    return d;
}

std::vector<SignedPerm> parabolic_elements(const ParabolicLabel& I) {
    std::vector<SignedPerm> gens;
    for (int i : I.gens) gens.push_back(SignedPerm::gen(I.l, i));
    std::set<SignedPerm> seen{SignedPerm::identity(I.l)};
    std::vector<SignedPerm> frontier{SignedPerm::identity(I.l)};
    while (!frontier.empty()) {
        std::vector<SignedPerm> next;
        for (const auto& w : frontier)
            for (const auto& g : gens) {
                SignedPerm x = g * w;
                if (seen.insert(x).second) next.push_back(x);
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

LongestPoincare longest_and_poincare(const ParabolicLabel& I) {
    LongestPoincare r;
    r.w0 = SignedPerm::identity(I.l);
    r.length = 0;
    for (const auto& w : parabolic_elements(I)) {
        long len = w.length();
        r.poincare_plus += Laurent(Int(1), 2 * (int)len);
        if (len > r.length) {
            r.length = len;
            r.w0 = w;
        }
    }
    r.poincare = r.poincare_plus.times_q(-(int)r.length);
    return r;
}

std::vector<SignedPerm> weyl_elements(int l) {
    ParabolicLabel all{l, {}};
    all.gens.insert(-1);
    for (int i = 1; i <= l - 1; ++i) all.gens.insert(i);
    return parabolic_elements(all);
}

std::vector<SignedPerm> min_double_cosets(const ParabolicLabel& I, const ParabolicLabel& J) {
    std::vector<SignedPerm> reps;
    for (const auto& w : weyl_elements(I.l)) {
        bool minimal = true;
        for (int i : I.gens)
            if (w.left_descent(i)) { minimal = false; break; }
        if (minimal)
            for (int j : J.gens)
                if (w.right_descent(j)) { minimal = false; break; }
        if (minimal) reps.push_back(w);
    }
    std::sort(reps.begin(), reps.end(), [](const SignedPerm& a, const SignedPerm& b) {
        long la = a.length(), lb = b.length();
        if (la != lb) return la < lb;
        return a < b;
    });
    return reps;
}

std::vector<SignedPerm> double_coset_elements(const ParabolicLabel& I, const SignedPerm& d,
                                              const ParabolicLabel& J) {
    std::set<SignedPerm> out;
    for (const auto& u : parabolic_elements(I))
        for (const auto& v : parabolic_elements(J)) out.insert(u * d * v);
    return {out.begin(), out.end()};
}

CosetLengthData coset_length_data(const ParabolicLabel& I, const SignedPerm& d,
                                  const ParabolicLabel& J) {
    CosetLengthData r;
    r.left_redundancy = ParabolicLabel{I.l, {}};
    SignedPerm dinv = d.inverse();
    for (int i : I.gens) {
        // s_i d = d s_j  <=>  d^{-1} s_i d = s_j for some j in J
        SignedPerm c = dinv * SignedPerm::gen(I.l, i) * d;
        for (int j : J.gens)
            if (c == SignedPerm::gen(I.l, j)) {
                r.left_redundancy.gens.insert(i);
                break;
            }
    }
    r.ell = longest_and_poincare(I).length - longest_and_poincare(r.left_redundancy).length +
            d.length() + longest_and_poincare(J).length;
    return r;
}

std::vector<int> canonical_word(const SignedPerm& w) {
    std::vector<int> order;
    order.push_back(-1);
    for (int i = 1; i <= w.l() - 1; ++i) order.push_back(i);
    std::vector<int> word;
    SignedPerm cur = w;
    while (cur.length() > 0) {
        bool found = false;
        for (int i : order)
            if (cur.left_descent(i)) {
                word.push_back(i);
                cur = SignedPerm::gen(w.l(), i) * cur;
                found = true;
                break;
            }
        if (!found) throw std::runtime_error("canonical_word: no descent found");
    }
    return word;
}

std::vector<int> canonical_word(const ParabolicLabel& I, const ParabolicLabel& J) {
    SignedPerm wI = longest_and_poincare(I).w0;
    SignedPerm wJ = longest_and_poincare(J).w0;
    return canonical_word(wI * wJ.inverse());
}

}  // namespace dqs
