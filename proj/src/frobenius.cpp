#include "dqs/frobenius.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace dqs {

namespace {

using Vec = std::map<std::vector<int>, Rat>;

// Exact row-echelon container over Q, keyed by monomial exponent vectors.
class RowReducer {
public:
    // Reduce v against the stored rows; if a nonzero remainder survives,
    // normalize it, store it, and return true.
    bool add(Vec v) {
        reduce(v);
        if (v.empty()) return false;
        auto pivot = v.rbegin()->first;
        Rat lead = v.rbegin()->second;
        for (auto& [key, c] : v) c /= lead;
        rows_.emplace(pivot, std::move(v));
        return true;
    }

    bool contains(Vec v) const {
        reduce(v);
        return v.empty();
    }

private:
    void reduce(Vec& v) const {
        while (!v.empty()) {
            auto it = rows_.find(v.rbegin()->first);
            if (it == rows_.end()) {
                // The pivot is not eliminable; strip it off and keep reducing
                // the tail so later pivots still cancel.
                Vec head;
                head.insert(*v.rbegin());
                v.erase(std::prev(v.end()));
                reduce(v);
                v.insert(head.begin(), head.end());
                return;
            }
            Rat c = v.rbegin()->second;
            for (const auto& [key, rc] : it->second) {
                Rat nc = v[key] - c * rc;
                if (nc == 0)
                    v.erase(key);
                else
                    v[key] = nc;
            }
        }
    }

    std::map<std::vector<int>, Vec> rows_;
};

std::vector<std::vector<int>> monomials_of_degree(int l, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(l, 0);
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == l - 1) {
            cur[pos] = rem;
            out.push_back(cur);
            return;
        }
        // Emit x_1-heavy monomials first so greedy basis selection prefers
        // powers of early variables (matching the explicit bases in use).
        for (int e = rem; e >= 0; --e) {
            cur[pos] = e;
            self(self, pos + 1, rem - e);
        }
    };
    if (l == 0) {
        if (k == 0) out.push_back({});
        return out;
    }
    rec(rec, 0, k);
    return out;
}

const std::vector<SignedPerm>& cached_elements(const ParabolicLabel& I) {
    static std::mutex lock;
    static std::map<ParabolicLabel, std::vector<SignedPerm>> cache;
    std::lock_guard<std::mutex> guard(lock);
    auto it = cache.find(I);
    if (it == cache.end()) it = cache.emplace(I, parabolic_elements(I)).first;
    return it->second;
}

// Dense exact solver: A x = b for several right-hand sides at once.
// Throws on inconsistency; free variables are set to zero.
std::vector<std::vector<Rat>> solve_exact(std::vector<std::vector<Rat>> A,
                                          std::vector<std::vector<Rat>> rhs) {
    size_t nrows = A.size();
    size_t ncols = nrows ? A[0].size() : 0;
    size_t nrhs = rhs.empty() ? 0 : rhs[0].size();
    std::vector<int> pivot_col(nrows, -1);
    size_t row = 0;
    for (size_t col = 0; col < ncols && row < nrows; ++col) {
        size_t sel = row;
        while (sel < nrows && A[sel][col] == 0) ++sel;
        if (sel == nrows) continue;
        std::swap(A[sel], A[row]);
        std::swap(rhs[sel], rhs[row]);
        Rat lead = A[row][col];
        for (size_t j = col; j < ncols; ++j) A[row][j] /= lead;
        for (size_t j = 0; j < nrhs; ++j) rhs[row][j] /= lead;
        for (size_t r = 0; r < nrows; ++r) {
            if (r == row || A[r][col] == 0) continue;
            Rat f = A[r][col];
            for (size_t j = col; j < ncols; ++j) A[r][j] -= f * A[row][j];
            for (size_t j = 0; j < nrhs; ++j) rhs[r][j] -= f * rhs[row][j];
        }
        pivot_col[row] = (int)col;
        ++row;
    }
    for (size_t r = row; r < nrows; ++r)
        for (size_t j = 0; j < nrhs; ++j)
            if (rhs[r][j] != 0) throw std::runtime_error("solve_exact: inconsistent system");
    std::vector<std::vector<Rat>> x(ncols, std::vector<Rat>(nrhs, Rat(0)));
    for (size_t r = 0; r < row; ++r)
        for (size_t j = 0; j < nrhs; ++j) x[pivot_col[r]][j] = rhs[r][j];
    return x;
}

FrobeniusStep build_step(const ParabolicLabel& I, const ParabolicLabel& J) {
    for (int j : J.gens)
        if (!I.contains(j)) throw std::runtime_error("frobenius_step: J not a subset of I");
    FrobeniusStep step;
    step.lower = I;
    step.upper = J;
    step.trace_word = canonical_word(I, J);

    // Target degrees: 2 l(d) over minimal right coset representatives of W_J \ W_I.
    std::map<int, int> mult;  // total exponent degree -> multiplicity
    int max_deg = 0;
    for (const auto& w : cached_elements(I)) {
        bool minimal = true;
        for (int j : J.gens)
            if (w.left_descent(j)) {
                minimal = false;
                break;
            }
        if (!minimal) continue;
        int k = (int)w.length();
        ++mult[k];
        max_deg = std::max(max_deg, k);
    }

    for (int k = 0; k <= max_deg; ++k) {
        int want = mult.count(k) ? mult[k] : 0;
        RowReducer span;
        // Seed with the degree-k part of the ideal R^I_+ R^J.
        for (int j = 1; j <= k; ++j) {
            auto lower_part = invariant_basis(I, j);
            auto upper_part = invariant_basis(J, k - j);
            for (const auto& p : lower_part)
                for (const auto& m : upper_part) span.add((p * m).terms());
        }
        int got = 0;
        for (const auto& cand : invariant_basis(J, k)) {
            if (got == want) break;
            if (span.add(cand.terms())) {
                step.basis.push_back(cand);
                ++got;
            }
        }
        if (got != want)
            throw std::runtime_error("frobenius_step: degree " + std::to_string(k) +
                                     " rank mismatch");
    }

    // Sanity: total and graded rank must equal pi_I^+ / pi_J^+.
    auto pI = longest_and_poincare(I);
    auto pJ = longest_and_poincare(J);
    Laurent graded_rank;
    for (const auto& b : step.basis) graded_rank += Laurent::q(b.degree());
    if (graded_rank != pI.poincare_plus.divide_exact(pJ.poincare_plus))
        throw std::runtime_error("frobenius_step: graded rank mismatch");

    // Dual basis: for each codegree solve tr(basis[c] * y) = delta exactly.
    int L = (int)(pI.length - pJ.length);  // exponent degree of the trace drop
    step.dual.resize(step.basis.size());
    std::map<int, std::vector<size_t>> by_codeg;  // dual exponent degree -> basis indices
    for (size_t a = 0; a < step.basis.size(); ++a)
        by_codeg[L - step.basis[a].degree() / 2].push_back(a);
    for (const auto& [kd, indices] : by_codeg) {
        auto cands = invariant_basis(J, kd);
        // Rows: one per (basis index c, monomial of tr(basis[c] * cand)).
        std::vector<std::vector<Rat>> A;
        std::vector<std::vector<Rat>> rhs;
        for (size_t c = 0; c < step.basis.size(); ++c) {
            std::map<std::vector<int>, size_t> row_of;
            std::vector<MultiPoly> traces;
            traces.reserve(cands.size());
            for (const auto& v : cands) traces.push_back(step.trace(step.basis[c] * v));
            size_t base = A.size();
            for (const auto& t : traces)
                for (const auto& [key, coef] : t.terms())
                    if (!row_of.count(key)) {
                        row_of[key] = A.size();
                        A.emplace_back(cands.size(), Rat(0));
                        rhs.emplace_back(indices.size(), Rat(0));
                    }
            for (size_t j = 0; j < traces.size(); ++j)
                for (const auto& [key, coef] : traces[j].terms()) A[row_of[key]][j] = coef;
            // delta_{c,a}: the constant monomial row gets 1 for the matching a.
            std::vector<int> const_key(I.l, 0);
            for (size_t ai = 0; ai < indices.size(); ++ai)
                if (indices[ai] == c) {
                    if (!row_of.count(const_key)) {
                        row_of[const_key] = A.size();
                        A.emplace_back(cands.size(), Rat(0));
                        rhs.emplace_back(indices.size(), Rat(0));
                    }
                    rhs[row_of[const_key]][ai] = 1;
                }
            (void)base;
        }
        auto x = solve_exact(std::move(A), std::move(rhs));
        for (size_t ai = 0; ai < indices.size(); ++ai) {
            MultiPoly y(I.l);
            for (size_t j = 0; j < cands.size(); ++j)
                if (x[j][ai] != 0) y += cands[j].scale(x[j][ai]);
            step.dual[indices[ai]] = y;
        }
    }
    return step;
}

}  // namespace

MultiPoly FrobeniusStep::trace(const MultiPoly& f) const {
    if (!f.invariant_under(upper)) throw std::runtime_error("trace: input not W_J-invariant");
    MultiPoly out = f.demazure_word(trace_word);
    if (!out.invariant_under(lower)) throw std::runtime_error("trace: output not W_I-invariant");
    return out;
}

std::vector<std::pair<MultiPoly, MultiPoly>> FrobeniusStep::coproduct() const {
    std::vector<std::pair<MultiPoly, MultiPoly>> out;
    out.reserve(basis.size());
    for (size_t i = 0; i < basis.size(); ++i) out.emplace_back(basis[i], dual[i]);
    return out;
}

std::vector<MultiPoly> invariant_basis(const ParabolicLabel& I, int k) {
    const auto& group = cached_elements(I);
    RowReducer span;
    std::vector<MultiPoly> out;
    for (const auto& e : monomials_of_degree(I.l, k)) {
        MultiPoly m(I.l);
        m.add_term(e, 1);
        MultiPoly sym(I.l);
        for (const auto& w : group) sym += m.act(w);
        if (sym.is_zero()) continue;
        // Normalize to lex-leading coefficient 1 (so orbit sums of monomials
        // fixed by W_I come out as the bare monomial).
        sym = sym.scale(Rat(1) / sym.terms().rbegin()->second);
        if (span.add(sym.terms())) out.push_back(sym);
    }
    return out;
}

const FrobeniusStep& frobenius_step(const ParabolicLabel& I, const ParabolicLabel& J) {
    static std::mutex lock;
    static std::map<std::pair<ParabolicLabel, ParabolicLabel>, FrobeniusStep> cache;
    std::lock_guard<std::mutex> guard(lock);
    auto key = std::make_pair(I, J);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, build_step(I, J)).first;
    return it->second;
}

std::vector<MultiPoly> expand_over_base(const FrobeniusStep& step, const MultiPoly& f) {
    std::vector<MultiPoly> coeffs;
    coeffs.reserve(step.basis.size());
    for (const auto& d : step.dual) coeffs.push_back(step.trace(f * d));
    return coeffs;
}

MultiPoly eta_alternating(const ParabolicLabel& I, const ParabolicLabel& J) {
    std::vector<int> extra;
    for (int i : I.gens)
        if (!J.contains(i)) extra.push_back(i);
    MultiPoly num = MultiPoly::constant(I.l, 1);
    MultiPoly den = MultiPoly::constant(I.l, 1);
    int n = (int)extra.size();
    for (int mask = 0; mask < (1 << n); ++mask) {
        ParabolicLabel K = J;
        int count = 0;
        for (int b = 0; b < n; ++b)
            if (mask & (1 << b)) {
                K = K.with(extra[b]);
                ++count;
            }
        if ((n - count) % 2 == 0)
            num *= mu(K);
        else
            den *= mu(K);
    }
    return num.divide_exact(den);
}

}  // namespace dqs
