#pragma once
// Helpers shared by the suites. The oracles here avoid the engine's own
// linear algebra and Groebner code.

#include <random>
#include <string>
#include <vector>

#include "lgmf/graded.hpp"
#include "lgmf/hilbert.hpp"
#include "lgmf/poly.hpp"

namespace lgmf::testing {

using Rng = std::mt19937_64;

inline Rational small_rational(Rng& rng)
{
    std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
    int n = 0;
    while (n == 0) n = num(rng);
    Rational q(n, den(rng));
    q.canonicalize();
    return q;
}

/// All exponent vectors of total weight exactly w (plain recursion).
inline void exps_of_weight(const VarTable& T, int w, size_t i, std::vector<int>& cur, std::vector<Exponents>& out)
{
    if (i == T.size()) {
        if (w == 0) out.push_back(cur);
        return;
    }
    for (int e = 0; e * T.weight(i) <= w; ++e) {
        cur[i] = e;
        exps_of_weight(T, w - e * T.weight(i), i + 1, cur, out);
    }
    cur[i] = 0;
}

inline std::vector<Exponents> exps_of_weight(const VarTable& T, int w)
{
    std::vector<Exponents> out;
    std::vector<int> cur(T.size(), 0);
    if (w >= 0) exps_of_weight(T, w, 0, cur, out);
    return out;
}

/// Random polynomial with up to `terms` terms of weight <= max_deg (or exactly
/// `exact` when nonnegative).
inline Polynomial random_poly(const VarTablePtr& T, int max_deg, int terms, Rng& rng, int exact = -1)
{
    Polynomial p(T);
    std::uniform_int_distribution<int> deg(0, max_deg);
    for (int k = 0; k < terms; ++k) {
        auto cands = exps_of_weight(*T, exact >= 0 ? exact : deg(rng));
        if (cands.empty()) continue;
        std::uniform_int_distribution<size_t> pick(0, cands.size() - 1);
        p.add_term(cands[pick(rng)], small_rational(rng));
    }
    return p;
}

/// Rank by plain Gaussian elimination on dense rows.
inline size_t dense_rank(std::vector<std::vector<Rational>> m)
{
    size_t rank = 0;
    if (m.empty()) return 0;
    size_t cols = m[0].size();
    for (size_t c = 0; c < cols && rank < m.size(); ++c) {
        size_t piv = rank;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rank]);
        for (size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][c] == 0) continue;
            Rational f = m[r][c] / m[rank][c];
            for (size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

/// Coefficient row of p over the given monomial list.
inline std::vector<Rational> coeff_row(const Polynomial& p, const std::vector<Exponents>& monos)
{
    std::vector<Rational> row(monos.size());
    for (size_t i = 0; i < monos.size(); ++i) row[i] = p.coefficient(monos[i]);
    return row;
}

inline Polynomial times_monomial(const Polynomial& g, const Exponents& m)
{
    return g * Polynomial::monomial(g.table(), m);
}

/// Degree-w slice of the ideal generated by homogeneous gens, as the rows m*g.
inline std::vector<std::vector<Rational>> ideal_slice(const std::vector<Polynomial>& gens, int w,
                                                      const std::vector<Exponents>& monos)
{
    std::vector<std::vector<Rational>> rows;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        int d = g.weighted_degree();
        for (const auto& m : exps_of_weight(*g.table(), w - d)) rows.push_back(coeff_row(times_monomial(g, m), monos));
    }
    return rows;
}

/// Membership for homogeneous generators: every homogeneous component of p
/// must lie in the span of the products m*g of its weight.
inline bool brute_member(const std::vector<Polynomial>& gens, const Polynomial& p)
{
    if (p.is_zero()) return true;
    for (int w = 0; w <= p.weighted_degree(); ++w) {
        auto monos = exps_of_weight(*p.table(), w);
        Polynomial part(p.table());
        for (const auto& [e, c] : p.terms())
            if (weighted_degree(e, *p.table()) == w) part.add_term(e, c);
        if (part.is_zero()) continue;
        auto rows = ideal_slice(gens, w, monos);
        size_t r0 = dense_rank(rows);
        rows.push_back(coeff_row(part, monos));
        if (dense_rank(rows) != r0) return false;
    }
    return true;
}

/// Hilbert series of the free graded-commutative algebra on the generators:
/// prod 1/(1 - t^w) over even ones times prod (1 + s t^w) over odd ones.
inline HilbertFunction free_algebra_hilbert(const std::vector<GradedVar>& vars, int bound)
{
    std::vector<long> ev(bound + 1, 0), od(bound + 1, 0);
    ev[0] = 1;
    for (const auto& v : vars) {
        std::vector<long> ne = ev, no = od;
        if (v.parity == Parity::Even) {
            for (int w = v.weight; w <= bound; ++w) {
                ne[w] += ne[w - v.weight];
                no[w] += no[w - v.weight];
            }
        } else {
            for (int w = bound; w >= v.weight; --w) {
                ne[w] = ev[w] + od[w - v.weight];
                no[w] = od[w] + ev[w - v.weight];
            }
        }
        ev = ne;
        od = no;
    }
    HilbertFunction h = HilbertFunction::zeros(0, bound);
    for (int w = 0; w <= bound; ++w) {
        h.ref(w, Parity::Even) = ev[w];
        h.ref(w, Parity::Odd) = od[w];
    }
    h.trusted_upto = bound;
    return h;
}

/// Window [0, hi] of two functions agree.
inline bool same_window(const HilbertFunction& a, const HilbertFunction& b, int hi)
{
    for (int w = 0; w <= hi; ++w)
        for (auto p : {Parity::Even, Parity::Odd})
            if (a.at(w, p) != b.at(w, p)) return false;
    return true;
}

}  // namespace lgmf::testing
