#include "lgmf/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace lgmf {

namespace {

struct Lead {
    Exponents mono;
    Rational coeff;
};

Polynomial make_monic(Polynomial p, const MonomialOrder& order)
{
    if (p.is_zero()) return p;
    Rational c = p.leading_term(order).second;
    p *= Rational(1) / c;
    return p;
}

Exponents lcm(const Exponents& a, const Exponents& b)
{
    Exponents e(a.size());
    for (size_t i = 0; i < a.size(); ++i) e[i] = std::max(a[i], b[i]);
    return e;
}

bool coprime(const Exponents& a, const Exponents& b)
{
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] && b[i]) return false;
    return true;
}

Polynomial shift(const Polynomial& p, const Exponents& by, const Rational& c)
{
    Polynomial out(p.table());
    Exponents e;
    for (const auto& [m, v] : p.terms()) {
        e = m;
        for (size_t i = 0; i < e.size(); ++i) e[i] += by[i];
        out.add_term(e, v * c);
    }
    return out;
}

Polynomial reduce(Polynomial p, const std::vector<Polynomial>& basis, const std::vector<Lead>& leads,
                  const MonomialOrder& order)
{
    Polynomial rest(p.table());
    while (!p.is_zero()) {
        auto [m, c] = p.leading_term(order);
        bool hit = false;
        for (size_t k = 0; k < basis.size(); ++k) {
            if (!divides(leads[k].mono, m)) continue;
            Exponents q = m;
            for (size_t i = 0; i < q.size(); ++i) q[i] -= leads[k].mono[i];
            p -= shift(basis[k], q, c / leads[k].coeff);
            hit = true;
            break;
        }
        if (!hit) {
            rest.add_term(m, c);
            p.add_term(m, -c);
        }
    }
    return rest;
}

std::vector<Lead> leads_of(const std::vector<Polynomial>& basis, const MonomialOrder& order)
{
    std::vector<Lead> out;
    out.reserve(basis.size());
    for (const auto& g : basis) {
        auto [m, c] = g.leading_term(order);
        out.push_back({m, c});
    }
    return out;
}

std::vector<Polynomial> interreduce(std::vector<Polynomial> basis, const MonomialOrder& order)
{
    auto leads = leads_of(basis, order);
    std::vector<Polynomial> kept;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j || !divides(leads[j].mono, leads[i].mono)) continue;
            // Equal leading monomials: keep the earlier one.
            redundant = leads[j].mono != leads[i].mono || j < i;
        }
        if (!redundant) kept.push_back(basis[i]);
    }
    std::vector<Polynomial> out;
    for (size_t i = 0; i < kept.size(); ++i) {
        std::vector<Polynomial> others;
        for (size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        auto ol = leads_of(others, order);
        auto [m, c] = kept[i].leading_term(order);
        Polynomial tail = kept[i];
        tail.add_term(m, -c);
        Polynomial r = reduce(tail, others, ol, order);
        r.add_term(m, c);
        out.push_back(make_monic(r, order));
    }
    const auto& table = out.empty() ? VarTablePtr() : out.front().table();
    std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.compare(a.leading_term(order).first, b.leading_term(order).first, *table) < 0;
    });
    return out;
}

}  // namespace

bool divides(const Exponents& a, const Exponents& b)
{
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

bool GroebnerBasis::is_unit_ideal() const
{
    return generators.size() == 1 && generators.front().is_constant() && !generators.front().is_zero();
}

GroebnerBasis groebner_basis(const std::vector<Polynomial>& gens, const MonomialOrder& order, VarTablePtr table)
{
    GroebnerBasis gb;
    gb.order = order;
    gb.table = table;
    std::vector<Polynomial> basis;
    for (const auto& g : gens) {
        if (!gb.table) gb.table = g.table();
        if (g.is_zero()) continue;
        if (!same_table(gb.table, g.table())) throw TableMismatch("groebner generators on different tables");
        basis.push_back(make_monic(g, order));
    }
    if (basis.empty()) return gb;
    const VarTable& t = *gb.table;

    auto leads = leads_of(basis, order);
    // Pairs keyed by (lcm weight, i, j): normal selection with index tiebreak.
    std::set<std::tuple<int, size_t, size_t>> pairs;
    auto add_pairs = [&](size_t j) {
        for (size_t i = 0; i < j; ++i) {
            if (coprime(leads[i].mono, leads[j].mono)) continue;
            pairs.emplace(weighted_degree(lcm(leads[i].mono, leads[j].mono), t), i, j);
        }
    };
    for (size_t j = 0; j < basis.size(); ++j) add_pairs(j);

    while (!pairs.empty()) {
        auto [w, i, j] = *pairs.begin();
        pairs.erase(pairs.begin());
        (void)w;
        Exponents l = lcm(leads[i].mono, leads[j].mono);
        Exponents qi = l, qj = l;
        for (size_t k = 0; k < l.size(); ++k) {
            qi[k] -= leads[i].mono[k];
            qj[k] -= leads[j].mono[k];
        }
        Polynomial s = shift(basis[i], qi, Rational(1) / leads[i].coeff) -
                       shift(basis[j], qj, Rational(1) / leads[j].coeff);
        Polynomial r = reduce(s, basis, leads, order);
        if (r.is_zero()) continue;
        r = make_monic(r, order);
        if (r.is_constant()) {
            gb.generators = {Polynomial(gb.table, 1)};
            return gb;
        }
        basis.push_back(r);
        auto [m, c] = r.leading_term(order);
        leads.push_back({m, c});
        add_pairs(basis.size() - 1);
    }
    for (const auto& g : basis)
        if (g.is_constant()) {
            gb.generators = {Polynomial(gb.table, 1)};
            return gb;
        }
    gb.generators = interreduce(std::move(basis), order);
    return gb;
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb)
{
    if (gb.generators.empty() || p.is_zero()) return p;
    if (p.table() && !same_table(p.table(), gb.table)) throw TableMismatch("normal form across tables");
    return reduce(p, gb.generators, leads_of(gb.generators, gb.order), gb.order);
}

bool ideal_contains(const GroebnerBasis& gb, const Polynomial& p) { return normal_form(p, gb).is_zero(); }

std::vector<Exponents> monomials_of_weight(const VarTable& table, int w)
{
    std::vector<Exponents> out;
    size_t n = table.size();
    if (w < 0) return out;
    Exponents e(n, 0);
    auto rec = [&](auto& self, size_t i, int left) -> void {
        if (i == n) {
            if (left == 0) out.push_back(e);
            return;
        }
        int wt = table.weight(i);
        for (int k = 0; k * wt <= left; ++k) {
            e[i] = k;
            self(self, i + 1, left - k * wt);
        }
        e[i] = 0;
    };
    rec(rec, 0, w);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Exponents> standard_monomials(const GroebnerBasis& gb, int w)
{
    std::vector<Exponents> out;
    auto leads = leads_of(gb.generators, gb.order);
    for (auto& m : monomials_of_weight(*gb.table, w)) {
        bool hit = std::any_of(leads.begin(), leads.end(), [&](const Lead& l) { return divides(l.mono, m); });
        if (!hit) out.push_back(std::move(m));
    }
    return out;
}

HilbertFunction quotient_hilbert(const GroebnerBasis& gb, int bound)
{
    HilbertFunction h = HilbertFunction::zeros(0, bound);
    for (int w = 0; w <= bound; ++w) h.ref(w, Parity::Even) = static_cast<long>(standard_monomials(gb, w).size());
    return h;
}

std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens, const std::vector<std::string>& drop)
{
    if (gens.empty()) return {};
    const auto& table = gens.front().table();
    std::vector<bool> mask(table->size(), false);
    for (const auto& d : drop) mask[table->index_of(d)] = true;
    auto gb = groebner_basis(gens, MonomialOrder::elimination(mask), table);
    std::vector<Polynomial> out;
    for (const auto& g : gb.generators) {
        bool free = true;
        for (const auto& [e, c] : g.terms())
            for (size_t i = 0; i < e.size(); ++i)
                if (mask[i] && e[i]) free = false;
        if (free) out.push_back(g);
    }
    return out;
}

}  // namespace lgmf
