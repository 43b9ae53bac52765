#include "lgmf/cohomology.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>

#include "lgmf/groebner.hpp"

namespace lgmf {

SlabSpace::SlabSpace(const SemifreeModule& M) : M_(M)
{
    const auto& sig = *M_.base().signature();
    for (size_t k = 0; k < sig.odd_count(); ++k) {
        int w = sig.var(sig.odd_var(k)).weight;
        if (w < 0) min_odd_ += w;
        else max_odd_ += w;
    }
    bool first = true;
    for (const auto& g : M_.gens()) {
        if (first || g.weight < min_weight_) min_weight_ = g.weight;
        first = false;
    }
    min_weight_ += min_odd_;
}

void SlabSpace::grow_odd(int cap)
{
    if (cap <= odd_cap_) return;
    odd_cap_ = cap;
    odd_by_weight_.clear();
    const auto& sig = *M_.base().signature();
    size_t n = sig.odd_count();
    std::vector<int> w(n), neg_tail(n + 1, 0);
    for (size_t k = 0; k < n; ++k) w[k] = sig.var(sig.odd_var(k)).weight;
    for (size_t k = n; k-- > 0;) neg_tail[k] = neg_tail[k + 1] + std::min(0, w[k]);
    auto rec = [&](auto& self, size_t k, std::uint64_t mask, int cur) -> void {
        if (cur + neg_tail[k] > cap) return;
        if (k == n) {
            odd_by_weight_[cur].push_back(mask);
            return;
        }
        self(self, k + 1, mask, cur);
        self(self, k + 1, mask | (std::uint64_t{1} << k), cur + w[k]);
    };
    rec(rec, 0, 0, 0);
    for (auto& [wt, masks] : odd_by_weight_) std::sort(masks.begin(), masks.end());
}

const std::vector<Exponents>& SlabSpace::even_monos(int w)
{
    auto it = even_cache_.find(w);
    if (it != even_cache_.end()) return it->second;
    return even_cache_[w] = monomials_of_weight(*M_.base().signature()->even_table(), w);
}

const std::vector<BasisElem>& SlabSpace::basis(int w, Parity p)
{
    auto key = std::make_pair(w, p);
    if (auto it = basis_.find(key); it != basis_.end()) return it->second;
    std::vector<BasisElem> out;
    int lowest_gen = 0;
    for (size_t j = 0; j < M_.rank(); ++j)
        lowest_gen = j ? std::min(lowest_gen, M_.gens()[j].weight) : M_.gens()[j].weight;
    grow_odd(w - lowest_gen);
    for (size_t j = 0; j < M_.rank(); ++j) {
        const auto& g = M_.gens()[j];
        int u = w - g.weight;
        Parity q = p + g.parity;
        for (const auto& [ow, masks] : odd_by_weight_) {
            if (ow > u) break;
            const auto& evens = even_monos(u - ow);
            if (evens.empty()) continue;
            for (auto mask : masks) {
                if ((std::popcount(mask) % 2 == 1) != (q == Parity::Odd)) continue;
                for (const auto& e : evens) out.push_back({GMonomial{e, mask}, j});
            }
        }
    }
    auto& idx = index_[key];
    for (size_t i = 0; i < out.size(); ++i) idx.emplace(out[i], i);
    return basis_[key] = std::move(out);
}

std::optional<size_t> SlabSpace::index(int w, Parity p, const BasisElem& b)
{
    basis(w, p);
    const auto& idx = index_[{w, p}];
    auto it = idx.find(b);
    if (it == idx.end()) return std::nullopt;
    return it->second;
}

int SlabSpace::weight(const BasisElem& b) const
{
    return weight_of(b.mono, *M_.base().signature()) + M_.gens()[b.gen].weight;
}

Parity SlabSpace::parity(const BasisElem& b) const { return parity_of(b.mono) + M_.gens()[b.gen].parity; }

SemifreeModule::Vector SlabSpace::vector(const BasisElem& b) const
{
    auto v = M_.zero_vector();
    v[b.gen] = GradedElement::monomial(M_.base().signature(), b.mono);
    return v;
}

SemifreeModule::Vector SlabSpace::vector(int w, Parity p, const SparseVec& coords)
{
    const auto& B = basis(w, p);
    auto v = M_.zero_vector();
    for (const auto& [i, c] : coords) v[B.at(i).gen].add_term(B[i].mono, c);
    return v;
}

SparseVec SlabSpace::coords(const SemifreeModule::Vector& v, int w, Parity p)
{
    std::map<size_t, Rational> acc;
    for (size_t j = 0; j < v.size(); ++j)
        for (const auto& [m, c] : v[j].terms()) {
            BasisElem b{m, j};
            auto i = index(w, p, b);
            if (!i)
                throw std::logic_error("vector leaves slab (" + std::to_string(w) + ") at weight " +
                                       std::to_string(weight(b)));
            acc[*i] += c;
        }
    return sparse_from_map(acc);
}

std::map<std::pair<int, Parity>, SparseVec> SlabSpace::split(const SemifreeModule::Vector& v)
{
    std::map<std::pair<int, Parity>, std::map<size_t, Rational>> acc;
    for (size_t j = 0; j < v.size(); ++j)
        for (const auto& [m, c] : v[j].terms()) {
            BasisElem b{m, j};
            int w = weight(b);
            Parity p = parity(b);
            acc[{w, p}][*index(w, p, b)] += c;
        }
    std::map<std::pair<int, Parity>, SparseVec> out;
    for (const auto& [k, m] : acc) out[k] = sparse_from_map(m);
    return out;
}

std::vector<SparseVec> SlabSpace::d_rows(int w, Parity p, int s)
{
    std::vector<SparseVec> rows;
    const auto B = basis(w, p);
    rows.reserve(B.size());
    for (const auto& b : B) rows.push_back(coords(M_.differential(b.mono, b.gen), w + s, flip(p)));
    return rows;
}

namespace {

HilbertFunction homogeneous_hilbert(SlabSpace& S, int bound, int s)
{
    HilbertFunction h = HilbertFunction::zeros(std::min(S.min_weight(), bound), bound);
    std::map<std::pair<int, Parity>, size_t> ranks;
    bool zero = S.module().step().zero;
    auto rank_from = [&](int w, Parity p) -> size_t {
        if (zero || w < S.min_weight()) return 0;
        auto key = std::make_pair(w, p);
        if (auto it = ranks.find(key); it != ranks.end()) return it->second;
        return ranks[key] = sparse_rank(S.d_rows(w, p, s));
    };
    for (int w = h.min_weight; w <= bound; ++w)
        for (Parity p : {Parity::Even, Parity::Odd}) {
            long n = static_cast<long>(S.basis(w, p).size());
            h.ref(w, p) = n - static_cast<long>(rank_from(w, p)) - static_cast<long>(rank_from(w - s, flip(p)));
        }
    return h;
}

HilbertFunction filtered_hilbert(SlabSpace& S, int bound, const StepInfo& st)
{
    int lo = std::min(S.min_weight(), bound);
    HilbertFunction h = HilbertFunction::zeros(lo, bound);
    h.trusted_upto = bound - std::max(std::abs(st.s_min), std::abs(st.s_max));

    // Per source parity q: rank of d on C_{<=w,q}, and pivot weights of the image.
    std::map<Parity, std::vector<long>> z_rank;
    std::map<Parity, std::vector<int>> pivot_weights;
    std::map<Parity, std::vector<long>> cumulative;
    for (Parity q : {Parity::Even, Parity::Odd}) {
        std::vector<std::vector<std::pair<std::pair<int, BasisElem>, Rational>>> images;
        std::vector<int> src_weight;
        std::map<std::pair<int, BasisElem>, size_t> cols;
        long count = 0;
        auto& cum = cumulative[q];
        for (int w = lo; w <= bound; ++w) {
            for (const auto& b : S.basis(w, q)) {
                auto dv = S.module().differential(b.mono, b.gen);
                std::vector<std::pair<std::pair<int, BasisElem>, Rational>> img;
                for (size_t j = 0; j < dv.size(); ++j)
                    for (const auto& [m, c] : dv[j].terms()) {
                        BasisElem t{m, j};
                        int tw = S.weight(t);
                        // Columns sorted by weight descending.
                        cols.emplace(std::make_pair(-tw, t), 0);
                        img.push_back({{-tw, t}, c});
                    }
                images.push_back(std::move(img));
                src_weight.push_back(w);
            }
            count += static_cast<long>(S.basis(w, q).size());
            cum.push_back(count);
        }
        size_t next = 0;
        std::vector<int> col_weight;
        for (auto& [k, id] : cols) {
            id = next++;
            col_weight.push_back(-k.first);
        }
        SparseEchelon e;
        auto& zr = z_rank[q];
        size_t r = 0;
        for (int w = lo; w <= bound; ++w) {
            for (; r < images.size() && src_weight[r] == w; ++r) {
                std::map<size_t, Rational> row;
                for (const auto& [k, c] : images[r]) row[cols[k]] += c;
                e.add(sparse_from_map(row));
            }
            zr.push_back(static_cast<long>(e.rank()));
        }
        for (size_t c : e.pivot_columns()) pivot_weights[q].push_back(col_weight[c]);
    }
    for (Parity p : {Parity::Even, Parity::Odd}) {
        Parity q = flip(p);
        long total_image = static_cast<long>(pivot_weights[q].size());
        long prev = 0;
        for (int w = lo; w <= bound; ++w) {
            size_t i = static_cast<size_t>(w - lo);
            long z = cumulative[p][i] - z_rank[p][i];
            long above = std::count_if(pivot_weights[q].begin(), pivot_weights[q].end(), [&](int t) { return t > w; });
            long f = z - (total_image - above);
            h.ref(w, p) = f - prev;
            prev = f;
        }
    }
    return h;
}

}  // namespace

HilbertFunction cohomology_hilbert(const SemifreeModule& M, int bound)
{
    SlabSpace S(M);
    StepInfo st = M.step();
    if (st.zero || st.homogeneous) return homogeneous_hilbert(S, bound, st.zero ? 0 : st.s_min);
    return filtered_hilbert(S, bound, st);
}

HilbertFunction cohomology_hilbert(const SemifreeCDGA& A, int bound)
{
    return cohomology_hilbert(SemifreeModule::regular(A), bound);
}

std::vector<SemifreeModule::Vector> cohomology_basis(SlabSpace& S, int w, Parity p, int step)
{
    auto closed = left_kernel(S.d_rows(w, p, step));
    SparseEchelon e;
    if (w - step >= S.min_weight())
        for (auto& r : S.d_rows(w - step, flip(p), step)) e.add(std::move(r));
    std::vector<SemifreeModule::Vector> out;
    for (auto& z : closed)
        if (e.add(z)) out.push_back(S.vector(w, p, z));
    return out;
}

bool is_cohomology_basis(const SemifreeModule& M, int w, Parity p, const std::vector<SemifreeModule::Vector>& cands)
{
    StepInfo st = M.step();
    if (!st.zero && !st.homogeneous) throw std::invalid_argument("class basis check needs a homogeneous differential");
    int s = st.zero ? 0 : st.s_min;
    SlabSpace S(M);
    for (const auto& c : cands) {
        for (const auto& e : M.differential(c))
            if (!e.is_zero()) return false;
    }
    SparseEchelon e;
    if (!st.zero)
        for (auto& r : S.d_rows(w - s, flip(p), s)) e.add(std::move(r));
    for (const auto& c : cands)
        if (!e.add(S.coords(c, w, p))) return false;
    long dim = homogeneous_hilbert(S, w, s).at(w, p);
    return static_cast<long>(cands.size()) == dim;
}

QuasiIsoVerdict quasi_iso_check(const CDGAMap& f, int bound)
{
    QuasiIsoVerdict v;
    if (auto bad = f.chain_map_failure()) {
        v.trusted = false;
        v.detail = "not a chain map at generator '" + *bad + "'";
        return v;
    }
    auto shift = f.weight_shift();
    StepInfo sa = f.source().step(), sb = f.target().step();
    if (!shift || *shift != 0 || !(sa.zero || sa.homogeneous) || !(sb.zero || sb.homogeneous)) {
        v.trusted = false;
        v.detail = "map or differentials are not weight homogeneous";
        return v;
    }
    int s_a = sa.zero ? 0 : sa.s_min, s_b = sb.zero ? 0 : sb.s_min;
    SlabSpace A(SemifreeModule::regular(f.source()));
    SlabSpace B(SemifreeModule::regular(f.target()));
    auto hb = homogeneous_hilbert(B, bound, s_b);
    int lo = std::min(A.min_weight(), B.min_weight());
    for (int w = lo; w <= bound; ++w)
        for (Parity p : {Parity::Even, Parity::Odd}) {
            auto reps = cohomology_basis(A, w, p, s_a);
            long dim_b = hb.at(w, p);
            SparseEchelon e;
            if (!sb.zero && w - s_b >= B.min_weight())
                for (auto& r : B.d_rows(w - s_b, flip(p), s_b)) e.add(std::move(r));
            long before = static_cast<long>(e.rank());
            for (const auto& r : reps) {
                SemifreeModule::Vector img{f.apply(r[0])};
                e.add(B.coords(img, w, p));
            }
            long induced = static_cast<long>(e.rank()) - before;
            long dim_a = static_cast<long>(reps.size());
            if (induced != dim_a || induced != dim_b) {
                v.iso = false;
                v.weight = w;
                v.parity = p;
                v.detail = "H dims " + std::to_string(dim_a) + " -> " + std::to_string(dim_b) + ", induced rank " +
                           std::to_string(induced);
                return v;
            }
        }
    v.iso = true;
    return v;
}

}  // namespace lgmf
