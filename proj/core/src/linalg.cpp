#include "lgmf/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace lgmf {

SparseVec sparse_from_map(const std::map<size_t, Rational>& m)
{
    SparseVec v;
    v.reserve(m.size());
    for (const auto& [i, c] : m)
        if (c != 0) v.emplace_back(i, c);
    return v;
}

SparseVec axpy(const SparseVec& v, const Rational& c, const SparseVec& w)
{
    SparseVec out;
    out.reserve(v.size() + w.size());
    size_t i = 0, j = 0;
    while (i < v.size() || j < w.size()) {
        if (j == w.size() || (i < v.size() && v[i].first < w[j].first)) {
            out.push_back(v[i++]);
        } else if (i == v.size() || w[j].first < v[i].first) {
            out.emplace_back(w[j].first, -c * w[j].second);
            ++j;
        } else {
            Rational s = v[i].second - c * w[j].second;
            if (s != 0) out.emplace_back(v[i].first, std::move(s));
            ++i;
            ++j;
        }
    }
    return out;
}

SparseVec scaled(SparseVec v, const Rational& c)
{
    if (c == 0) return {};
    for (auto& [i, x] : v) x *= c;
    return v;
}

bool SparseEchelon::reduce_lead(SparseVec& v, SparseVec* tag) const
{
    while (!v.empty()) {
        auto it = pivots_.find(v.front().first);
        if (it == pivots_.end()) return false;
        Rational c = v.front().second;
        v = axpy(v, c, it->second.vec);
        if (tag) *tag = axpy(*tag, c, it->second.tag);
    }
    return true;
}

bool SparseEchelon::add(SparseVec v)
{
    SparseVec tag;
    if (track_) tag.emplace_back(next_id_, Rational(1));
    ++next_id_;
    relation_.clear();
    if (reduce_lead(v, track_ ? &tag : nullptr)) {
        relation_ = std::move(tag);
        return false;
    }
    Rational inv = Rational(1) / v.front().second;
    size_t col = v.front().first;
    pivots_.emplace(col, Row{scaled(std::move(v), inv), track_ ? scaled(std::move(tag), inv) : SparseVec{}});
    return true;
}

bool SparseEchelon::in_span(SparseVec v) const { return reduce_lead(v, nullptr); }

std::optional<SparseVec> SparseEchelon::express(SparseVec v) const
{
    if (!track_) throw std::logic_error("express() needs tag tracking");
    SparseVec tag;
    if (!reduce_lead(v, &tag)) return std::nullopt;
    return scaled(std::move(tag), Rational(-1));
}

SparseVec SparseEchelon::reduce_fully(SparseVec v) const
{
    SparseVec rest;
    while (!v.empty()) {
        auto it = pivots_.find(v.front().first);
        if (it == pivots_.end()) {
            rest.push_back(v.front());
            v.erase(v.begin());
            continue;
        }
        v = axpy(v, v.front().second, it->second.vec);
    }
    return rest;
}

std::vector<size_t> SparseEchelon::pivot_columns() const
{
    std::vector<size_t> out;
    out.reserve(pivots_.size());
    for (const auto& [c, r] : pivots_) out.push_back(c);
    std::sort(out.begin(), out.end());
    return out;
}

size_t sparse_rank(const std::vector<SparseVec>& rows)
{
    SparseEchelon e;
    for (const auto& r : rows) e.add(r);
    return e.rank();
}

std::vector<SparseVec> left_kernel(const std::vector<SparseVec>& rows)
{
    SparseEchelon e(true);
    std::vector<SparseVec> out;
    for (const auto& r : rows)
        if (!e.add(r)) out.push_back(e.last_relation());
    return out;
}

}  // namespace lgmf
