#pragma once

#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lgmf/rational.hpp"

namespace lgmf {

/// Sorted by index, no zero entries.
using SparseVec = std::vector<std::pair<size_t, Rational>>;

SparseVec sparse_from_map(const std::map<size_t, Rational>& m);

/// v - c * w, both sorted.
SparseVec axpy(const SparseVec& v, const Rational& c, const SparseVec& w);

SparseVec scaled(SparseVec v, const Rational& c);

/// Incremental row echelon form over Q. Every added vector gets the next
/// integer id; with tag tracking each pivot remembers which combination of
/// ids produced it, so dependencies and solutions can be read back.
class SparseEchelon {
public:
    explicit SparseEchelon(bool track_tags = false) : track_(track_tags) {}

    /// True when v raised the rank.
    bool add(SparseVec v);

    /// The relation among ids found by the last dependent add().
    const SparseVec& last_relation() const { return relation_; }

    size_t rank() const { return pivots_.size(); }
    size_t added() const { return next_id_; }

    bool in_span(SparseVec v) const;

    /// Coefficients over ids whose combination is v; needs tag tracking.
    std::optional<SparseVec> express(SparseVec v) const;

    /// Remainder after eliminating every pivot column from v.
    SparseVec reduce_fully(SparseVec v) const;

    /// Leading columns of the echelon rows; determined by the row space.
    std::vector<size_t> pivot_columns() const;

private:
    struct Row {
        SparseVec vec;
        SparseVec tag;
    };

    bool reduce_lead(SparseVec& v, SparseVec* tag) const;

    bool track_;
    size_t next_id_ = 0;
    std::unordered_map<size_t, Row> pivots_;
    SparseVec relation_;
};

size_t sparse_rank(const std::vector<SparseVec>& rows);

/// Basis of {c : sum_i c_i rows[i] = 0}.
std::vector<SparseVec> left_kernel(const std::vector<SparseVec>& rows);

/// Hands out consecutive indices to keys on first sight.
template <class Key, class Map = std::map<Key, size_t>>
class Indexer {
public:
    size_t operator()(const Key& k)
    {
        auto [it, fresh] = index_.try_emplace(k, keys_.size());
        if (fresh) keys_.push_back(k);
        return it->second;
    }
    std::optional<size_t> find(const Key& k) const
    {
        auto it = index_.find(k);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    const Key& key(size_t i) const { return keys_.at(i); }
    size_t size() const { return keys_.size(); }

private:
    Map index_;
    std::vector<Key> keys_;
};

}  // namespace lgmf
