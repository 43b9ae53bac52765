#include "lgmf/hilbert.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lgmf {

HilbertFunction HilbertFunction::zeros(int min_weight, int max_weight)
{
    HilbertFunction h;
    h.min_weight = min_weight;
    size_t n = max_weight >= min_weight ? static_cast<size_t>(max_weight - min_weight + 1) : 0;
    h.even.assign(n, 0);
    h.odd.assign(n, 0);
    h.trusted_upto = max_weight;
    return h;
}

long HilbertFunction::at(int w, Parity p) const
{
    if (w < min_weight || w > max_weight()) return 0;
    const auto& v = p == Parity::Even ? even : odd;
    return v[static_cast<size_t>(w - min_weight)];
}

long& HilbertFunction::ref(int w, Parity p)
{
    if (w < min_weight || w > max_weight()) throw std::out_of_range("weight outside Hilbert function");
    auto& v = p == Parity::Even ? even : odd;
    return v[static_cast<size_t>(w - min_weight)];
}

HilbertFunction HilbertFunction::window(int lo, int hi) const
{
    hi = std::min(hi, trusted_upto);
    HilbertFunction h = zeros(lo, hi);
    h.weight_scale = weight_scale;
    for (int w = lo; w <= hi; ++w) {
        h.ref(w, Parity::Even) = at(w, Parity::Even);
        h.ref(w, Parity::Odd) = at(w, Parity::Odd);
    }
    return h;
}

long HilbertFunction::total(Parity p) const
{
    long t = 0;
    for (int w = min_weight; w <= std::min(max_weight(), trusted_upto); ++w) t += at(w, p);
    return t;
}

bool HilbertFunction::operator==(const HilbertFunction& o) const
{
    return !compare_hilbert(*this, o) && trusted_upto == o.trusted_upto && weight_scale == o.weight_scale;
}

std::string HilbertFunction::str() const
{
    std::ostringstream os;
    auto dump = [&](const std::vector<long>& v) {
        os << "[";
        for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
        os << "]";
    };
    os << "even";
    dump(even);
    os << " odd";
    dump(odd);
    os << " from " << min_weight << " trusted<=" << trusted_upto;
    if (weight_scale != 1) os << " scale " << weight_scale;
    return os.str();
}

std::optional<HilbertMismatch> compare_hilbert(const HilbertFunction& a, const HilbertFunction& b)
{
    int lo = std::min(a.min_weight, b.min_weight);
    int hi = std::min(a.trusted_upto, b.trusted_upto);
    for (int w = lo; w <= hi; ++w)
        for (Parity p : {Parity::Even, Parity::Odd})
            if (a.at(w, p) != b.at(w, p)) return HilbertMismatch{w, p, a.at(w, p), b.at(w, p)};
    return std::nullopt;
}

HilbertFunction tensor_hilbert(const HilbertFunction& a, const HilbertFunction& b)
{
    int lo = a.min_weight + b.min_weight;
    // Negative weights on one side shrink how far the other side is reliable.
    int hi = std::min(a.trusted_upto + b.min_weight, b.trusted_upto + a.min_weight);
    HilbertFunction h = HilbertFunction::zeros(lo, hi);
    for (int w = lo; w <= hi; ++w)
        for (int u = a.min_weight; u <= w - b.min_weight; ++u)
            for (Parity p : {Parity::Even, Parity::Odd})
                for (Parity q : {Parity::Even, Parity::Odd})
                    h.ref(w, p + q) += a.at(u, p) * b.at(w - u, q);
    return h;
}

}  // namespace lgmf
