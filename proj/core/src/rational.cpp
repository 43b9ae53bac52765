#include "lgmf/rational.hpp"

#include <stdexcept>

namespace lgmf {

std::string to_string(const Rational& r)
{
    Rational q = r;
    q.canonicalize();
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_fraction_string(const Rational& r)
{
    Rational q = r;
    q.canonicalize();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational literal '" + s + "'");
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

}  // namespace lgmf
