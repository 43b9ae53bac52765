#pragma once

#include <vector>

#include "lgmf/hilbert.hpp"
#include "lgmf/poly.hpp"

namespace lgmf {

struct GroebnerBasis {
    VarTablePtr table;
    MonomialOrder order;
    std::vector<Polynomial> generators;  // reduced, monic, sorted by leading monomial

    bool is_unit_ideal() const;
};

GroebnerBasis groebner_basis(const std::vector<Polynomial>& gens, const MonomialOrder& order = {},
                             VarTablePtr table = nullptr);

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

bool ideal_contains(const GroebnerBasis& gb, const Polynomial& p);

/// All exponent vectors of weighted degree exactly w, in lexicographic order.
std::vector<Exponents> monomials_of_weight(const VarTable& table, int w);

bool divides(const Exponents& a, const Exponents& b);

/// Monomials of weight w outside the leading ideal.
std::vector<Exponents> standard_monomials(const GroebnerBasis& gb, int w);

HilbertFunction quotient_hilbert(const GroebnerBasis& gb, int bound);

/// Generators of the ideal intersected with the subring free of `drop`,
/// via a block order. Results stay on the input table.
std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens, const std::vector<std::string>& drop);

}  // namespace lgmf
