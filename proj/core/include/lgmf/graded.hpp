#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lgmf/hilbert.hpp"
#include "lgmf/poly.hpp"

namespace lgmf {

struct GradedVar {
    std::string name;
    Parity parity = Parity::Even;
    int weight = 1;
};

/// Ordered generator list; even and odd generators are also numbered
/// separately, which is how monomials address them.
class Signature {
public:
    Signature() = default;
    explicit Signature(std::vector<GradedVar> vars);

    const std::vector<GradedVar>& vars() const noexcept { return vars_; }
    size_t size() const noexcept { return vars_.size(); }
    const GradedVar& var(size_t i) const { return vars_.at(i); }

    size_t even_count() const noexcept { return even_.size(); }
    size_t odd_count() const noexcept { return odd_.size(); }
    /// Position in vars() of the k-th even / odd generator.
    size_t even_var(size_t k) const { return even_.at(k); }
    size_t odd_var(size_t k) const { return odd_.at(k); }
    /// Slot of vars()[i] among generators of its parity.
    size_t slot(size_t i) const { return slot_.at(i); }

    std::optional<size_t> find(std::string_view name) const;
    size_t index_of(std::string_view name) const;
    bool contains(std::string_view name) const { return find(name).has_value(); }

    /// The even generators as a polynomial table.
    const VarTablePtr& even_table() const noexcept { return even_table_; }

    bool operator==(const Signature& o) const;

private:
    std::vector<GradedVar> vars_;
    std::vector<size_t> even_, odd_, slot_;
    std::map<std::string, size_t, std::less<>> index_;
    VarTablePtr even_table_;
};

using SignaturePtr = std::shared_ptr<const Signature>;

SignaturePtr make_signature(std::vector<GradedVar> vars);

bool same_signature(const SignaturePtr& a, const SignaturePtr& b);

struct GMonomial {
    Exponents even;
    std::uint64_t odd = 0;

    auto operator<=>(const GMonomial&) const = default;
};

Parity parity_of(const GMonomial& m);
int weight_of(const GMonomial& m, const Signature& sig);

/// Sign of moving odd generators of b past those of a when forming a*b.
int odd_product_sign(std::uint64_t a, std::uint64_t b);

class GradedElement {
public:
    using Terms = std::map<GMonomial, Rational>;

    GradedElement() = default;
    explicit GradedElement(SignaturePtr sig);
    GradedElement(SignaturePtr sig, const Rational& c);

    static GradedElement generator(SignaturePtr sig, std::string_view name);
    static GradedElement generator(SignaturePtr sig, size_t var_index);
    static GradedElement monomial(SignaturePtr sig, GMonomial m, const Rational& c = 1);
    static GradedElement from_polynomial(SignaturePtr sig, const Polynomial& p);

    const SignaturePtr& signature() const noexcept { return sig_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    size_t size() const noexcept { return terms_.size(); }

    bool is_constant() const;
    Rational constant_term() const;
    Rational coefficient(const GMonomial& m) const;

    /// Parity of the terms; nullopt if zero or mixed.
    std::optional<Parity> parity() const;
    bool is_even_polynomial() const;
    Polynomial to_polynomial() const;

    /// Min and max weight over terms; zero element gives {0, 0} and false.
    bool weight_range(int& lo, int& hi) const;

    void add_term(const GMonomial& m, const Rational& c);

    GradedElement& operator+=(const GradedElement& o);
    GradedElement& operator-=(const GradedElement& o);
    GradedElement& operator*=(const Rational& c);
    friend GradedElement operator+(GradedElement a, const GradedElement& b) { return a += b; }
    friend GradedElement operator-(GradedElement a, const GradedElement& b) { return a -= b; }
    friend GradedElement operator*(const GradedElement& a, const GradedElement& b);
    friend GradedElement operator*(GradedElement a, const Rational& c) { return a *= c; }
    friend GradedElement operator*(const Rational& c, GradedElement a) { return a *= c; }
    GradedElement operator-() const;
    bool operator==(const GradedElement& o) const;

    /// Terms with weight <= w.
    GradedElement truncate_above(int w) const;

    /// Moves to another signature by generator name, with optional renaming.
    GradedElement rebase(const SignaturePtr& target, const std::map<std::string, std::string>& rename = {}) const;

    std::string str() const;

private:
    void adopt(const GradedElement& o);

    SignaturePtr sig_;
    Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const GradedElement& e);

GradedElement parse_graded(std::string_view text, const SignaturePtr& sig);

/// Hands out identifiers not used before, appending `_g<n>` on clashes.
class NameSupply {
public:
    NameSupply() = default;
    explicit NameSupply(const std::vector<std::string>& taken);

    void reserve(const std::string& name) { used_.insert(name); }
    void reserve(const Signature& sig);
    bool taken(const std::string& name) const { return used_.count(name) > 0; }
    std::string fresh(const std::string& base);

private:
    std::set<std::string> used_;
    int counter_ = 0;
};

struct StepInfo {
    bool zero = true;          // differential vanishes identically
    bool homogeneous = true;   // one common weight step
    int s_min = 0;
    int s_max = 0;
    int step() const { return s_min; }
};

class SemifreeCDGA {
public:
    SemifreeCDGA() = default;
    /// Differentials per generator in signature order; missing ones are zero.
    SemifreeCDGA(SignaturePtr sig, std::vector<GradedElement> d);

    static SemifreeCDGA polynomial(const std::vector<std::string>& names, const std::vector<int>& weights = {});
    static SemifreeCDGA ground();

    const SignaturePtr& signature() const noexcept { return sig_; }
    const std::vector<GradedElement>& generator_differentials() const noexcept { return d_; }
    const GradedElement& d_of(size_t var) const { return d_.at(var); }
    const GradedElement& d_of(std::string_view name) const { return d_.at(sig_->index_of(name)); }

    GradedElement differential(const GradedElement& e) const;
    GradedElement differential(const GMonomial& m) const;

    GradedElement gen(std::string_view name) const { return GradedElement::generator(sig_, name); }
    GradedElement one() const { return GradedElement(sig_, 1); }
    GradedElement zero() const { return GradedElement(sig_); }

    /// Name of the first generator with d(d(g)) != 0 or with a differential of
    /// the wrong parity.
    std::optional<std::string> check() const;

    /// Weight change of the generator differentials.
    StepInfo step() const;

    /// New algebra with extra generators; their differentials may refer to
    /// themselves and old generators. Throws on name clashes.
    SemifreeCDGA adjoin(const std::vector<GradedVar>& vars, const std::vector<std::string>& d) const;
    SemifreeCDGA adjoin(const std::vector<GradedVar>& vars, const std::vector<GradedElement>& d) const;

    std::string str() const;

private:
    SignaturePtr sig_;
    std::vector<GradedElement> d_;
};

GradedElement extend_leibniz(const SemifreeCDGA& A, const GradedElement& e);

struct TensorResult {
    SemifreeCDGA algebra;
    std::map<std::string, std::string> left_renames;
    std::map<std::string, std::string> right_renames;
};

/// Coproduct; clashing names of the right factor get fresh names from `names`
/// (or a private supply), reported in right_renames.
TensorResult tensor_cdga(const SemifreeCDGA& A, const SemifreeCDGA& B, NameSupply* names = nullptr);

class CDGAMap {
public:
    CDGAMap() = default;
    CDGAMap(SemifreeCDGA source, SemifreeCDGA target, std::vector<GradedElement> images);

    /// Images given by generator name; unlisted generators go to the same name
    /// in the target, or to zero if absent there.
    static CDGAMap by_name(SemifreeCDGA source, SemifreeCDGA target,
                           const std::map<std::string, GradedElement>& images);
    static CDGAMap by_strings(SemifreeCDGA source, SemifreeCDGA target,
                              const std::map<std::string, std::string>& images);
    static CDGAMap identity(const SemifreeCDGA& A);

    const SemifreeCDGA& source() const noexcept { return source_; }
    const SemifreeCDGA& target() const noexcept { return target_; }
    const std::vector<GradedElement>& images() const noexcept { return images_; }
    const GradedElement& image(std::string_view name) const { return images_.at(source_.signature()->index_of(name)); }

    GradedElement apply(const GradedElement& e) const;

    /// First source generator on which d f != f d, or a parity clash.
    std::optional<std::string> chain_map_failure() const;

    /// Weight shift common to all generator images, if any.
    std::optional<int> weight_shift() const;

    CDGAMap then(const CDGAMap& g) const;

private:
    SemifreeCDGA source_;
    SemifreeCDGA target_;
    std::vector<GradedElement> images_;
};

struct ModuleGen {
    std::string name;
    Parity parity = Parity::Even;
    int weight = 0;
};

/// Free module over a semifree cdga with d(e_j) = sum_i D(i, j) e_i.
class SemifreeModule {
public:
    using Vector = std::vector<GradedElement>;

    SemifreeModule() = default;
    SemifreeModule(SemifreeCDGA base, std::vector<ModuleGen> gens, std::vector<GradedElement> D);

    /// The algebra as a rank one module over itself.
    static SemifreeModule regular(const SemifreeCDGA& A);

    const SemifreeCDGA& base() const noexcept { return base_; }
    const std::vector<ModuleGen>& gens() const noexcept { return gens_; }
    size_t rank() const noexcept { return gens_.size(); }
    const GradedElement& D(size_t i, size_t j) const { return D_.at(i * gens_.size() + j); }

    Vector zero_vector() const;
    Vector basis_vector(size_t j) const;

    /// d(m e_j) = dm e_j + (-1)^|m| m sum_i D(i, j) e_i, extended linearly.
    Vector differential(const Vector& v) const;
    Vector differential(const GMonomial& m, size_t j) const;

    /// Checks d^2 = c * id for the given central element (zero by default).
    std::optional<std::string> check(const GradedElement* curvature = nullptr) const;

    StepInfo step() const;

private:
    SemifreeCDGA base_;
    std::vector<ModuleGen> gens_;
    std::vector<GradedElement> D_;
};

}  // namespace lgmf
