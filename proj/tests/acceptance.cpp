// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Usage: lgmf_acceptance [criterion ...]
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "lgmf/bicat.hpp"
#include "lgmf/cohomology.hpp"
#include "lgmf/crw.hpp"
#include "lgmf/functor_e.hpp"
#include "lgmf/groebner.hpp"
#include "lgmf/tft.hpp"

using namespace lgmf;
namespace lt = lgmf::testing;

namespace {

// Pinned budgets (seconds) and weight windows. Every comparison is exact.
constexpr double kBudget1 = 30, kBudget2 = 120, kBudget3 = 120, kBudget4 = 180, kBudget5 = 120, kBudget6 = 180;
constexpr int kZigzagBound = 8;
constexpr int kUnitLawBound = 6;
constexpr int kFunctorBound = 6;
constexpr int kSerreBound = 6;
constexpr int kTftBound = 6;
constexpr int kGenusOrderBound = 4;
constexpr int kThreeDualBound = 6;
constexpr int kGroebnerWeight = 6;
constexpr int kRandomPotentials = 100;
constexpr int kRandomIdeals = 25;
constexpr unsigned kSeed = 20240917;

struct Outcome {
    bool ok = true;
    std::ostringstream why;

    void fail(const std::string& s)
    {
        ok = false;
        why << (why.tellp() > 0 ? "; " : "") << s;
    }
    void require(bool c, const std::string& s)
    {
        if (!c) fail(s);
    }
};

std::string str(const Polynomial& p) { return p.str(); }

// 1 ---------------------------------------------------------------------------
void exact_identities(Outcome& o)
{
    std::vector<std::pair<std::string, MatrixFactorization>> mfs;
    for (const auto& [n, M] : lt::koszul_corpus()) mfs.emplace_back("koszul " + n, M.rep);
    for (const auto& f : lt::zigzag_corpus()) mfs.emplace_back("unit " + str(f.potential), identity_2(f).rep);

    for (const auto& [n, M] : mfs) {
        auto D = M.full();
        o.require(D * D == PolyMatrix::identity(M.table, M.rank()) * M.potential, "d^2 != V for " + n);
        for (const auto& t : M.table->names()) {
            auto l = lambda(M, t);
            o.require(hom_delta(M, M, l, Parity::Odd) ==
                          PolyMatrix::identity(M.table, M.rank()) * partial_derivative(M.potential, t),
                      "delta(lambda_" + t + ") for " + n);
        }
    }

    lt::Rng rng(kSeed);
    std::uniform_int_distribution<int> nvars(1, 3);
    for (int k = 0; k < kRandomPotentials; ++k) {
        int m = nvars(rng);
        std::vector<std::string> base{"x", "y"}, a, ap;
        for (int i = 0; i < m; ++i) {
            a.push_back("a" + std::to_string(i + 1));
            ap.push_back(primed(a.back()));
        }
        auto names = base;
        names.insert(names.end(), a.begin(), a.end());
        auto small = make_table(names);
        names.insert(names.end(), ap.begin(), ap.end());
        auto T = make_table(names);
        auto V = lt::random_poly(small, 4, 6, rng).rebase(T);
        Polynomial sum(T);
        for (size_t i = 0; i < a.size(); ++i)
            sum += difference_quotient(V, a, ap, i) *
                   (Polynomial::variable(T, ap[i]) - Polynomial::variable(T, a[i]));
        if (!(sum == prime_from(V, a, ap, 0) - V)) o.fail("telescoping sum for V = " + str(V));
    }

    for (const auto& [n, M] : mfs) {
        for (int k = 0; k < 3; ++k) {
            auto P = lt::random_unitriangular(M, rng, 2);
            auto d1 = M.full();
            auto d2 = P * d1 * lt::unitriangular_inverse(P);
            for (const auto& t : M.table->names()) {
                auto w = conjugation_witness(P, d1, d2, t);
                o.require(w.ok, "conjugation witness for " + n + " d/d" + t + ": " + w.detail);
            }
        }
    }
}

// 2 ---------------------------------------------------------------------------
void zigzag(Outcome& o)
{
    for (const auto& f : lt::zigzag_corpus()) {
        auto z = verify_zigzag(f, kZigzagBound);
        if (!z.ok) o.fail("V = " + str(f.potential) + ": " + z.detail);
    }
}

// 3 ---------------------------------------------------------------------------
void unit_laws(Outcome& o)
{
    for (const auto& [n, M] : lt::koszul_corpus())
        for (bool after : {true, false}) {
            auto r = check_unit_law(M, after, kUnitLawBound);
            o.require(r.ok, n + " " + r.side + ": " + r.detail);
        }
}

// 4 ---------------------------------------------------------------------------
void functoriality(Outcome& o)
{
    auto x = lt::obj({"x"}), y = lt::obj({"y"}), z = lt::obj({"z"}), e = lt::obj({});
    auto v = check_functoriality_1(make_one_morphism(x, y, {}, "x*y"), make_one_morphism(y, z, {}, "y*z"),
                                   kFunctorBound);
    o.require(v.ok && v.h0_match, "composite xy, yz: " + v.detail);
    std::string d;
    o.require(e_identity_is_diagonal(x, kFunctorBound, &d), "e(id_x): " + d);
    auto u1 = check_functoriality_2_unit(make_one_morphism(e, e, {"a"}, "a^2"), kFunctorBound);
    o.require(u1.ok, "e_two(I_(a,a^2)): " + u1.detail);
    auto u2 = check_functoriality_2_unit(make_one_morphism(e, e, {}, "0"), kFunctorBound);
    o.require(u2.ok, "e_two(I_(0,0)): " + u2.detail);
}

// 5 ---------------------------------------------------------------------------
void serre(Outcome& o)
{
    for (const auto& X : {point_stack(), make_stack(SemifreeCDGA::polynomial({"x"}), {}), cotangent_stack({"x"})}) {
        auto r = serre_composite(X, kSerreBound);
        o.require(r.ok && r.hilbert.trusted_upto >= kSerreBound, X.algebra.str() + ": " + r.detail);
    }
}

// 6 ---------------------------------------------------------------------------
void theorem_values(Outcome& o)
{
    for (const auto& A : {SemifreeCDGA::ground(), SemifreeCDGA::polynomial({"x"}), cotangent_stack({"x"}).algebra}) {
        try {
            o.require(z_circle(A, kTftBound).agree, "circle " + A.str());
        } catch (const std::exception& ex) {
            o.fail(ex.what());
        }
    }
    for (int t : {1, 2}) {
        auto s = z_sphere(polynomial_algebra(t), kTftBound);
        if (!(s.even_generators == 2 * t && s.odd_generators == 2 * t && s.zero_differential))
            o.fail("sphere census for t = " + std::to_string(t) + " is (" + std::to_string(s.even_generators) + "," +
                   std::to_string(s.odd_generators) + "), expected (" + std::to_string(2 * t) + "," +
                   std::to_string(2 * t) + ")");
    }
    auto K = HilbertFunction::zeros(0, kTftBound);
    K.ref(0, Parity::Even) = 1;
    for (int g = 0; g <= 2; ++g)
        o.require(lt::same_window(z_genus(SemifreeCDGA::ground(), g, kTftBound).hilbert, K, kTftBound),
                  "Z_K(Sigma_" + std::to_string(g) + ") != K");
    auto A = SemifreeCDGA::polynomial({"x"});
    auto l = z_genus(A, 1, kGenusOrderBound, Assembly::LeftToRight);
    auto r = z_genus(A, 1, kGenusOrderBound, Assembly::RightToLeft);
    o.require(lt::same_window(l.hilbert, r.hilbert, kGenusOrderBound), "genus 1 assembly order");
}

// 7 ---------------------------------------------------------------------------
void three_dual(Outcome& o)
{
    for (int t = 0; t <= 3; ++t) {
        auto v = three_dual_check(polynomial_algebra(t), kThreeDualBound);
        o.require((v.verdict == "extendable") == (t == 0), "t = " + std::to_string(t) + ": " + v.verdict);
    }
}

// 8 ---------------------------------------------------------------------------
void groebner_kernel(Outcome& o)
{
    lt::Rng rng(kSeed + 8);
    std::uniform_int_distribution<int> nv(1, 3), ng(1, 3), deg(1, 3);
    const std::vector<std::string> all{"x", "y", "z"};
    for (int k = 0; k < kRandomIdeals; ++k) {
        auto T = make_table(std::vector<std::string>(all.begin(), all.begin() + nv(rng)));
        std::vector<Polynomial> gens;
        for (int i = ng(rng); i > 0; --i) gens.push_back(lt::random_poly(T, 3, 3, rng, deg(rng)));
        auto gb = groebner_basis(gens);
        std::vector<Polynomial> probes;
        for (int w = 0; w <= kGroebnerWeight; ++w)
            for (const auto& m : lt::exps_of_weight(*T, w)) probes.push_back(Polynomial::monomial(T, m));
        for (int j = 0; j < 10; ++j) {
            // members built from the generators, and random perturbations of them
            Polynomial p(T);
            for (const auto& g : gens)
                if (!g.is_zero() && g.weighted_degree() <= kGroebnerWeight)
                    p += g * lt::random_poly(T, kGroebnerWeight - g.weighted_degree(), 2, rng);
            probes.push_back(p);
            probes.push_back(p + lt::random_poly(T, kGroebnerWeight, 1, rng));
        }
        for (const auto& p : probes) {
            bool by_nf = normal_form(p, gb).is_zero();
            if (by_nf != lt::brute_member(gens, p)) {
                o.fail("ideal " + std::to_string(k) + " disagrees on " + str(p));
                return;
            }
        }
    }
}

struct Criterion {
    int id;
    const char* name;
    double budget;  // 0: none
    std::function<void(Outcome&)> run;
};

}  // namespace

int main(int argc, char** argv)
{
    std::vector<Criterion> all = {
        {1, "exact identity suite", kBudget1, exact_identities},
        {2, "End(I) zigzag for the five potentials", kBudget2, zigzag},
        {3, "unit laws at cohomology level", kBudget3, unit_laws},
        {4, "functoriality of e", kBudget4, functoriality},
        {5, "Serre composite is the identity", kBudget5, serre},
        {6, "circle, sphere and genus values", kBudget6, theorem_values},
        {7, "three-dimensional extension verdicts", 0, three_dual},
        {8, "Groebner membership against linear algebra", 0, groebner_kernel},
    };
    std::vector<int> pick;
    for (int i = 1; i < argc; ++i) pick.push_back(std::atoi(argv[i]));

    bool all_ok = true;
    for (const auto& c : all) {
        if (!pick.empty() && std::find(pick.begin(), pick.end(), c.id) == pick.end()) continue;
        Outcome o;
        auto t0 = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.budget > 0 && secs > c.budget) o.fail("over the " + std::to_string(static_cast<int>(c.budget)) + " s budget");
        char line[256];
        std::snprintf(line, sizeof line, "criterion %d  %s  %-44s %8.2f s", c.id, o.ok ? "PASS" : "FAIL", c.name, secs);
        std::cout << line;
        if (!o.ok) std::cout << "\n    " << o.why.str();
        std::cout << std::endl;
        all_ok = all_ok && o.ok;
    }
    return all_ok ? 0 : 1;
}
