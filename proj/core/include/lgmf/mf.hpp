#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lgmf/graded.hpp"
#include "lgmf/poly.hpp"

namespace lgmf {

/// Free Z/2-graded module with even basis first; d0 maps even to odd
/// (r1 x r0), d1 maps odd to even (r0 x r1).
struct MatrixFactorization {
    VarTablePtr table;
    Polynomial potential;
    size_t r0 = 0;
    size_t r1 = 0;
    PolyMatrix d0;
    PolyMatrix d1;
    bool degenerate = false;

    size_t rank() const { return r0 + r1; }
    Parity parity(size_t i) const { return i < r0 ? Parity::Even : Parity::Odd; }

    /// Square odd matrix [[0, d1], [d0, 0]]; column j is d(e_j).
    PolyMatrix full() const;

    static MatrixFactorization from_full(const VarTablePtr& table, const Polynomial& V, size_t r0, size_t r1,
                                         const PolyMatrix& D);
};

struct MFVerdict {
    bool ok = true;
    int block = 0;   // 0: d1*d0 on the even part, 1: d0*d1 on the odd part
    size_t row = 0;  // 1-based
    size_t col = 0;
    std::string detail;
};

MFVerdict verify_mf(const MatrixFactorization& M);

MatrixFactorization rank_one_mf(const Polynomial& p, const Polynomial& q);

/// Tensor product of the rank (1|1) factorizations (p_i, q_i).
MatrixFactorization koszul_mf(const std::vector<std::pair<Polynomial, Polynomial>>& pairs);

/// Rank (1|0) zero factorization of 0, the monoidal unit.
MatrixFactorization trivial_mf(const VarTablePtr& table);

std::string primed(const std::string& name);

/// I_{(a,V)} over K[x y a a'] with carrier Lambda(theta_1..theta_k). Returns
/// the factorization on a table extending V's by the primed names.
MatrixFactorization unit_mf(const Polynomial& V, const std::vector<std::string>& a);

/// Basis index order of the theta monomials in unit_mf: even subsets, then
/// odd subsets, each by increasing bitmask.
std::vector<unsigned> theta_basis(size_t k);

/// Basis (i, j) ordered lexicographically, then split even-first.
MatrixFactorization tensor_mf(const MatrixFactorization& M, const MatrixFactorization& N);
std::vector<std::pair<size_t, size_t>> tensor_basis(const MatrixFactorization& M, const MatrixFactorization& N);

MatrixFactorization dual_mf(const MatrixFactorization& M);

/// Moves a factorization to a larger table by variable name.
MatrixFactorization rebase_mf(const MatrixFactorization& M, const VarTablePtr& table,
                              const std::map<std::string, std::string>& rename = {});

/// Weights making every entry homogeneous: d(e_j) has weight t_j + step.
struct MFGrading {
    int scale = 1;
    int step = 0;
    std::vector<int> basis_weights;
    bool homogeneous = true;
};

std::optional<MFGrading> infer_grading(const MatrixFactorization& M, int scale = 0, std::optional<int> step = {});

/// Weight scale that makes half the potential's weight integral.
int required_scale(const Polynomial& V);

/// Hom(M, N) as a free module over the polynomial ring; generator T*rank(M)+S
/// is the matrix unit e_T e_S^*.
struct HomComplex {
    MatrixFactorization source;
    MatrixFactorization target;
    SemifreeModule module;
    int scale = 1;
    int step = 0;
    std::vector<int> source_weights;
    std::vector<int> target_weights;

    SemifreeModule::Vector to_vector(const PolyMatrix& phi) const;
    PolyMatrix to_matrix(const SemifreeModule::Vector& v) const;
};

/// Ring of the table as a cdga with zero differential, weights scaled.
SemifreeCDGA polynomial_cdga(const VarTable& table, int scale = 1);

HomComplex hom_complex(const MatrixFactorization& M, const MatrixFactorization& N, int scale = 0);
HomComplex end_complex(const MatrixFactorization& M, int scale = 0);

/// delta(phi) = d_N phi - (-1)^|phi| phi d_M for phi of the given parity.
PolyMatrix hom_delta(const MatrixFactorization& M, const MatrixFactorization& N, const PolyMatrix& phi, Parity p);

/// Entrywise derivative of the full differential.
PolyMatrix lambda(const MatrixFactorization& M, std::string_view t);

struct WitnessVerdict {
    bool ok = false;
    std::string detail;
    PolyMatrix homotopy;  // d_t P
};

/// For P d1 = d2 P, checks P lambda_1 - lambda_2 P = d2 (d_t P) - (d_t P) d1.
WitnessVerdict conjugation_witness(const PolyMatrix& P, const PolyMatrix& d1, const PolyMatrix& d2, std::string_view t);

/// Sign e_i (x) e_j^* -> (-1)^|j| e_i e_j^* identifying M (x) M^dual with End(M).
struct EndAsTensor {
    MatrixFactorization tensor;
    PolyMatrix iso;  // columns: tensor basis, rows: End generators
    bool chain_map = false;
    bool evaluation_chain_map = false;
};

EndAsTensor end_as_tensor(const MatrixFactorization& M);

}  // namespace lgmf
