#include "lgmf/mf.hpp"

#include <algorithm>
#include <bit>
#include <deque>

namespace lgmf {

PolyMatrix MatrixFactorization::full() const
{
    size_t n = rank();
    PolyMatrix D(table, n, n);
    for (size_t i = 0; i < r1; ++i)
        for (size_t j = 0; j < r0; ++j) D(r0 + i, j) = d0(i, j);
    for (size_t i = 0; i < r0; ++i)
        for (size_t j = 0; j < r1; ++j) D(i, r0 + j) = d1(i, j);
    return D;
}

MatrixFactorization MatrixFactorization::from_full(const VarTablePtr& table, const Polynomial& V, size_t r0,
                                                   size_t r1, const PolyMatrix& D)
{
    MatrixFactorization M;
    M.table = table;
    M.potential = V;
    M.r0 = r0;
    M.r1 = r1;
    M.d0 = PolyMatrix(table, r1, r0);
    M.d1 = PolyMatrix(table, r0, r1);
    for (size_t i = 0; i < r1; ++i)
        for (size_t j = 0; j < r0; ++j) M.d0(i, j) = D(r0 + i, j);
    for (size_t i = 0; i < r0; ++i)
        for (size_t j = 0; j < r1; ++j) M.d1(i, j) = D(i, r0 + j);
    return M;
}

MFVerdict verify_mf(const MatrixFactorization& M)
{
    MFVerdict v;
    auto check = [&](const PolyMatrix& prod, int block) {
        for (size_t i = 0; i < prod.rows(); ++i)
            for (size_t j = 0; j < prod.cols(); ++j) {
                Polynomial want = i == j ? M.potential : Polynomial(M.table);
                if (prod(i, j) == want) continue;
                v.ok = false;
                v.block = block;
                v.row = i + 1;
                v.col = j + 1;
                v.detail = std::string(block == 0 ? "d1*d0" : "d0*d1") + " entry (" + std::to_string(i + 1) + "," +
                           std::to_string(j + 1) + ") is " + prod(i, j).str() + ", expected " + want.str();
                return false;
            }
        return true;
    };
    if (M.d0.rows() != M.r1 || M.d0.cols() != M.r0 || M.d1.rows() != M.r0 || M.d1.cols() != M.r1) {
        v.ok = false;
        v.detail = "block shapes do not match ranks";
        return v;
    }
    if (check(M.d1 * M.d0, 0)) check(M.d0 * M.d1, 1);
    return v;
}

MatrixFactorization rank_one_mf(const Polynomial& p, const Polynomial& q)
{
    auto table = p.table() ? p.table() : q.table();
    MatrixFactorization M;
    M.table = table;
    M.potential = p * q;
    M.r0 = M.r1 = 1;
    M.d0 = PolyMatrix(table, 1, 1);
    M.d1 = PolyMatrix(table, 1, 1);
    M.d0(0, 0) = p;
    M.d1(0, 0) = q;
    return M;
}

MatrixFactorization koszul_mf(const std::vector<std::pair<Polynomial, Polynomial>>& pairs)
{
    if (pairs.empty()) throw std::invalid_argument("koszul factorization needs at least one pair");
    MatrixFactorization M = rank_one_mf(pairs[0].first, pairs[0].second);
    for (size_t i = 1; i < pairs.size(); ++i) M = tensor_mf(M, rank_one_mf(pairs[i].first, pairs[i].second));
    return M;
}

MatrixFactorization trivial_mf(const VarTablePtr& table)
{
    MatrixFactorization M;
    M.table = table;
    M.potential = Polynomial(table);
    M.r0 = 1;
    M.r1 = 0;
    M.d0 = PolyMatrix(table, 0, 1);
    M.d1 = PolyMatrix(table, 1, 0);
    M.degenerate = true;
    return M;
}

std::string primed(const std::string& name) { return name + "'"; }

std::vector<unsigned> theta_basis(size_t k)
{
    std::vector<unsigned> out;
    for (int par = 0; par < 2; ++par)
        for (unsigned s = 0; s < (1u << k); ++s)
            if (std::popcount(s) % 2 == par) out.push_back(s);
    return out;
}

MatrixFactorization unit_mf(const Polynomial& V, const std::vector<std::string>& a)
{
    const auto& t0 = V.table();
    if (!t0) throw std::invalid_argument("potential without variable table");
    for (const auto& n : a) t0->index_of(n);
    std::vector<std::string> ap;
    for (const auto& n : a) ap.push_back(primed(n));
    auto names = t0->names();
    auto weights = t0->weights();
    for (size_t i = 0; i < a.size(); ++i) {
        if (auto j = t0->find(ap[i])) {
            bool used = false;
            for (const auto& [e, c] : V.terms())
                if (e[*j]) used = true;
            if (used) throw std::invalid_argument("primed variable '" + ap[i] + "' clashes with a variable of V");
            continue;
        }
        names.push_back(ap[i]);
        weights.push_back(t0->weight(t0->index_of(a[i])));
    }
    auto table = make_table(names, weights);
    Polynomial W = V.rebase(table);
    if (a.empty()) return trivial_mf(table);
    size_t k = a.size();
    std::vector<Polynomial> p;
    for (size_t i = 0; i < k; ++i) p.push_back(difference_quotient(W, a, ap, i));
    auto basis = theta_basis(k);
    size_t n = basis.size();
    std::vector<size_t> pos(size_t{1} << k);
    for (size_t i = 0; i < n; ++i) pos[basis[i]] = i;
    PolyMatrix D(table, n, n);
    for (size_t col = 0; col < n; ++col) {
        unsigned S = basis[col];
        for (size_t i = 0; i < k; ++i) {
            unsigned bit = 1u << i;
            int below = std::popcount(S & (bit - 1));
            Rational sign = below % 2 ? -1 : 1;
            if (S & bit) {
                Polynomial diff = Polynomial::variable(table, ap[i]) - Polynomial::variable(table, a[i]);
                D(pos[S & ~bit], col) += diff * sign;
            } else {
                D(pos[S | bit], col) += p[i] * sign;
            }
        }
    }
    Polynomial pot = prime_from(W, a, ap, 0) - W;
    return MatrixFactorization::from_full(table, pot, n / 2, n / 2, D);
}

std::vector<std::pair<size_t, size_t>> tensor_basis(const MatrixFactorization& M, const MatrixFactorization& N)
{
    std::vector<std::pair<size_t, size_t>> even, odd;
    for (size_t i = 0; i < M.rank(); ++i)
        for (size_t j = 0; j < N.rank(); ++j)
            ((M.parity(i) + N.parity(j)) == Parity::Even ? even : odd).emplace_back(i, j);
    even.insert(even.end(), odd.begin(), odd.end());
    return even;
}

MatrixFactorization tensor_mf(const MatrixFactorization& M, const MatrixFactorization& N)
{
    if (!same_table(M.table, N.table)) throw TableMismatch("tensor of factorizations over different rings");
    auto basis = tensor_basis(M, N);
    size_t n = basis.size();
    size_t r0 = 0;
    for (const auto& [i, j] : basis)
        if ((M.parity(i) + N.parity(j)) == Parity::Even) ++r0;
    std::map<std::pair<size_t, size_t>, size_t> pos;
    for (size_t k = 0; k < n; ++k) pos[basis[k]] = k;
    PolyMatrix DM = M.full(), DN = N.full();
    PolyMatrix D(M.table, n, n);
    for (size_t col = 0; col < n; ++col) {
        auto [i, j] = basis[col];
        for (size_t i2 = 0; i2 < M.rank(); ++i2)
            if (!DM(i2, i).is_zero()) D(pos[{i2, j}], col) += DM(i2, i);
        Rational sign = M.parity(i) == Parity::Odd ? -1 : 1;
        for (size_t j2 = 0; j2 < N.rank(); ++j2)
            if (!DN(j2, j).is_zero()) D(pos[{i, j2}], col) += DN(j2, j) * sign;
    }
    auto T = MatrixFactorization::from_full(M.table, M.potential + N.potential, r0, n - r0, D);
    T.degenerate = M.degenerate && N.degenerate;
    return T;
}

MatrixFactorization dual_mf(const MatrixFactorization& M)
{
    MatrixFactorization D;
    D.table = M.table;
    D.potential = -M.potential;
    D.r0 = M.r0;
    D.r1 = M.r1;
    D.d0 = M.d1.transpose();
    D.d1 = -M.d0.transpose();
    D.degenerate = M.degenerate;
    return D;
}

MatrixFactorization rebase_mf(const MatrixFactorization& M, const VarTablePtr& table,
                              const std::map<std::string, std::string>& rename)
{
    MatrixFactorization R = M;
    R.table = table;
    R.potential = M.potential.rebase(table, rename);
    auto mv = [&](const Polynomial& p) { return p.rebase(table, rename); };
    R.d0 = PolyMatrix(table, M.r1, M.r0);
    R.d1 = PolyMatrix(table, M.r0, M.r1);
    for (size_t i = 0; i < M.r1; ++i)
        for (size_t j = 0; j < M.r0; ++j) R.d0(i, j) = mv(M.d0(i, j));
    for (size_t i = 0; i < M.r0; ++i)
        for (size_t j = 0; j < M.r1; ++j) R.d1(i, j) = mv(M.d1(i, j));
    return R;
}

int required_scale(const Polynomial& V)
{
    if (V.is_zero()) return 1;
    return V.weighted_degree() % 2 ? 2 : 1;
}

std::optional<MFGrading> infer_grading(const MatrixFactorization& M, int scale, std::optional<int> step)
{
    MFGrading g;
    g.scale = scale > 0 ? scale : required_scale(M.potential);
    if (step) g.step = *step;
    else if (!M.potential.is_zero()) {
        if (!M.potential.is_homogeneous()) return std::nullopt;
        int w = M.potential.weighted_degree() * g.scale;
        if (w % 2) return std::nullopt;
        g.step = w / 2;
    }
    PolyMatrix D = M.full();
    size_t n = M.rank();
    std::vector<std::optional<int>> t(n);
    for (size_t root = 0; root < n; ++root) {
        if (t[root]) continue;
        t[root] = 0;
        std::deque<size_t> queue{root};
        while (!queue.empty()) {
            size_t u = queue.front();
            queue.pop_front();
            for (size_t v = 0; v < n; ++v) {
                // Entry D(v, u): e_u -> e_v, and D(u, v): e_v -> e_u.
                for (int dir = 0; dir < 2; ++dir) {
                    const Polynomial& e = dir == 0 ? D(v, u) : D(u, v);
                    if (e.is_zero()) continue;
                    if (!e.is_homogeneous()) return std::nullopt;
                    int w = e.weighted_degree() * g.scale;
                    int tv = dir == 0 ? *t[u] + g.step - w : *t[u] - g.step + w;
                    if (!t[v]) {
                        t[v] = tv;
                        queue.push_back(v);
                    } else if (*t[v] != tv) {
                        return std::nullopt;
                    }
                }
            }
        }
    }
    for (auto& x : t) g.basis_weights.push_back(*x);
    return g;
}

SemifreeCDGA polynomial_cdga(const VarTable& table, int scale)
{
    std::vector<int> w = table.weights();
    for (auto& x : w) x *= scale;
    return SemifreeCDGA::polynomial(table.names(), w);
}

SemifreeModule::Vector HomComplex::to_vector(const PolyMatrix& phi) const
{
    auto v = module.zero_vector();
    size_t rm = source.rank();
    for (size_t T = 0; T < target.rank(); ++T)
        for (size_t S = 0; S < rm; ++S)
            if (!phi(T, S).is_zero()) v[T * rm + S] = GradedElement::from_polynomial(module.base().signature(), phi(T, S));
    return v;
}

PolyMatrix HomComplex::to_matrix(const SemifreeModule::Vector& v) const
{
    size_t rm = source.rank();
    PolyMatrix phi(source.table, target.rank(), rm);
    for (size_t T = 0; T < target.rank(); ++T)
        for (size_t S = 0; S < rm; ++S) phi(T, S) = v[T * rm + S].to_polynomial().rebase(source.table);
    return phi;
}

HomComplex hom_complex(const MatrixFactorization& M, const MatrixFactorization& N, int scale)
{
    if (!same_table(M.table, N.table)) throw TableMismatch("hom complex over different rings");
    if (!(M.potential == N.potential)) throw std::invalid_argument("hom complex needs equal potentials");
    HomComplex H;
    H.source = M;
    H.target = N;
    H.scale = scale > 0 ? scale : required_scale(M.potential);
    auto gm = infer_grading(M, H.scale);
    std::optional<MFGrading> gn;
    if (gm) gn = infer_grading(N, H.scale, gm->step);
    if (gm && gn) {
        H.step = gm->step;
        H.source_weights = gm->basis_weights;
        H.target_weights = gn->basis_weights;
    } else {
        H.source_weights.assign(M.rank(), 0);
        H.target_weights.assign(N.rank(), 0);
    }
    auto base = polynomial_cdga(*M.table, H.scale);
    const auto& sig = base.signature();
    size_t rm = M.rank(), rn = N.rank(), n = rm * rn;
    std::vector<ModuleGen> gens;
    for (size_t T = 0; T < rn; ++T)
        for (size_t S = 0; S < rm; ++S)
            gens.push_back({"E" + std::to_string(T) + "_" + std::to_string(S), N.parity(T) + M.parity(S),
                            H.target_weights[T] - H.source_weights[S]});
    std::vector<GradedElement> D(n * n, GradedElement(sig));
    PolyMatrix DM = M.full(), DN = N.full();
    for (size_t T = 0; T < rn; ++T)
        for (size_t S = 0; S < rm; ++S) {
            size_t j = T * rm + S;
            for (size_t T2 = 0; T2 < rn; ++T2)
                if (!DN(T2, T).is_zero()) D[(T2 * rm + S) * n + j] += GradedElement::from_polynomial(sig, DN(T2, T));
            Rational sign = (N.parity(T) + M.parity(S)) == Parity::Odd ? 1 : -1;
            for (size_t S2 = 0; S2 < rm; ++S2)
                if (!DM(S, S2).is_zero()) D[(T * rm + S2) * n + j] += GradedElement::from_polynomial(sig, DM(S, S2)) * sign;
        }
    H.module = SemifreeModule(base, std::move(gens), std::move(D));
    return H;
}

HomComplex end_complex(const MatrixFactorization& M, int scale) { return hom_complex(M, M, scale); }

PolyMatrix hom_delta(const MatrixFactorization& M, const MatrixFactorization& N, const PolyMatrix& phi, Parity p)
{
    PolyMatrix out = N.full() * phi;
    PolyMatrix right = phi * M.full();
    return p == Parity::Even ? out - right : out + right;
}

PolyMatrix lambda(const MatrixFactorization& M, std::string_view t) { return partial_derivative(M.full(), t); }

WitnessVerdict conjugation_witness(const PolyMatrix& P, const PolyMatrix& d1, const PolyMatrix& d2, std::string_view t)
{
    WitnessVerdict v;
    if (!(P * d1 == d2 * P)) {
        v.detail = "P d1 != d2 P";
        return v;
    }
    PolyMatrix Q = partial_derivative(P, t);
    PolyMatrix l1 = partial_derivative(d1, t), l2 = partial_derivative(d2, t);
    v.ok = (P * l1 - l2 * P) == (d2 * Q - Q * d1);
    v.detail = v.ok ? "identity holds" : "identity fails";
    v.homotopy = Q;
    return v;
}

EndAsTensor end_as_tensor(const MatrixFactorization& M)
{
    EndAsTensor out;
    auto dual = dual_mf(M);
    out.tensor = tensor_mf(M, dual);
    auto basis = tensor_basis(M, dual);
    size_t r = M.rank(), n = r * r;
    out.iso = PolyMatrix(M.table, n, n);
    for (size_t c = 0; c < n; ++c) {
        auto [i, j] = basis[c];
        out.iso(i * r + j, c) = Polynomial(M.table, M.parity(j) == Parity::Odd ? -1 : 1);
    }
    // delta on End in the generator basis i*r + j.
    PolyMatrix DM = M.full();
    PolyMatrix DE(M.table, n, n);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) {
            size_t col = i * r + j;
            for (size_t i2 = 0; i2 < r; ++i2) DE(i2 * r + j, col) += DM(i2, i);
            Rational sign = (M.parity(i) + M.parity(j)) == Parity::Odd ? 1 : -1;
            for (size_t j2 = 0; j2 < r; ++j2) DE(i * r + j2, col) += DM(j, j2) * sign;
        }
    PolyMatrix DT = out.tensor.full();
    out.chain_map = out.iso * DT == DE * out.iso;
    PolyMatrix ev(M.table, 1, n);
    for (size_t c = 0; c < n; ++c)
        if (basis[c].first == basis[c].second) ev(0, c) = Polynomial(M.table, 1);
    out.evaluation_chain_map = (ev * DT).is_zero();
    return out;
}

}  // namespace lgmf
