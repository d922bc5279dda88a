#include "heightlab/semistab.hpp"

#include <algorithm>
#include <numeric>

#include "heightlab/enumeration.hpp"
#include "heightlab/errors.hpp"
#include "heightlab/lp.hpp"
#include "heightlab/sampling.hpp"

namespace heightlab {

PointInP make_point(RepPtr rep, std::vector<Integer> covector) {
    require(rep != nullptr, errc::invalid_argument, "null representation");
    int dim = rep_dimension(*rep);
    require(dim >= 2, errc::degenerate_input,
            "projective space of a rank-1 module is a point");
    require(static_cast<int>(covector.size()) == dim, errc::rank_mismatch,
            "covector length differs from dim(W)");
    Integer g = content(covector);
    require(g != 0, errc::degenerate_input, "zero covector defines no point");
    PointInP p;
    p.rep = std::move(rep);
    p.was_normalized = (g != 1);
    for (auto& x : covector) x /= g;
    p.covector = std::move(covector);
    return p;
}

PointInP point_from_matrix(const RepPtr& adjoint_rep, const QMatrix& x) {
    require(adjoint_rep && adjoint_rep->kind == RepTree::Kind::adjoint,
            errc::invalid_argument,
            "line-vector entry is only defined for the adjoint representation");
    int n = adjoint_rep->group_rank;
    require(x.is_square() && x.rows() == n, errc::rank_mismatch,
            "matrix size differs from the group rank");
    require(x.trace() == 0, errc::nonzero_trace, "matrix has nonzero trace");
    auto basis = adjoint_basis(n);
    std::vector<Rational> u;
    u.reserve(basis.size());
    for (const auto& b : basis) u.push_back((x * b).trace());
    Integer den_lcm = 1;
    for (const auto& q : u)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
    std::vector<Integer> iu;
    iu.reserve(u.size());
    for (const auto& q : u) iu.push_back(Integer(q.get_num() * (den_lcm / q.get_den())));
    PointInP p = make_point(adjoint_rep, std::move(iu));
    // content division is part of the trace-form encoding here, not a
    // user-supplied non-primitive covector
    p.was_normalized = false;
    return p;
}

QMatrix matrix_from_point(const PointInP& p) {
    require(p.rep->kind == RepTree::Kind::adjoint, errc::invalid_argument,
            "trace-form preimage is only defined for the adjoint representation");
    int n = p.rep->group_rank;
    QMatrix f = adjoint_trace_gram(n);
    std::vector<Rational> u;
    u.reserve(p.covector.size());
    for (const auto& z : p.covector) u.emplace_back(z);
    auto basis = adjoint_basis(n);
    QMatrix x(n, n);
    std::vector<Rational> c = f.solve(u); // coordinates F^{-1} u
    for (size_t j = 0; j < basis.size(); ++j)
        x = x + c[j] * basis[j];
    return x;
}

OnePS make_one_ps(std::vector<long> r) {
    long s = std::accumulate(r.begin(), r.end(), 0L);
    require(s == 0, errc::invalid_argument,
            "one-parameter subgroup exponents must sum to zero");
    return OnePS{std::move(r)};
}

std::vector<std::vector<long>> active_dual_weights(const PointInP& p) {
    WeightSystem ws = rep_weights(*p.rep);
    std::vector<std::vector<long>> active;
    for (size_t i = 0; i < ws.weights.size(); ++i) {
        if (p.covector[i] == 0) continue;
        std::vector<long> w = ws.weights[i];
        for (auto& x : w) x = -x;
        active.push_back(std::move(w));
    }
    return active;
}

long hm_weight(const PointInP& p, const OnePS& lam) {
    require(static_cast<int>(lam.r.size()) == p.rep->group_rank,
            errc::rank_mismatch, "subgroup length differs from group rank");
    bool first = true;
    long m = 0;
    for (const auto& w : active_dual_weights(p)) {
        long s = 0;
        for (size_t k = 0; k < w.size(); ++k) s += w[k] * lam.r[k];
        if (first || s < m) m = s;
        first = false;
    }
    return -m;
}

TorusReport torus_semistable(const PointInP& p) {
    TorusReport rep;
    rep.active = active_dual_weights(p);
    int n = p.rep->group_rank;
    int m = static_cast<int>(rep.active.size());
    // feasibility of: c >= 0, sum c = 1, sum_i c_i w_i - (s+ - s-)*1 = 0
    QMatrix a(n + 1, m + 2);
    std::vector<Rational> b(static_cast<size_t>(n) + 1, Rational(0));
    for (int i = 0; i < m; ++i)
        for (int row = 0; row < n; ++row)
            a.at(row, i) = Rational(rep.active[static_cast<size_t>(i)]
                                              [static_cast<size_t>(row)]);
    for (int row = 0; row < n; ++row) {
        a.at(row, m) = -1;     // s+
        a.at(row, m + 1) = 1;  // s-
    }
    for (int i = 0; i < m; ++i) a.at(n, i) = 1;
    b[static_cast<size_t>(n)] = 1;

    FeasibilityResult res = solve_feasibility(a, b);
    if (res.feasible) {
        rep.semistable = true;
        rep.combination.assign(res.x.begin(), res.x.begin() + m);
        rep.line_coord = res.x[static_cast<size_t>(m)] -
                         res.x[static_cast<size_t>(m) + 1];
        return rep;
    }

    // Farkas vector y = (r_raw, tau): <r_raw, w_i> + tau <= 0 for every
    // active weight, sum(r_raw) = 0 (forced by the s+- columns), tau > 0.
    // Then -r_raw separates strictly. Scale to a primitive integer vector.
    rep.semistable = false;
    std::vector<Rational> r_raw(res.farkas.begin(), res.farkas.begin() + n);
    Integer den_lcm = 1;
    for (const auto& q : r_raw)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
    std::vector<Integer> ri;
    for (const auto& q : r_raw)
        ri.push_back(Integer(-q.get_num() * (den_lcm / q.get_den())));
    Integer g = content(ri);
    if (g > 1)
        for (auto& x : ri) x /= g;
    std::vector<long> rl;
    for (const auto& z : ri) {
        require(z.fits_slong_p(), errc::internal, "separating functional overflow");
        rl.push_back(z.get_si());
    }
    rep.separating = make_one_ps(rl);
    for (const auto& w : rep.active) {
        long s = 0;
        for (size_t k = 0; k < w.size(); ++k) s += w[k] * rep.separating.r[k];
        require(s > 0, errc::internal, "separating functional is not strict");
    }
    return rep;
}

QMatrix dual_action_matrix(const RepTree& t, const QMatrix& g) {
    return matrix_action(t, g).inverse().transpose();
}

std::vector<Integer> translate_covector(const PointInP& p, const QMatrix& g) {
    QMatrix m = dual_action_matrix(*p.rep, g);
    int dim = m.rows();
    std::vector<Integer> out;
    out.reserve(static_cast<size_t>(dim));
    for (int i = 0; i < dim; ++i) {
        Rational s = 0;
        for (int j = 0; j < dim; ++j)
            s += m.at(i, j) * Rational(p.covector[static_cast<size_t>(j)]);
        require(is_integer(s), errc::internal,
                "translated covector is not integral");
        out.push_back(s.get_num());
    }
    Integer c = content(out);
    require(c != 0, errc::internal, "translated covector vanished");
    if (c > 1)
        for (auto& x : out) x /= c;
    return out;
}

// ---------------------------------------------------------------------------
// integer lattice helpers for the deterministic nilpotent branch

namespace {

using ZMat = std::vector<std::vector<Integer>>; // row-major

ZMat zmat_from(const QMatrix& q) {
    ZMat z(static_cast<size_t>(q.rows()),
           std::vector<Integer>(static_cast<size_t>(q.cols())));
    for (int i = 0; i < q.rows(); ++i)
        for (int j = 0; j < q.cols(); ++j) {
            require(is_integer(q.at(i, j)), errc::internal, "non-integer entry");
            z[static_cast<size_t>(i)][static_cast<size_t>(j)] = q.at(i, j).get_num();
        }
    return z;
}

// Basis of { x in Z^n : A x = 0 } as columns; kernels of integer matrices
// are saturated, and the basis extends to a unimodular matrix by
// construction (columns of a unimodular transform).
std::vector<std::vector<Integer>> integer_kernel(const ZMat& a) {
    size_t m = a.size();
    size_t n = m == 0 ? 0 : a[0].size();
    ZMat b = a;
    // column ops mirrored on u (starts as identity)
    ZMat u(n, std::vector<Integer>(n));
    for (size_t i = 0; i < n; ++i) u[i][i] = 1;
    size_t fixed = 0;
    auto col_addmul = [&](size_t dst, size_t src, const Integer& q) {
        for (size_t r = 0; r < m; ++r) b[r][dst] -= q * b[r][src];
        for (size_t r = 0; r < n; ++r) u[r][dst] -= q * u[r][src];
    };
    auto col_swap = [&](size_t x, size_t y) {
        if (x == y) return;
        for (size_t r = 0; r < m; ++r) std::swap(b[r][x], b[r][y]);
        for (size_t r = 0; r < n; ++r) std::swap(u[r][x], u[r][y]);
    };
    for (size_t row = 0; row < m && fixed < n; ++row) {
        for (;;) {
            size_t jmin = n;
            for (size_t j = fixed; j < n; ++j) {
                if (b[row][j] == 0) continue;
                if (jmin == n || abs(b[row][j]) < abs(b[row][jmin])) jmin = j;
            }
            if (jmin == n) break; // row already clear
            bool others = false;
            for (size_t j = fixed; j < n; ++j) {
                if (j == jmin || b[row][j] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), b[row][j].get_mpz_t(),
                           b[row][jmin].get_mpz_t());
                col_addmul(j, jmin, q);
                if (b[row][j] != 0) others = true;
            }
            if (!others) {
                col_swap(fixed, jmin);
                ++fixed;
                break;
            }
        }
    }
    std::vector<std::vector<Integer>> kernel;
    for (size_t j = fixed; j < n; ++j) {
        std::vector<Integer> col(n);
        for (size_t r = 0; r < n; ++r) col[r] = u[r][j];
        kernel.push_back(std::move(col));
    }
    return kernel;
}

// Given a saturated full-column-rank integer matrix P (n x d), returns
// columns completing it to a unimodular n x n matrix: row-reduce P to
// [T; 0] with unimodular row ops V, |det T| = 1; the completion is the
// trailing columns of V^{-1}.
ZMat complete_saturated(const ZMat& p) {
    size_t n = p.size();
    size_t d = n == 0 ? 0 : p[0].size();
    ZMat w = p;
    ZMat vinv(n, std::vector<Integer>(n));
    for (size_t i = 0; i < n; ++i) vinv[i][i] = 1;
    // row op: row_j -= q * row_i  =>  vinv col_i += q * col_j
    auto row_addmul = [&](size_t j, size_t i, const Integer& q) {
        for (size_t c = 0; c < d; ++c) w[j][c] -= q * w[i][c];
        for (size_t r = 0; r < n; ++r) vinv[r][i] += q * vinv[r][j];
    };
    auto row_swap = [&](size_t x, size_t y) {
        if (x == y) return;
        std::swap(w[x], w[y]);
        for (size_t r = 0; r < n; ++r) std::swap(vinv[r][x], vinv[r][y]);
    };
    size_t top = 0;
    for (size_t col = 0; col < d; ++col) {
        for (;;) {
            size_t imin = n;
            for (size_t i = top; i < n; ++i) {
                if (w[i][col] == 0) continue;
                if (imin == n || abs(w[i][col]) < abs(w[imin][col])) imin = i;
            }
            require(imin != n, errc::internal, "matrix is not full column rank");
            bool others = false;
            for (size_t i = top; i < n; ++i) {
                if (i == imin || w[i][col] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), w[i][col].get_mpz_t(),
                           w[imin][col].get_mpz_t());
                row_addmul(i, imin, q);
                if (w[i][col] != 0) others = true;
            }
            if (!others) {
                row_swap(top, imin);
                ++top;
                break;
            }
        }
    }
    // saturation: the pivots must be units
    for (size_t c = 0; c < d; ++c)
        require(abs(w[c][c]) == 1, errc::internal,
                "basis is not saturated");
    ZMat out(n, std::vector<Integer>(n - d));
    for (size_t r = 0; r < n; ++r)
        for (size_t c = d; c < n; ++c) out[r][c - d] = vinv[r][c];
    return out;
}

// Columns forming an SL_N(Z) matrix adapted to the kernel filtration of a
// nilpotent integer matrix y: the first blocks span ker(y), ker(y^2), ...
QMatrix nilpotent_adapted_basis(const QMatrix& y_int) {
    int n = y_int.rows();
    ZMat y = zmat_from(y_int);
    // iterate powers until full kernel
    std::vector<std::vector<std::vector<Integer>>> kernels;
    QMatrix pw = y_int;
    for (int i = 1; i <= n; ++i) {
        auto k = integer_kernel(zmat_from(pw));
        kernels.push_back(k);
        if (static_cast<int>(k.size()) == n) break;
        pw = pw * y_int;
    }
    require(!kernels.empty() &&
                static_cast<int>(kernels.back().size()) == n,
            errc::invalid_argument, "matrix is not nilpotent");

    // adapted basis, one filtration level at a time
    ZMat basis; // n x (accumulated)
    basis.assign(static_cast<size_t>(n), {});
    size_t have = 0;
    for (const auto& k : kernels) {
        size_t dk = k.size();
        if (dk == have) continue;
        if (have == 0) {
            for (size_t c = 0; c < dk; ++c)
                for (size_t r = 0; r < static_cast<size_t>(n); ++r)
                    basis[r].push_back(k[c][r]);
            have = dk;
            continue;
        }
        // coordinates of the current basis inside this kernel
        QMatrix kq(n, static_cast<int>(dk));
        for (size_t c = 0; c < dk; ++c)
            for (int r = 0; r < n; ++r)
                kq.at(r, static_cast<int>(c)) = Rational(k[c][static_cast<size_t>(r)]);
        QMatrix pq(n, static_cast<int>(have));
        for (size_t c = 0; c < have; ++c)
            for (int r = 0; r < n; ++r)
                pq.at(r, static_cast<int>(c)) = Rational(basis[static_cast<size_t>(r)][c]);
        // solve kq * w = pq using an invertible row selection
        std::vector<int> rows;
        {
            // greedy row echelon over Q to find dk independent rows
            QMatrix tmp = kq;
            std::vector<int> all;
            for (int r = 0; r < n; ++r) all.push_back(r);
            std::vector<int> chosen;
            std::vector<bool> used(static_cast<size_t>(n), false);
            for (size_t c = 0; c < dk; ++c) {
                for (int r = 0; r < n; ++r) {
                    if (used[static_cast<size_t>(r)]) continue;
                    std::vector<int> cand = chosen;
                    cand.push_back(r);
                    std::vector<int> cols;
                    for (size_t cc = 0; cc <= c; ++cc) cols.push_back(static_cast<int>(cc));
                    if (kq.submatrix(cand, cols).det() != 0) {
                        chosen.push_back(r);
                        used[static_cast<size_t>(r)] = true;
                        break;
                    }
                }
            }
            require(chosen.size() == dk, errc::internal, "kernel basis degenerate");
            rows = chosen;
        }
        std::vector<int> cols;
        for (size_t c = 0; c < dk; ++c) cols.push_back(static_cast<int>(c));
        QMatrix sq = kq.submatrix(rows, cols).inverse();
        std::vector<int> prows;
        for (int r : rows) prows.push_back(r);
        std::vector<int> pcols;
        for (size_t c = 0; c < have; ++c) pcols.push_back(static_cast<int>(c));
        QMatrix w = sq * pq.submatrix(prows, pcols);
        require(kq * w == pq, errc::internal, "filtration inclusion failed");
        ZMat wz = zmat_from(w);
        ZMat ext = complete_saturated(wz); // dk x (dk-have)
        // new columns = kq * ext
        for (size_t c = 0; c + have < dk; ++c) {
            for (int r = 0; r < n; ++r) {
                Integer s = 0;
                for (size_t t2 = 0; t2 < dk; ++t2)
                    s += Integer(kq.at(r, static_cast<int>(t2)).get_num()) *
                         ext[t2][c];
                basis[static_cast<size_t>(r)].push_back(s);
            }
        }
        have = dk;
    }
    QMatrix s(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            s.at(r, c) = Rational(basis[static_cast<size_t>(r)][static_cast<size_t>(c)]);
    Rational det = s.det();
    require(det == 1 || det == -1, errc::internal, "adapted basis not unimodular");
    if (det == -1)
        for (int r = 0; r < n; ++r) s.at(r, n - 1) = -s.at(r, n - 1);
    return s;
}

} // namespace

bool adjoint_semistable(const QMatrix& x) {
    require(x.is_square(), errc::invalid_argument, "matrix must be square");
    require(x.trace() == 0, errc::nonzero_trace, "matrix has nonzero trace");
    bool zero = true;
    for (int i = 0; i < x.rows() && zero; ++i)
        for (int j = 0; j < x.cols(); ++j)
            if (x.at(i, j) != 0) { zero = false; break; }
    require(!zero, errc::degenerate_input, "zero matrix defines no point");
    auto c = x.char_poly();
    for (int i = 0; i < x.rows(); ++i)
        if (c[static_cast<size_t>(i)] != 0) return true; // not t^N
    return false;
}

std::optional<InstabilityCertificate> instability_search(const PointInP& p,
                                                         int budget,
                                                         std::uint64_t seed) {
    auto try_translate = [&](const QMatrix& g) -> std::optional<InstabilityCertificate> {
        std::vector<Integer> u = translate_covector(p, g);
        PointInP q;
        q.rep = p.rep;
        q.covector = u;
        TorusReport tr = torus_semistable(q);
        if (tr.semistable) return std::nullopt;
        InstabilityCertificate cert{g, tr.separating, std::move(u)};
        require(verify_instability(p, cert), errc::internal,
                "instability certificate failed re-verification");
        return cert;
    };

    int n = p.rep->group_rank;
    if (auto c = try_translate(QMatrix::identity(n))) return c;

    // deterministic branch: adjoint nilpotent lines are driven to
    // triangular form by a basis adapted to the kernel filtration
    if (p.rep->kind == RepTree::Kind::adjoint) {
        QMatrix x = matrix_from_point(p);
        Integer den_lcm = 1;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                        x.at(i, j).get_den_mpz_t());
        QMatrix y = Rational(den_lcm) * x;
        auto cp = y.char_poly();
        bool nilpotent = true;
        for (int i = 0; i < n; ++i)
            if (cp[static_cast<size_t>(i)] != 0) { nilpotent = false; break; }
        if (nilpotent) {
            QMatrix s = nilpotent_adapted_basis(y);
            if (auto c = try_translate(s.inverse())) return c;
        }
    }

    Rng rng(seed);
    for (int it = 0; it < budget; ++it) {
        int factors = 2 + it / 8;
        QMatrix g = random_sl_matrix(rng, n, factors);
        if (auto c = try_translate(g)) return c;
    }
    return std::nullopt; // inconclusive
}

bool verify_instability(const PointInP& p, const InstabilityCertificate& c) {
    // g must be integral with determinant one
    for (int i = 0; i < c.g.rows(); ++i)
        for (int j = 0; j < c.g.cols(); ++j)
            if (!is_integer(c.g.at(i, j))) return false;
    if (c.g.det() != 1) return false;
    std::vector<Integer> u = translate_covector(p, c.g);
    if (u != c.translated) {
        // covectors are projective; allow a global sign
        std::vector<Integer> neg = u;
        for (auto& z : neg) z = -z;
        if (neg != c.translated) return false;
    }
    PointInP q;
    q.rep = p.rep;
    q.covector = u;
    for (const auto& w : active_dual_weights(q)) {
        long s = 0;
        for (size_t k = 0; k < w.size(); ++k) s += w[k] * c.lambda.r[k];
        if (s <= 0) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// invariants

namespace {

// det(m) for a small matrix of polynomials, by Laplace expansion.
MPoly mpoly_det(const std::vector<std::vector<MPoly>>& m) {
    size_t n = m.size();
    if (n == 1) return m[0][0];
    MPoly acc(m[0][0].nvars());
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<MPoly>> minor;
        for (size_t r = 1; r < n; ++r) {
            std::vector<MPoly> row;
            for (size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        MPoly term = m[0][j] * mpoly_det(minor);
        if (j % 2 == 0)
            acc = acc + term;
        else
            acc = acc - term;
    }
    return acc;
}

} // namespace

InvariantGeneratorSet adjoint_invariants(int n) {
    require(n >= 2, errc::invalid_argument, "adjoint invariants need N >= 2");
    int nvars = n * n - 1;
    auto basis = adjoint_basis(n);
    QMatrix finv = adjoint_trace_gram(n).inverse();
    // symbolic trace-zero matrix X(u) = sum_j (F^{-1} u)_j b_j
    std::vector<std::vector<MPoly>> x(
        static_cast<size_t>(n),
        std::vector<MPoly>(static_cast<size_t>(n), MPoly(nvars)));
    for (int j = 0; j < nvars; ++j)
        for (int m = 0; m < nvars; ++m) {
            if (finv.at(j, m) == 0) continue;
            MPoly v = finv.at(j, m) * MPoly::variable(nvars, m);
            const QMatrix& bj = basis[static_cast<size_t>(j)];
            for (int r = 0; r < n; ++r)
                for (int c2 = 0; c2 < n; ++c2)
                    if (bj.at(r, c2) != 0)
                        x[static_cast<size_t>(r)][static_cast<size_t>(c2)] =
                            x[static_cast<size_t>(r)][static_cast<size_t>(c2)] +
                            bj.at(r, c2) * v;
        }

    InvariantGeneratorSet gens;
    gens.nvars = nvars;
    for (int k = 2; k <= n; ++k) {
        // coefficient of t^{N-k} in det(tI - X): (-1)^k * (sum of principal
        // k x k minors)
        MPoly ck(nvars);
        for (const auto& sub : subsets_lex(n, k)) {
            std::vector<std::vector<MPoly>> minor;
            for (int r : sub) {
                std::vector<MPoly> row;
                for (int c2 : sub)
                    row.push_back(x[static_cast<size_t>(r)][static_cast<size_t>(c2)]);
                minor.push_back(std::move(row));
            }
            ck = ck + mpoly_det(minor);
        }
        if (k % 2 != 0) ck = Rational(-1) * ck;
        MPoly prim = ck.primitive_integer();
        require(prim.is_homogeneous() && prim.total_degree() == k, errc::internal,
                "invariant generator is not homogeneous of the expected degree");
        gens.gens.push_back(InvariantGenerator{std::move(prim), k});
    }
    return gens;
}

std::optional<std::pair<int, Rational>> invariant_certificate(
    const PointInP& p, const InvariantGeneratorSet& gens,
    std::uint64_t sanity_seed, int sanity_samples) {
    int dim = rep_dimension(*p.rep);
    require(gens.nvars == dim, errc::rank_mismatch,
            "generator variable count differs from dim(W)");
    for (const auto& g : gens.gens) {
        require(g.poly.is_homogeneous(), errc::invalid_argument,
                "generators must be homogeneous");
        require(g.poly.total_degree() == g.degree, errc::invalid_argument,
                "generator degree mismatch");
    }

    // spot-check invariance under random special-linear integer elements
    Rng rng(sanity_seed);
    int n = p.rep->group_rank;
    for (int s = 0; s < sanity_samples; ++s) {
        QMatrix g = random_sl_matrix(rng, n, 3 + s);
        QMatrix dual = dual_action_matrix(*p.rep, g);
        std::vector<Rational> v;
        for (int i = 0; i < dim; ++i) v.emplace_back(rng.uniform(-3, 3));
        std::vector<Rational> gv(static_cast<size_t>(dim), Rational(0));
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                gv[static_cast<size_t>(i)] += dual.at(i, j) * v[static_cast<size_t>(j)];
        for (const auto& gen : gens.gens)
            if (gen.poly.eval(gv) != gen.poly.eval(v))
                fail(errc::not_invariant,
                     "generator is not invariant under the special-linear action");
    }

    std::vector<Rational> u;
    for (const auto& z : p.covector) u.emplace_back(z);
    for (size_t i = 0; i < gens.gens.size(); ++i) {
        Rational val = gens.gens[i].poly.eval(u);
        if (val != 0) return std::make_pair(static_cast<int>(i), val);
    }
    return std::nullopt;
}

} // namespace heightlab
