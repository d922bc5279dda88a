// Independent oracles used by the test and acceptance suites. These stay
// deliberately separate from the library implementations they check:
// hull membership is decided by subset enumeration over a local Gaussian
// solver rather than the simplex, the Grassmannian degree comes from the
// factorial staircase formula rather than interpolation, and affine
// half-log comparisons are re-decided in 200-digit floating point.

#pragma once

#include <mpfr.h>

#include <optional>
#include <vector>

#include "heightlab/loglin.hpp"
#include "heightlab/rational.hpp"

namespace oracles {

using heightlab::Integer;
using heightlab::Rational;

// Solves a (possibly rectangular) exact linear system rows x cols by plain
// Gauss elimination; returns a solution when the system is consistent and
// uniquely determined on the used columns.
inline std::optional<std::vector<Rational>> gauss_solve(
    std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    size_t rows = a.size();
    size_t cols = rows == 0 ? 0 : a[0].size();
    std::vector<int> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        Rational inv = 1 / a[r][c];
        for (size_t k = c; k < cols; ++k) a[r][k] *= inv;
        b[r] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
            b[i] -= f * b[r];
        }
        pivot_col.push_back(static_cast<int>(c));
        ++r;
    }
    for (size_t i = r; i < rows; ++i)
        if (b[i] != 0) return std::nullopt; // inconsistent
    if (r < cols) return std::nullopt;      // underdetermined
    std::vector<Rational> x(cols);
    for (size_t i = 0; i < r; ++i) x[static_cast<size_t>(pivot_col[i])] = b[i];
    return x;
}

// 0 in conv{points} with the points taken modulo the diagonal line: is
// there a convex combination with sum_i c_i p_i on R*(1,..,1)? Decided by
// enumerating support subsets of size <= dim+1 (Caratheodory).
inline bool hull_meets_diagonal_bruteforce(
    const std::vector<std::vector<long>>& points) {
    if (points.empty()) return false;
    size_t dim = points[0].size();
    size_t m = points.size();
    size_t max_support = dim + 1;
    std::vector<int> idx;
    auto try_subset = [&](const std::vector<int>& sub) -> bool {
        // variables: coefficients c_i (|sub|) and the line coordinate s
        size_t k = sub.size();
        std::vector<std::vector<Rational>> a(dim + 1,
                                             std::vector<Rational>(k + 1));
        std::vector<Rational> b(dim + 1);
        for (size_t i = 0; i < k; ++i)
            for (size_t d = 0; d < dim; ++d)
                a[d][i] = Rational(points[static_cast<size_t>(sub[i])][d]);
        for (size_t d = 0; d < dim; ++d) a[d][k] = -1;
        for (size_t i = 0; i < k; ++i) a[dim][i] = 1;
        b[dim] = 1;
        auto sol = gauss_solve(a, b);
        if (!sol) return false;
        for (size_t i = 0; i < k; ++i)
            if ((*sol)[i] < 0) return false;
        return true;
    };
    std::vector<int> sub;
    auto rec = [&](auto&& self, size_t start) -> bool {
        if (!sub.empty() && try_subset(sub)) return true;
        if (sub.size() == max_support) return false;
        for (size_t i = start; i < m; ++i) {
            sub.push_back(static_cast<int>(i));
            if (self(self, i + 1)) return true;
            sub.pop_back();
        }
        return false;
    };
    return rec(rec, 0);
}

// Degree of the Grassmannian of p-quotients of an N-space via the
// factorial staircase formula d! * prod_{i=0}^{p-1} i!/(N-p+i)!.
inline Integer grassmannian_degree(int n, int p) {
    long d = static_cast<long>(p) * (n - p);
    Rational v = 1;
    for (long t = 2; t <= d; ++t) v *= t;
    for (int i = 0; i <= p - 1; ++i) {
        for (long t = 2; t <= i; ++t) v *= t;
        for (long t = 2; t <= n - p + i; ++t) v /= t;
    }
    if (!heightlab::is_integer(v)) return Integer(-1);
    return v.get_num();
}

// Sign of sum n_i * (1/2)ln(q_i) - sum m_j * (1/2)ln(r_j) evaluated in
// 200-digit floating point; |result| below the tolerance reads as zero.
inline int affine_sign_mpfr(const std::vector<heightlab::AffineTerm>& lhs,
                            const std::vector<heightlab::AffineTerm>& rhs) {
    const mpfr_prec_t prec = 680; // ~200 decimal digits
    mpfr_t acc, term;
    mpfr_init2(acc, prec);
    mpfr_init2(term, prec);
    mpfr_set_zero(acc, 1);
    auto add_side = [&](const std::vector<heightlab::AffineTerm>& side, int sgn) {
        for (const auto& [n, v] : side) {
            mpfr_set_q(term, v.q().get_mpq_t(), MPFR_RNDN);
            mpfr_log(term, term, MPFR_RNDN);
            mpfr_mul_si(term, term, sgn * n, MPFR_RNDN);
            mpfr_div_ui(term, term, 2, MPFR_RNDN);
            mpfr_add(acc, acc, term, MPFR_RNDN);
        }
    };
    add_side(lhs, 1);
    add_side(rhs, -1);
    mpfr_t tol;
    mpfr_init2(tol, prec);
    mpfr_set_ui(tol, 10, MPFR_RNDN);
    mpfr_pow_si(tol, tol, -150, MPFR_RNDN);
    int result;
    if (mpfr_cmpabs(acc, tol) < 0)
        result = 0;
    else
        result = mpfr_sgn(acc) > 0 ? 1 : -1;
    mpfr_clears(acc, term, tol, static_cast<mpfr_ptr>(nullptr));
    return result;
}

} // namespace oracles
