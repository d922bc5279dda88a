#include "heightlab/lp.hpp"

#include "heightlab/errors.hpp"

namespace heightlab {

// Dense phase-one tableau. Columns 0..n-1 are the original variables,
// columns n..n+m-1 the artificials; the artificial basis makes the initial
// tableau feasible after flipping rows with negative right-hand side.
FeasibilityResult solve_feasibility(const QMatrix& a,
                                    const std::vector<Rational>& b) {
    int m = a.rows();
    int n = a.cols();
    require(static_cast<int>(b.size()) == m, errc::invalid_argument,
            "rhs length mismatch");

    int ncols = n + m;
    QMatrix t(m, ncols);
    std::vector<Rational> rhs(b);
    std::vector<int> row_sign(static_cast<size_t>(m), 1);
    for (int i = 0; i < m; ++i) {
        if (rhs[static_cast<size_t>(i)] < 0) {
            row_sign[static_cast<size_t>(i)] = -1;
            rhs[static_cast<size_t>(i)] = -rhs[static_cast<size_t>(i)];
        }
        for (int j = 0; j < n; ++j)
            t.at(i, j) = row_sign[static_cast<size_t>(i)] < 0
                             ? Rational(-a.at(i, j))
                             : a.at(i, j);
        t.at(i, n + i) = 1;
    }
    std::vector<int> basis(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) basis[static_cast<size_t>(i)] = n + i;

    // reduced-profit row z_j - c_j for min(sum of artificials); objective
    // value tracked in obj
    std::vector<Rational> cost(static_cast<size_t>(ncols));
    Rational obj = 0;
    for (int j = 0; j < ncols; ++j) {
        Rational s = 0;
        for (int i = 0; i < m; ++i) s += t.at(i, j);
        cost[static_cast<size_t>(j)] = s - (j >= n ? 1 : 0);
    }
    for (int i = 0; i < m; ++i) obj += rhs[static_cast<size_t>(i)];

    auto pivot = [&](int pr, int pc) {
        Rational inv = 1 / t.at(pr, pc);
        for (int j = 0; j < ncols; ++j) t.at(pr, j) *= inv;
        rhs[static_cast<size_t>(pr)] *= inv;
        for (int i = 0; i < m; ++i) {
            if (i == pr || t.at(i, pc) == 0) continue;
            Rational f = t.at(i, pc);
            for (int j = 0; j < ncols; ++j) t.at(i, j) -= f * t.at(pr, j);
            rhs[static_cast<size_t>(i)] -= f * rhs[static_cast<size_t>(pr)];
        }
        if (cost[static_cast<size_t>(pc)] != 0) {
            Rational f = cost[static_cast<size_t>(pc)];
            for (int j = 0; j < ncols; ++j)
                cost[static_cast<size_t>(j)] -= f * t.at(pr, j);
            obj -= f * rhs[static_cast<size_t>(pr)];
        }
        basis[static_cast<size_t>(pr)] = pc;
    };

    for (;;) {
        // Bland: smallest-index improving column
        int pc = -1;
        for (int j = 0; j < ncols; ++j)
            if (cost[static_cast<size_t>(j)] > 0) { pc = j; break; }
        if (pc < 0) break;
        // smallest basis index among minimum ratios
        int pr = -1;
        Rational best;
        for (int i = 0; i < m; ++i) {
            if (t.at(i, pc) <= 0) continue;
            Rational ratio = rhs[static_cast<size_t>(i)] / t.at(i, pc);
            if (pr < 0 || ratio < best ||
                (ratio == best && basis[static_cast<size_t>(i)] <
                                      basis[static_cast<size_t>(pr)])) {
                pr = i;
                best = ratio;
            }
        }
        require(pr >= 0, errc::internal, "phase-one objective unbounded");
        pivot(pr, pc);
    }

    FeasibilityResult res;
    if (obj == 0) {
        res.feasible = true;
        res.x.assign(static_cast<size_t>(n), Rational(0));
        for (int i = 0; i < m; ++i)
            if (basis[static_cast<size_t>(i)] < n)
                res.x[static_cast<size_t>(basis[static_cast<size_t>(i)])] =
                    rhs[static_cast<size_t>(i)];
        // exact re-check of A x = b
        for (int i = 0; i < m; ++i) {
            Rational s = 0;
            for (int j = 0; j < n; ++j)
                s += a.at(i, j) * res.x[static_cast<size_t>(j)];
            require(s == b[static_cast<size_t>(i)], errc::internal,
                    "feasible point fails the equations");
        }
        return res;
    }

    // Farkas certificate from the final reduced profits of the artificial
    // columns: the simplex multiplier of row i is cost[n+i] + c_{n+i}, and
    // the setup row flips must be undone.
    res.feasible = false;
    res.farkas.assign(static_cast<size_t>(m), Rational(0));
    for (int i = 0; i < m; ++i) {
        Rational y = cost[static_cast<size_t>(n + i)] + 1;
        if (row_sign[static_cast<size_t>(i)] < 0) y = -y;
        res.farkas[static_cast<size_t>(i)] = y;
    }
    for (int j = 0; j < n; ++j) {
        Rational s = 0;
        for (int i = 0; i < m; ++i)
            s += res.farkas[static_cast<size_t>(i)] * a.at(i, j);
        require(s <= 0, errc::internal, "invalid infeasibility certificate");
    }
    Rational yb = 0;
    for (int i = 0; i < m; ++i)
        yb += res.farkas[static_cast<size_t>(i)] * b[static_cast<size_t>(i)];
    require(yb > 0, errc::internal, "invalid infeasibility certificate");
    return res;
}

} // namespace heightlab
