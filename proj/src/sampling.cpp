#include "heightlab/sampling.hpp"

#include "heightlab/errors.hpp"

namespace heightlab {

Rational random_positive_rational(Rng& rng, long max_num, long max_den) {
    Rational q(rng.uniform(1, max_num), rng.uniform(1, max_den));
    q.canonicalize();
    return q;
}

Rational random_rational(Rng& rng, long max_num, long max_den) {
    Rational q(rng.uniform(-max_num, max_num), rng.uniform(1, max_den));
    q.canonicalize();
    return q;
}

QMatrix random_sl_matrix(Rng& rng, int n, int factors) {
    QMatrix g = QMatrix::identity(n);
    for (int f = 0; f < factors; ++f) {
        if (n >= 2 && rng.uniform(0, 3) == 0) {
            // signed swap of two coordinates, determinant one
            int i = static_cast<int>(rng.uniform(0, n - 1));
            int j = static_cast<int>(rng.uniform(0, n - 2));
            if (j >= i) ++j;
            QMatrix p = QMatrix::identity(n);
            p.at(i, i) = 0;
            p.at(j, j) = 0;
            p.at(i, j) = 1;
            p.at(j, i) = -1;
            g = g * p;
        } else {
            int i = static_cast<int>(rng.uniform(0, n - 1));
            int j = static_cast<int>(rng.uniform(0, n - 2));
            if (j >= i) ++j;
            QMatrix t = QMatrix::identity(n);
            t.at(i, j) = rng.uniform(-2, 2);
            g = g * t;
        }
    }
    return g;
}

QMatrix random_spd_gram(Rng& rng, int n, long max_num, long max_den) {
    QMatrix g(n, n);
    // small off-diagonal entries (|p| <= 2, q <= 4), strictly dominant
    // diagonal entries with numerator and denominator within the bounds;
    // dominance makes the matrix positive definite, which the lattice
    // constructor re-checks exactly
    long off_den = max_den > 4 ? 4 : max_den;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Rational v = random_rational(rng, 2, off_den);
            g.at(i, j) = v;
            g.at(j, i) = v;
        }
    long floor_num = 2L * (n - 1) + 1;
    for (int i = 0; i < n; ++i) {
        long den = 1 + rng.uniform(0, 1);
        long lo = floor_num * den + 1;
        long hi = max_num > lo ? max_num : lo + 5;
        Rational d(rng.uniform(lo, hi), den);
        d.canonicalize();
        g.at(i, i) = d;
    }
    return g;
}

QMatrix random_traceless(Rng& rng, int n, long max_num, long max_den) {
    QMatrix x(n, n);
    Rational diag_sum = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == n - 1 && j == n - 1) continue;
            x.at(i, j) = random_rational(rng, max_num, max_den);
            if (i == j) diag_sum += x.at(i, j);
        }
    x.at(n - 1, n - 1) = -diag_sum;
    return x;
}

QMatrix random_nilpotent(Rng& rng, int n, int conj_factors) {
    QMatrix x(n, n);
    bool nonzero = false;
    while (!nonzero) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                x.at(i, j) = rng.uniform(-3, 3);
                if (x.at(i, j) != 0) nonzero = true;
            }
    }
    QMatrix z = random_sl_matrix(rng, n, conj_factors);
    return z * x * z.inverse();
}

} // namespace heightlab
