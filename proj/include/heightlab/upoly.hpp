#pragma once

#include <vector>

#include "heightlab/rational.hpp"

namespace heightlab {

// Univariate polynomial over Q, coefficients ascending (c[0] + c[1] t + ...).
struct UPoly {
    std::vector<Rational> c;

    int degree() const; // -1 for the zero polynomial
    Rational eval(const Rational& x) const;
    UPoly derivative() const;
    void normalize(); // strip leading zeros
    bool is_zero() const { return degree() < 0; }
};

UPoly upoly_from(const std::vector<Rational>& ascending);

// Remainder of a by b (b nonzero).
UPoly upoly_rem(const UPoly& a, const UPoly& b);

// Number of distinct real roots of p in the half-open interval (a, b],
// via Sturm's theorem.
int sturm_count_roots(const UPoly& p, const Rational& a, const Rational& b);

// Certified rational upper bound for the largest eigenvalue of a symmetric
// matrix with characteristic polynomial `charpoly`, refined from the
// initial bound `hi` (which must already dominate every root) by `iters`
// bisection steps.
Rational largest_root_upper_bound(const UPoly& charpoly, const Rational& lo,
                                  const Rational& hi, int iters);

// Exact Newton interpolation through (x_i, y_i); x_i pairwise distinct.
UPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

} // namespace heightlab
