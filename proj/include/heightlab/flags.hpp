#pragma once

#include <optional>
#include <vector>

#include "heightlab/rational.hpp"
#include "heightlab/upoly.hpp"

namespace heightlab {

// Ordered composition (n_1, .., n_k) of N describing a flag type; partial
// sums s_i are cached.
struct Partition {
    std::vector<int> parts;
    int total = 0;            // N
    std::vector<int> partial; // s_i = n_1 + .. + n_i
};

Partition make_partition(std::vector<int> parts);

// d = N^2 - sum_i n_i s_i.
long flag_dimension(const Partition& p);

// Section count of the m-th power of the canonical embedding line bundle:
// prod over pairs i < j in different blocks of (m c_ij + j - i)/(j - i),
// with c_ij the number of partial sums separating i and j. Integer for
// every m >= 0.
Integer weyl_dim_value(const Partition& p, long m);

// Exact interpolation of m -> weyl_dim_value at m = 0..d, with the degree
// asserted to equal flag_dimension (degree_mismatch otherwise) and the
// polynomial spot-checked at extra points.
UPoly weyl_dim_polynomial(const Partition& p);

// d! times the leading coefficient of the interpolated polynomial; always
// a positive integer.
Integer flag_degree(const Partition& p);

// A = prod_{i=1}^{k-1} (N - s_i) * d * delta / N.
Rational constant_A(const Partition& p);

// Alternate closed-form value of the degree for two-part compositions
// (N-p, p); it disagrees with the interpolated degree by a factor of d for
// Grassmannians and is reported alongside, never substituted.
std::optional<Rational> closed_form_degree_variant(const Partition& p);

// Same product as constant_A but with the final i = k factor included,
// which makes it vanish identically (s_k = N); reported for comparison.
Rational constant_A_full_product(const Partition& p);

// All compositions of N in lexicographic order.
std::vector<Partition> compositions(int n);

} // namespace heightlab
