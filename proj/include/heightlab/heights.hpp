#pragma once

#include <optional>
#include <string>
#include <vector>

#include "heightlab/hermlat.hpp"
#include "heightlab/loglin.hpp"
#include "heightlab/semistab.hpp"

namespace heightlab {

// Height of the point: with G the induced Gram on W and u the primitive
// covector, h = (1/2) ln(u G^{-1} u^T). The quotient metric on the rank-one
// quotient has generator norm 1/||u||_{G^{-1}}, and primitivity kills the
// finite part of the degree.
LogValue point_height(const HermitianLattice& L, const CompactifiedRep& T,
                      const PointInP& p);

// Certified lower bound for the representation constant C: with B an upper
// bound for max_i sup |P_i(v)| / ||v||^{deg P_i} over the reference dual
// metric, C_cert = -ln(B) is a valid (possibly weaker) floor constant.
// Each sup norm is bounded by (sum of |coefficients|) * ||v||_inf^deg, and
// ||v||_inf on the unit sphere by a certified rational upper bound on
// lambda_max of the reference Gram (Sturm bisection on the characteristic
// polynomial). Any rational upper bound keeps the inequality direction.
struct RepConstantReport {
    LogValue certified;        // C_cert as a half-log value
    Rational b_sq_upper;       // certified upper bound for B^2
    Rational lambda_max_upper; // certified upper bound for lambda_max(G_ref)
    double sampled_estimate;   // float estimate of the sharp constant
};

RepConstantReport rep_constant(const CompactifiedRep& T,
                               const InvariantGeneratorSet& gens);

// Same computation against an explicit reference Gram block (used for the
// components of a non-homogeneous representation).
RepConstantReport rep_constant_for_gram(const QMatrix& reference_gram,
                                        const InvariantGeneratorSet& gens);

// Exact verdict on the height floor h >= (a/N) deg^(E) + C. The boolean is
// decided by clearing the /N denominator through an integer-coefficient
// comparison; floats appear only in the margin.
struct BoundReport {
    LogValue height;
    long slope_degree = 0;   // a (minimal component degree in the mixed case)
    int group_rank = 0;      // N
    LogValue lattice_degree; // deg^(E)
    LogValue constant;       // certified C
    bool satisfied = false;
    double margin = 0.0; // float(height - floor), display only
    std::string witness;
    bool mixed = false;
    int component = -1;         // witnessing component (mixed case)
    bool used_projection = false;
    LogValue projected_height;  // height of the projected point (mixed case)
};

// Homogeneous case. Establishes semistability internally for the adjoint
// (characteristic-polynomial test) and through a nonzero invariant
// generator otherwise; rejects points it cannot certify.
BoundReport check_height_floor(const HermitianLattice& L,
                               const CompactifiedRep& T, const PointInP& p,
                               const InvariantGeneratorSet& gens);

// Non-homogeneous case: floor min_i(a_i deg^/N) + C via the orthogonal
// decomposition; the point must restrict to a semistable point of some
// component (directly or after linear projection). Components are matched
// with the supplied generator sets by position; entries may be empty when
// the component is an adjoint summand.
BoundReport check_height_floor_mixed(
    const HermitianLattice& L, const CompactifiedRep& T, const PointInP& p,
    const std::vector<std::optional<InvariantGeneratorSet>>& component_gens);

// Metric drift along a diagonal flow: gram_n = A_n gram A_n with
// A_n = diag(base^{-n r_1}, .., base^{-n r_N}), so determinants (and hence
// the Arakelov degree) stay exactly constant while the height of a point
// destabilized by lambda goes to -infinity with asymptotic slope
// (1/2) ln(base^{-e_min}) per step, e_min the smallest active exponent.
struct DriftReport {
    std::vector<long> exponents;   // n = 0..steps
    std::vector<LogValue> heights;
    std::vector<LogValue> degrees; // all equal by construction, checked
    bool certificate_ok = false;   // every active weight pairs strictly > 0
    LogValue asymptotic_step;      // exact limit of h_{n+1} - h_n
    bool single_exponent = false;  // step differences constant from n = 0
    int constant_from = -1; // first step index from which differences are
                            // exactly constant; -1 when they never settle
};

DriftReport drift_sequence(const PointInP& x, const OnePS& lam, long base,
                           int steps, const HermitianLattice& L0,
                           const CompactifiedRep& T);

} // namespace heightlab
