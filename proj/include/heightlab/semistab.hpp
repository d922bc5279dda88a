#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "heightlab/mpoly.hpp"
#include "heightlab/reps.hpp"

namespace heightlab {

// Point of P(W): a rank-one quotient stored as its defining covector, a
// primitive nonzero integer vector on the dual basis of the documented
// basis of W. Group-stability questions about the point are questions
// about this covector under the dual action.
struct PointInP {
    RepPtr rep;
    std::vector<Integer> covector;
    bool was_normalized = false; // content was divided out at construction
};

// Validates: dim(W) >= 2, covector nonzero, and normalizes to primitive.
PointInP make_point(RepPtr rep, std::vector<Integer> covector);

// Line-vector entry point for self-dual adjoint representations: the
// covector of the line through a trace-zero matrix X is its trace pairing
// u_j = tr(X b_j), cleared to a primitive integer vector.
PointInP point_from_matrix(const RepPtr& adjoint_rep, const QMatrix& x);

// Trace-form preimage of the covector (rational trace-zero matrix).
QMatrix matrix_from_point(const PointInP& p);

// Diagonal one-parameter subgroup with integer exponents summing to zero.
struct OnePS {
    std::vector<long> r;
};

OnePS make_one_ps(std::vector<long> r);

// Weights of the dual representation at the covector's support.
std::vector<std::vector<long>> active_dual_weights(const PointInP& p);

// mu(p, lambda) = -min{ <w, r> : w active dual weight }.
long hm_weight(const PointInP& p, const OnePS& lam);

// Exact torus test: the point is torus-semistable iff the convex hull of
// its active dual weights meets the diagonal line R*(1,..,1) (weights of
// the special-linear torus live modulo that line). Feasibility is decided
// by the exact simplex; an infeasibility certificate is turned into a
// sum-zero integer functional strictly positive on every active weight.
struct TorusReport {
    bool semistable = false;
    std::vector<std::vector<long>> active; // active dual weights, in order
    // semistable: convex coefficients with sum_i c_i w_i = line_coord * 1
    std::vector<Rational> combination;
    Rational line_coord;
    // unstable: destabilizing one-parameter subgroup
    OnePS separating;
};

TorusReport torus_semistable(const PointInP& p);

// Instability certificate: a group translate plus a one-parameter subgroup
// whose pairing with every active weight of the translated point is
// strictly positive. Absence of a certificate is not a semistability
// proof; the search reports "inconclusive" by returning nullopt.
struct InstabilityCertificate {
    QMatrix g; // in SL_N(Z)
    OnePS lambda;
    std::vector<Integer> translated; // primitive covector of the translate
};

std::optional<InstabilityCertificate> instability_search(const PointInP& p,
                                                         int budget,
                                                         std::uint64_t seed);

// Re-derives the translate and checks the strict pairing condition.
bool verify_instability(const PointInP& p, const InstabilityCertificate& c);

// Complete decision for the adjoint action: a trace-zero X is semistable
// iff its characteristic polynomial is not t^N.
bool adjoint_semistable(const QMatrix& x);

struct InvariantGenerator {
    MPoly poly; // homogeneous, integer coefficients
    int degree;
};

struct InvariantGeneratorSet {
    int nvars = 0;
    std::vector<InvariantGenerator> gens;
};

// Characteristic-polynomial coefficients c_2..c_N expressed as primitive
// integer polynomials in the covector coordinates (via the trace-form
// identification); a trace-zero X is semistable iff some generator is
// nonzero on its covector.
InvariantGeneratorSet adjoint_invariants(int n);

// First generator with nonzero value at the covector. Before evaluating,
// invariance is spot-checked on random special-linear integer elements;
// failures raise not_invariant.
std::optional<std::pair<int, Rational>> invariant_certificate(
    const PointInP& p, const InvariantGeneratorSet& gens,
    std::uint64_t sanity_seed = 1, int sanity_samples = 4);

// Dual action on covectors: inverse transpose of the action on W.
QMatrix dual_action_matrix(const RepTree& t, const QMatrix& g);

// Applies the dual action of g to the covector and renormalizes to a
// primitive integer vector.
std::vector<Integer> translate_covector(const PointInP& p, const QMatrix& g);

} // namespace heightlab
