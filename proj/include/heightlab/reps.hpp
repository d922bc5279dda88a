#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "heightlab/hermlat.hpp"
#include "heightlab/loglin.hpp"
#include "heightlab/qmatrix.hpp"

namespace heightlab {

struct RepTree;
using RepPtr = std::shared_ptr<const RepTree>;

// Construction tree for a representation of GL_N. Every leaf carries the
// same N (validated at construction). Basis orders are fixed per
// constructor so weights, covectors and Gram matrices are reproducible:
//   - Standard(N): e_1..e_N
//   - Dual(t): dual basis in the order of t
//   - Sym(n, t): monomials in lexicographically descending exponent order
//   - Wedge(k, t): sorted index k-subsets in lexicographic ascending order
//   - Tensor(a, b): row-major pairs (i, j)
//   - DirectSum(a, b): basis of a, then basis of b
//   - DetPower(N, k): single basis element
//   - Adjoint(N): E_ij for i<j row-major, then H_i = E_ii - E_{i+1,i+1},
//     then E_ij for i>j row-major; for N = 2 this is (E12, H, E21)
struct RepTree {
    enum class Kind {
        standard, dual, sym, wedge, tensor, direct_sum, det_power, adjoint
    };
    Kind kind;
    int group_rank; // N
    int param;      // n for sym, k for wedge and det_power
    RepPtr left, right;
};

RepPtr rep_standard(int n);
RepPtr rep_dual(RepPtr t);
RepPtr rep_sym(int n, RepPtr t);
RepPtr rep_wedge(int k, RepPtr t);
RepPtr rep_tensor(RepPtr a, RepPtr b);
RepPtr rep_direct_sum(RepPtr a, RepPtr b);
RepPtr rep_det_power(int group_rank, int k);
RepPtr rep_adjoint(int n);

int rep_dimension(const RepTree& t);

// Diagonal-torus character exponents per basis element, plus display labels.
struct WeightSystem {
    std::vector<std::vector<long>> weights;
    std::vector<std::string> labels;
};

WeightSystem rep_weights(const RepTree& t);

// Coordinate sums of the weights; a singleton {a} iff scalars t*Id act as
// t^a on the whole space.
std::set<long> homogeneity_degrees(const RepTree& t);
bool is_homogeneous(const RepTree& t, long* degree_out = nullptr);

// The matrix of the induced map on W in the documented basis, built
// functorially (symmetric and exterior power matrices, Kronecker products,
// inverse transpose for Dual, conjugation restricted to trace zero for
// Adjoint). Functoriality action(gh) = action(g) action(h) holds exactly.
QMatrix matrix_action(const RepTree& t, const QMatrix& g);

// Metric transport: the Gram induced on W by a Gram on the standard fibre.
//   Tensor -> Kronecker product, Dual -> inverse, Wedge(k) -> k-th compound
//   (k x k minors), Sym -> quotient metric computed by the dual-restriction
//   rule (restrict the inverse Gram to the symmetrized dual sublattice,
//   then invert), Adjoint -> restriction of Std (x) Dual to trace zero,
//   DirectSum -> orthogonal sum.
QMatrix induced_gram_raw(const RepTree& t, const QMatrix& gram);

// A representation together with its metric recipe; the natural functorial
// metric times a positive rational scalar per (single) archimedean place.
struct CompactifiedRep {
    RepPtr tree;
    Rational scale = Rational(1);
};

// Metric transport applied to a lattice; throws rank_mismatch when the
// leaf rank differs from the lattice rank.
HermitianLattice induced_lattice(const CompactifiedRep& rep,
                                 const HermitianLattice& L);

struct HomogeneousComponent {
    long degree;
    std::vector<int> indices; // basis indices of W, ascending
    HermitianLattice lattice; // Gram block of the component
};

// Partition of the basis by weight coordinate-sum. Checks that the induced
// Gram is exactly block diagonal across the partition and throws
// orthogonality_violation otherwise (distinct degrees share no isotypic
// factor, so cross terms must vanish).
std::vector<HomogeneousComponent> decompose_homogeneous(
    const CompactifiedRep& rep, const HermitianLattice& L);

// Exact comparison of (1/2) ln det(induced Gram) against
// (a*dim(W)/N) * (1/2) ln det(L) for homogeneous trees of degree a.
struct DetTwistReport {
    Ordering order;
    Rational ratio;          // det(W-Gram) / det(L-Gram)^{a*dim/N}
    Rational scale_ratio;    // scale^{dim W}, the part explained by the scale
    long degree = 0;         // a
    long twist_exponent = 0; // a*dim/N
    bool eq() const { return ratio == 1; }
};

DetTwistReport det_twist_check(const CompactifiedRep& rep,
                               const HermitianLattice& L);

// Integer basis of the trace-zero N x N matrices in the documented order.
std::vector<QMatrix> adjoint_basis(int n);
// F[p][q] = tr(b_p b_q) for that basis.
QMatrix adjoint_trace_gram(int n);
// Coordinates of a trace-zero matrix in the documented basis.
std::vector<Rational> adjoint_coords(const QMatrix& traceless);

} // namespace heightlab
