#pragma once

#include "heightlab/loglin.hpp"
#include "heightlab/qmatrix.hpp"

namespace heightlab {

// Free Z-module of rank N with a symmetric positive-definite rational Gram
// matrix: a metrized vector bundle over the arithmetic curve with K = Q,
// so there is exactly one archimedean place. The code still iterates over
// a places list of length one so the shape generalizes.
class HermitianLattice {
public:
    // Validates symmetry and positive-definiteness (exact leading principal
    // minors; no floating-point factorization). Throws not_symmetric /
    // not_positive_definite with the violating minor index.
    explicit HermitianLattice(QMatrix gram);

    int rank() const { return gram_.rows(); }
    const QMatrix& gram() const { return gram_; }

    // deg^(L) = -(1/2) ln det(gram).
    LogValue arakelov_degree() const;

    // Gram of the dual lattice is the inverse Gram, exactly.
    HermitianLattice dual() const;

    // Gram scaled by a positive rational c; the degree drops by (N/2) ln c.
    HermitianLattice scale(const Rational& c) const;

    static HermitianLattice direct_sum(const HermitianLattice& a,
                                       const HermitianLattice& b);

    friend bool operator==(const HermitianLattice& a, const HermitianLattice& b) {
        return a.gram_ == b.gram_;
    }

private:
    QMatrix gram_;
};

// Rank-one metrized module, stored as the norm-squared of a generator.
struct MetrizedLine {
    Rational norm_sq; // > 0

    LogValue arakelov_degree() const {
        // -(1/2) ln(norm_sq)
        return -LogValue::half_log(norm_sq);
    }
};

// Number of archimedean places at K = Q.
inline constexpr int kNumPlaces = 1;
// [K:Q] for the base field.
inline constexpr int kFieldDegree = 1;

} // namespace heightlab
