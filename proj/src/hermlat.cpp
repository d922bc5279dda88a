#include "heightlab/hermlat.hpp"

#include "heightlab/errors.hpp"

namespace heightlab {

HermitianLattice::HermitianLattice(QMatrix gram) : gram_(std::move(gram)) {
    require(gram_.is_square() && gram_.rows() > 0, errc::invalid_argument,
            "Gram matrix must be square and nonempty");
    require(gram_.is_symmetric(), errc::not_symmetric, "Gram matrix is not symmetric");
    auto minors = gram_.leading_principal_minors();
    for (size_t k = 0; k < minors.size(); ++k)
        if (minors[k] <= 0)
            fail(errc::not_positive_definite,
                 "Gram matrix is not positive definite: leading principal minor " +
                     std::to_string(k + 1) + " = " + format_rational(minors[k]));
}

LogValue HermitianLattice::arakelov_degree() const {
    // the finite part vanishes (trivial class group); one archimedean
    // contribution per place, and the places list has length one at K = Q
    LogValue d;
    for (int place = 0; place < kNumPlaces; ++place)
        d = d + LogValue::half_log(1 / gram_.det());
    return d;
}

HermitianLattice HermitianLattice::dual() const {
    return HermitianLattice(gram_.inverse());
}

HermitianLattice HermitianLattice::scale(const Rational& c) const {
    require(c > 0, errc::invalid_argument, "scale factor must be positive");
    return HermitianLattice(c * gram_);
}

HermitianLattice HermitianLattice::direct_sum(const HermitianLattice& a,
                                              const HermitianLattice& b) {
    return HermitianLattice(QMatrix::block_diag(a.gram(), b.gram()));
}

} // namespace heightlab
