#pragma once

#include <cstdint>

#include "heightlab/qmatrix.hpp"

namespace heightlab {

// Deterministic 64-bit generator (splitmix64); identical seeds give
// identical streams on every platform, which keeps batch experiments and
// reports reproducible.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform integer in [lo, hi]
    long uniform(long lo, long hi) {
        return lo + static_cast<long>(next() %
                                      static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::uint64_t state_;
};

// p/q with 1 <= p <= max_num, 1 <= q <= max_den.
Rational random_positive_rational(Rng& rng, long max_num, long max_den);

// Random rational in [-max_num, max_num] / [1, max_den].
Rational random_rational(Rng& rng, long max_num, long max_den);

// Product of `factors` random elementary transvections and signed
// permutations; always in SL_N(Z) with moderate entries.
QMatrix random_sl_matrix(Rng& rng, int n, int factors);

// Symmetric positive definite with rational entries of bounded complexity
// (diagonally dominant by construction; positive definiteness is verified
// exactly by the lattice constructor downstream).
QMatrix random_spd_gram(Rng& rng, int n, long max_num, long max_den);

// Random trace-zero rational matrix.
QMatrix random_traceless(Rng& rng, int n, long max_num, long max_den);

// SL_N(Z)-conjugate of a random strictly upper triangular integer matrix;
// always nilpotent and nonzero.
QMatrix random_nilpotent(Rng& rng, int n, int conj_factors);

} // namespace heightlab
