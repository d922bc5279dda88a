#pragma once

#include <map>
#include <string>
#include <vector>

#include "heightlab/rational.hpp"

namespace heightlab {

// Sparse multivariate polynomial over Q: exponent vector -> coefficient.
class MPoly {
public:
    using Exps = std::vector<int>;

    MPoly() : nvars_(0) {}
    explicit MPoly(int nvars) : nvars_(nvars) {}

    static MPoly constant(int nvars, const Rational& c);
    static MPoly variable(int nvars, int index);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const; // -1 for zero
    bool is_homogeneous() const;

    void add_term(const Exps& e, const Rational& c);

    friend MPoly operator+(const MPoly& a, const MPoly& b);
    friend MPoly operator-(const MPoly& a, const MPoly& b);
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend MPoly operator*(const Rational& c, const MPoly& a);
    friend bool operator==(const MPoly& a, const MPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    Rational eval(const std::vector<Rational>& point) const;

    // Sum of |coefficients| (used for sup-norm bounds).
    Rational coefficient_abs_sum() const;

    // Multiplies by the lcm of coefficient denominators and divides by the
    // gcd of the resulting integer coefficients; the result has integer
    // coefficients with content one and the same sign as the input.
    MPoly primitive_integer() const;

    bool has_integer_coefficients() const;

    const std::map<Exps, Rational>& terms() const { return terms_; }

    std::string to_string(const std::vector<std::string>& var_names = {}) const;

private:
    int nvars_;
    std::map<Exps, Rational> terms_; // nonzero coefficients only
};

} // namespace heightlab
