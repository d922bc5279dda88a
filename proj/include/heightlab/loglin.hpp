#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "heightlab/rational.hpp"

namespace heightlab {

enum class Ordering { LT, EQ, GT };

inline const char* ordering_name(Ordering o) {
    return o == Ordering::LT ? "LT" : (o == Ordering::EQ ? "EQ" : "GT");
}

// Exact real of the form (1/2)*ln(q) with q a positive rational.
//
// Arakelov degrees, heights and bound constants are all half-logs of
// rationals (norms squared and Gram determinants are rational), so sums,
// integer multiples and comparisons of such quantities reduce to exact
// rational arithmetic on the underlying q. No floating point is involved
// in any decision; decimal rendering is display-only.
class LogValue {
public:
    // Represents (1/2)*ln(1) = 0.
    LogValue() : q_(1) {}

    // (1/2)*ln(q), q > 0 required.
    static LogValue half_log(const Rational& q);

    // ln(q) = (1/2)*ln(q^2).
    static LogValue log(const Rational& q) { return half_log(q * q); }

    static LogValue zero() { return LogValue(); }

    const Rational& q() const { return q_; }

    // add(a,b).q = a.q * b.q
    friend LogValue operator+(const LogValue& a, const LogValue& b) {
        return LogValue(Rational(a.q_ * b.q_));
    }
    friend LogValue operator-(const LogValue& a, const LogValue& b) {
        return LogValue(Rational(a.q_ / b.q_));
    }
    LogValue operator-() const { return LogValue(Rational(1 / q_)); }

    // n-fold sum; scale_int(0, a) = 0, negative n allowed.
    LogValue scale_int(long n) const { return LogValue(pow_rational(q_, n)); }

    bool is_zero() const { return q_ == 1; }

    // Sign of (1/2)ln(q) versus 0, i.e. sign of q - 1.
    int sign() const { return q_ > 1 ? 1 : (q_ == 1 ? 0 : -1); }

    // Serialized exact form used in reports; the denominator is always
    // explicit ("logv:1/1" for zero).
    std::string to_string() const {
        return "logv:" + q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    // Decimal approximation to `digits` significant digits (display only;
    // the last digit is correctly rounded up to MPFR's guarantees).
    std::string to_decimal(int digits) const;
    double to_double() const;

    friend bool operator==(const LogValue& a, const LogValue& b) {
        return a.q_ == b.q_;
    }

private:
    explicit LogValue(Rational q) : q_(std::move(q)) {}
    Rational q_; // always > 0, canonical
};

// Ordering of a vs b, decided on the rationals: sign of a.q - b.q.
Ordering lv_compare(const LogValue& a, const LogValue& b);

using AffineTerm = std::pair<long, LogValue>; // (integer coefficient, value)

// Ordering of sum(n_i * a_i) versus sum(m_j * b_j), decided exactly by
// comparing the rational products prod(a_i.q^n_i) and prod(b_j.q^m_j).
Ordering lv_affine_compare(std::span<const AffineTerm> lhs,
                           std::span<const AffineTerm> rhs);

Ordering lv_affine_compare(const std::vector<AffineTerm>& lhs,
                           const std::vector<AffineTerm>& rhs);

// Parses the "logv:p/q" serialization.
LogValue parse_logvalue(const std::string& s);

} // namespace heightlab
