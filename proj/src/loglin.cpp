#include "heightlab/loglin.hpp"

#include <mpfr.h>

namespace heightlab {

LogValue LogValue::half_log(const Rational& q) {
    require(q > 0, errc::invalid_argument, "half_log requires a positive rational");
    Rational c = q;
    c.canonicalize();
    return LogValue(c);
}

namespace {

// (1/2)ln(q) at `prec` bits.
void eval_half_log(mpfr_t out, const Rational& q, mpfr_prec_t prec) {
    mpfr_init2(out, prec);
    mpfr_set_q(out, q.get_mpq_t(), MPFR_RNDN);
    mpfr_log(out, out, MPFR_RNDN);
    mpfr_div_ui(out, out, 2, MPFR_RNDN);
}

} // namespace

std::string LogValue::to_decimal(int digits) const {
    if (digits < 1) digits = 1;
    mpfr_t x;
    eval_half_log(x, q_, static_cast<mpfr_prec_t>(digits * 4 + 64));
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rg", digits, x);
    std::string s = buf ? buf : "nan";
    mpfr_free_str(buf);
    mpfr_clear(x);
    // keep a decimal point so exact zeros render as "0.0"
    if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
        s.find("inf") == std::string::npos && s.find("nan") == std::string::npos)
        s += ".0";
    return s;
}

double LogValue::to_double() const {
    mpfr_t x;
    eval_half_log(x, q_, 128);
    double d = mpfr_get_d(x, MPFR_RNDN);
    mpfr_clear(x);
    return d;
}

Ordering lv_compare(const LogValue& a, const LogValue& b) {
    int c = cmp(a.q(), b.q());
    return c < 0 ? Ordering::LT : (c == 0 ? Ordering::EQ : Ordering::GT);
}

Ordering lv_affine_compare(std::span<const AffineTerm> lhs,
                           std::span<const AffineTerm> rhs) {
    Rational l(1), r(1);
    for (const auto& [n, v] : lhs) l *= pow_rational(v.q(), n);
    for (const auto& [m, v] : rhs) r *= pow_rational(v.q(), m);
    int c = cmp(l, r);
    return c < 0 ? Ordering::LT : (c == 0 ? Ordering::EQ : Ordering::GT);
}

Ordering lv_affine_compare(const std::vector<AffineTerm>& lhs,
                           const std::vector<AffineTerm>& rhs) {
    return lv_affine_compare(std::span<const AffineTerm>(lhs),
                             std::span<const AffineTerm>(rhs));
}

LogValue parse_logvalue(const std::string& s) {
    const std::string prefix = "logv:";
    if (s.rfind(prefix, 0) != 0)
        fail(errc::parse_error, "expected 'logv:p/q', got '" + s + "'");
    return LogValue::half_log(parse_rational(s.substr(prefix.size())));
}

} // namespace heightlab
