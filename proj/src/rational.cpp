#include "heightlab/rational.hpp"

namespace heightlab {

Rational parse_rational(const std::string& s) {
    if (s.empty()) fail(errc::parse_error, "empty rational literal");
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        fail(errc::parse_error, "malformed rational literal '" + s + "'");
    if (q.get_den() == 0)
        fail(errc::parse_error, "zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

std::string format_rational(const Rational& q) {
    return q.get_str();
}

Rational pow_rational(const Rational& q, long e) {
    if (e == 0) return Rational(1);
    bool invert = e < 0;
    unsigned long k = invert ? static_cast<unsigned long>(-(e + 1)) + 1ul
                             : static_cast<unsigned long>(e);
    if (invert && q == 0)
        fail(errc::invalid_argument, "zero base with negative exponent");
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), k);
    mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), k);
    r.canonicalize();
    if (invert) r = 1 / r;
    return r;
}

Integer content(const std::vector<Integer>& v) {
    Integer g = 0;
    for (const auto& x : v) {
        Integer a = x < 0 ? Integer(-x) : x;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    }
    return g;
}

} // namespace heightlab
