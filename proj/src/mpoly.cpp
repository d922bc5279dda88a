#include "heightlab/mpoly.hpp"

#include <numeric>
#include <sstream>

#include "heightlab/errors.hpp"

namespace heightlab {

MPoly MPoly::constant(int nvars, const Rational& c) {
    MPoly p(nvars);
    p.add_term(Exps(static_cast<size_t>(nvars), 0), c);
    return p;
}

MPoly MPoly::variable(int nvars, int index) {
    require(index >= 0 && index < nvars, errc::invalid_argument,
            "variable index out of range");
    MPoly p(nvars);
    Exps e(static_cast<size_t>(nvars), 0);
    e[static_cast<size_t>(index)] = 1;
    p.add_term(e, 1);
    return p;
}

int MPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int s = std::accumulate(e.begin(), e.end(), 0);
        if (s > d) d = s;
    }
    return d;
}

bool MPoly::is_homogeneous() const {
    int d = -2;
    for (const auto& [e, c] : terms_) {
        int s = std::accumulate(e.begin(), e.end(), 0);
        if (d == -2) d = s;
        else if (s != d) return false;
    }
    return true;
}

void MPoly::add_term(const Exps& e, const Rational& c) {
    require(static_cast<int>(e.size()) == nvars_, errc::invalid_argument,
            "exponent vector length mismatch");
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MPoly operator+(const MPoly& a, const MPoly& b) {
    require(a.nvars_ == b.nvars_, errc::invalid_argument, "nvars mismatch");
    MPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) {
    require(a.nvars_ == b.nvars_, errc::invalid_argument, "nvars mismatch");
    MPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, Rational(-c));
    return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    require(a.nvars_ == b.nvars_, errc::invalid_argument, "nvars mismatch");
    MPoly r(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            MPoly::Exps e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

MPoly operator*(const Rational& c, const MPoly& a) {
    MPoly r(a.nvars_);
    if (c == 0) return r;
    for (const auto& [e, coef] : a.terms_) r.add_term(e, c * coef);
    return r;
}

Rational MPoly::eval(const std::vector<Rational>& point) const {
    require(static_cast<int>(point.size()) == nvars_, errc::invalid_argument,
            "evaluation point length mismatch");
    Rational s = 0;
    for (const auto& [e, c] : terms_) {
        Rational m = c;
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) m *= pow_rational(point[i], e[i]);
        s += m;
    }
    return s;
}

Rational MPoly::coefficient_abs_sum() const {
    Rational s = 0;
    for (const auto& [e, c] : terms_) s += abs_rational(c);
    return s;
}

MPoly MPoly::primitive_integer() const {
    if (terms_.empty()) return *this;
    Integer den_lcm = 1;
    for (const auto& [e, c] : terms_)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    Integer num_gcd = 0;
    for (const auto& [e, c] : terms_) {
        Integer n = c.get_num() * (den_lcm / c.get_den());
        if (n < 0) n = -n;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    }
    Rational factor(den_lcm, num_gcd);
    factor.canonicalize();
    return factor * (*this);
}

bool MPoly::has_integer_coefficients() const {
    for (const auto& [e, c] : terms_)
        if (!is_integer(c)) return false;
    return true;
}

std::string MPoly::to_string(const std::vector<std::string>& var_names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << format_rational(c);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            os << "*";
            if (i < var_names.size()) os << var_names[i];
            else os << "x" << i;
            if (e[i] != 1) os << "^" << e[i];
        }
    }
    return os.str();
}

} // namespace heightlab
