#include "heightlab/flags.hpp"

#include "heightlab/errors.hpp"
#include "heightlab/hermlat.hpp"

namespace heightlab {

Partition make_partition(std::vector<int> parts) {
    require(!parts.empty(), errc::invalid_argument, "empty composition");
    Partition p;
    p.parts = std::move(parts);
    for (int x : p.parts) {
        require(x >= 1, errc::invalid_argument, "composition parts must be positive");
        p.total += x;
        p.partial.push_back(p.total);
    }
    return p;
}

long flag_dimension(const Partition& p) {
    long d = static_cast<long>(p.total) * p.total;
    for (size_t i = 0; i < p.parts.size(); ++i)
        d -= static_cast<long>(p.parts[i]) * p.partial[i];
    return d;
}

namespace {

// number of partial sums s with i <= s < j (1-based positions)
int separations(const Partition& p, int i, int j) {
    int c = 0;
    for (int s : p.partial)
        if (i <= s && s < j) ++c;
    return c;
}

} // namespace

Integer weyl_dim_value(const Partition& p, long m) {
    require(m >= 0, errc::invalid_argument, "power must be nonnegative");
    int n = p.total;
    Rational v = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            int c = separations(p, i, j);
            if (c == 0) continue; // same block
            Rational f(m * c + (j - i), j - i);
            f.canonicalize();
            v *= f;
        }
    require(is_integer(v), errc::internal, "dimension value is not integral");
    return v.get_num();
}

UPoly weyl_dim_polynomial(const Partition& p) {
    long d = flag_dimension(p);
    std::vector<Rational> xs, ys;
    for (long m = 0; m <= d; ++m) {
        xs.emplace_back(m);
        ys.emplace_back(weyl_dim_value(p, m));
    }
    UPoly poly = interpolate(xs, ys);
    if (poly.degree() != static_cast<int>(d))
        fail(errc::degree_mismatch,
             "interpolated degree " + std::to_string(poly.degree()) +
                 " differs from the flag dimension " + std::to_string(d));
    for (long m = d + 1; m <= d + 2; ++m)
        require(poly.eval(Rational(m)) == Rational(weyl_dim_value(p, m)),
                errc::degree_mismatch,
                "interpolation fails to reproduce the section count");
    return poly;
}

Integer flag_degree(const Partition& p) {
    UPoly poly = weyl_dim_polynomial(p);
    long d = flag_dimension(p);
    Rational lead = poly.c[static_cast<size_t>(d)];
    Rational fact = 1;
    for (long i = 2; i <= d; ++i) fact *= i;
    Rational delta = fact * lead;
    require(is_integer(delta) && delta > 0, errc::internal,
            "flag degree is not a positive integer");
    return delta.get_num();
}

Rational constant_A(const Partition& p) {
    long d = flag_dimension(p);
    Integer delta = flag_degree(p);
    Rational prod = 1;
    for (size_t i = 0; i + 1 < p.partial.size(); ++i)
        prod *= Rational(p.total - p.partial[i]);
    return prod * Rational(d) * Rational(delta) /
           Rational(kFieldDegree * p.total);
}

std::optional<Rational> closed_form_degree_variant(const Partition& p) {
    if (p.parts.size() != 2) return std::nullopt;
    int np = p.parts[0]; // N - p
    int pp = p.parts[1]; // p
    long d = flag_dimension(p);
    Rational num = 1;
    for (int i = 1; i <= pp - 1; ++i) {
        Rational f = 1;
        for (int t = 2; t <= i; ++t) f *= t;
        num *= f;
    }
    Rational dm1_fact = 1;
    for (long t = 2; t <= d - 1; ++t) dm1_fact *= t;
    num *= dm1_fact;
    Rational den = 1;
    for (int i = np; i <= np + pp - 1; ++i) {
        Rational f = 1;
        for (int t = 2; t <= i; ++t) f *= t;
        den *= f;
    }
    return num / den;
}

Rational constant_A_full_product(const Partition& p) {
    long d = flag_dimension(p);
    Integer delta = flag_degree(p);
    Rational prod = 1;
    for (size_t i = 0; i < p.partial.size(); ++i)
        prod *= Rational(p.total - p.partial[i]);
    return prod * Rational(d) * Rational(delta) /
           Rational(kFieldDegree * p.total);
}

std::vector<Partition> compositions(int n) {
    require(n >= 1, errc::invalid_argument, "need N >= 1");
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem) -> void {
        if (rem == 0) {
            out.push_back(make_partition(cur));
            return;
        }
        for (int x = 1; x <= rem; ++x) {
            cur.push_back(x);
            self(self, rem - x);
            cur.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

} // namespace heightlab
