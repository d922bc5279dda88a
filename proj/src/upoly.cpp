#include "heightlab/upoly.hpp"

#include "heightlab/errors.hpp"

namespace heightlab {

int UPoly::degree() const {
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
        if (c[static_cast<size_t>(i)] != 0) return i;
    return -1;
}

Rational UPoly::eval(const Rational& x) const {
    Rational r = 0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
        r = r * x + c[static_cast<size_t>(i)];
    return r;
}

UPoly UPoly::derivative() const {
    UPoly d;
    for (size_t i = 1; i < c.size(); ++i)
        d.c.push_back(Rational(static_cast<long>(i)) * c[i]);
    d.normalize();
    return d;
}

void UPoly::normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

UPoly upoly_from(const std::vector<Rational>& ascending) {
    UPoly p{ascending};
    p.normalize();
    return p;
}

UPoly upoly_rem(const UPoly& a, const UPoly& b) {
    require(!b.is_zero(), errc::invalid_argument, "polynomial division by zero");
    UPoly r = a;
    r.normalize();
    int db = b.degree();
    const Rational& lead_b = b.c[static_cast<size_t>(db)];
    while (r.degree() >= db) {
        int dr = r.degree();
        Rational f = r.c[static_cast<size_t>(dr)] / lead_b;
        for (int i = 0; i <= db; ++i)
            r.c[static_cast<size_t>(dr - db + i)] -= f * b.c[static_cast<size_t>(i)];
        r.normalize();
    }
    return r;
}

namespace {

int sign_of(const Rational& x) { return x > 0 ? 1 : (x == 0 ? 0 : -1); }

std::vector<UPoly> sturm_chain(const UPoly& p) {
    std::vector<UPoly> chain;
    UPoly a = p;
    a.normalize();
    if (a.is_zero()) return chain;
    chain.push_back(a);
    UPoly b = a.derivative();
    while (!b.is_zero()) {
        chain.push_back(b);
        UPoly r = upoly_rem(a, b);
        for (auto& x : r.c) x = -x;
        r.normalize();
        a = b;
        b = r;
    }
    return chain;
}

int sign_variations(const std::vector<UPoly>& chain, const Rational& x) {
    int v = 0, prev = 0;
    for (const auto& p : chain) {
        int s = sign_of(p.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

} // namespace

int sturm_count_roots(const UPoly& p, const Rational& a, const Rational& b) {
    require(a <= b, errc::invalid_argument, "empty interval");
    auto chain = sturm_chain(p);
    if (chain.empty()) fail(errc::invalid_argument, "zero polynomial");
    return sign_variations(chain, a) - sign_variations(chain, b);
}

Rational largest_root_upper_bound(const UPoly& charpoly, const Rational& lo,
                                  const Rational& hi, int iters) {
    auto chain = sturm_chain(charpoly);
    require(!chain.empty(), errc::invalid_argument, "zero polynomial");
    Rational a = lo, b = hi;
    int at_b = sign_variations(chain, b);
    for (int i = 0; i < iters; ++i) {
        Rational mid = (a + b) / 2;
        // no roots in (mid, b] means mid still dominates every root
        if (sign_variations(chain, mid) - at_b == 0)
            b = mid;
        else
            a = mid;
    }
    return b;
}

UPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    require(xs.size() == ys.size() && !xs.empty(), errc::invalid_argument,
            "interpolation needs matching nonempty point lists");
    size_t n = xs.size();
    // divided differences
    std::vector<Rational> dd = ys;
    for (size_t level = 1; level < n; ++level)
        for (size_t i = n - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
            if (i == level) break;
        }
    // Horner expansion of the Newton form
    UPoly p;
    p.c.assign(1, dd[n - 1]);
    for (size_t k = n - 1; k-- > 0;) {
        // p = p * (t - xs[k]) + dd[k]
        UPoly q;
        q.c.assign(p.c.size() + 1, Rational(0));
        for (size_t i = 0; i < p.c.size(); ++i) {
            q.c[i + 1] += p.c[i];
            q.c[i] -= xs[k] * p.c[i];
        }
        q.c[0] += dd[k];
        p = q;
    }
    p.normalize();
    return p;
}

} // namespace heightlab
