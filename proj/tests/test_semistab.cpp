#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "heightlab/lp.hpp"
#include "heightlab/sampling.hpp"
#include "heightlab/semistab.hpp"
#include "oracles.hpp"

using namespace heightlab;

namespace {

Rational rat(long n, long d = 1) {
    Rational q(n, d);
    q.canonicalize();
    return q;
}

PointInP adjoint_point(int n, const QMatrix& x) {
    return point_from_matrix(rep_adjoint(n), x);
}

} // namespace

TEST_CASE("point construction and normalization") {
    auto rep = rep_standard(2);
    PointInP p = make_point(rep, {Integer(2), Integer(4)});
    CHECK(p.covector == std::vector<Integer>{Integer(1), Integer(2)});
    CHECK(p.was_normalized);
    CHECK_THROWS_AS(make_point(rep, {Integer(0), Integer(0)}), error);
    CHECK_THROWS_AS(make_point(rep_standard(1), {Integer(1)}), error);
    CHECK_THROWS_AS(make_point(rep, {Integer(1)}), error);
}

TEST_CASE("trace-form covectors for the adjoint") {
    // the line of E12 pairs nontrivially only with E21
    QMatrix e12{{rat(0), rat(1)}, {rat(0), rat(0)}};
    PointInP p = adjoint_point(2, e12);
    CHECK(p.covector == std::vector<Integer>{Integer(0), Integer(0), Integer(1)});
    // H = diag(1,-1) pairs to (0, 2, 0), primitive (0, 1, 0)
    QMatrix h{{rat(1), rat(0)}, {rat(0), rat(-1)}};
    PointInP ph = adjoint_point(2, h);
    CHECK(ph.covector == std::vector<Integer>{Integer(0), Integer(1), Integer(0)});
    // round trip through the trace form recovers the line
    QMatrix back = matrix_from_point(ph);
    CHECK(back == rat(1, 2) * h);
    CHECK_THROWS_AS(adjoint_point(2, QMatrix{{rat(1), rat(0)}, {rat(0), rat(1)}}),
                    error); // nonzero trace
}

TEST_CASE("one-parameter subgroups") {
    CHECK_NOTHROW(make_one_ps({1, -1}));
    CHECK_NOTHROW(make_one_ps({0, 0}));
    CHECK_THROWS_AS(make_one_ps({1, 1}), error);
}

TEST_CASE("numerical pairing against the subgroup") {
    QMatrix e12{{rat(0), rat(1)}, {rat(0), rat(0)}};
    PointInP p = adjoint_point(2, e12); // active dual weight (1,-1)
    CHECK(hm_weight(p, make_one_ps({1, -1})) == -2);
    CHECK(hm_weight(p, make_one_ps({-1, 1})) == 2);
    CHECK(hm_weight(p, make_one_ps({0, 0})) == 0);

    PointInP q = make_point(rep_dual(rep_standard(2)), {Integer(1), Integer(1)});
    // stored covector of the dual representation: active weights of its
    // dual are the standard ones; pairings with (1,-1) are {1,-1}
    CHECK(hm_weight(q, make_one_ps({1, -1})) == 1);

    PointInP std_pt = make_point(rep_standard(2), {Integer(1), Integer(1)});
    CHECK(hm_weight(std_pt, make_one_ps({1, -1})) == 1);
    CHECK_THROWS_AS(hm_weight(std_pt, make_one_ps({1, 0, -1})), error);
}

TEST_CASE("torus test on adjoint points") {
    // only the H coordinate: the single active weight is zero
    PointInP ph = make_point(rep_adjoint(2), {Integer(0), Integer(1), Integer(0)});
    TorusReport th = torus_semistable(ph);
    CHECK(th.semistable);

    // only the E12 coordinate: active weight (-1, 1) misses the diagonal
    PointInP pe = make_point(rep_adjoint(2), {Integer(1), Integer(0), Integer(0)});
    TorusReport te = torus_semistable(pe);
    CHECK_FALSE(te.semistable);
    CHECK(te.separating.r == std::vector<long>{-1, 1});
    for (const auto& w : te.active) {
        long s = 0;
        for (size_t k = 0; k < w.size(); ++k) s += w[k] * te.separating.r[k];
        CHECK(s > 0);
    }

    // E12 + E21 support: weights (1,-1) and (-1,1) straddle zero
    PointInP pm = make_point(rep_adjoint(2), {Integer(1), Integer(0), Integer(1)});
    CHECK(torus_semistable(pm).semistable);
}

TEST_CASE("torus test on the standard covector") {
    // active dual weights (-1,0), (0,-1); their hull crosses the diagonal
    // at -(1/2)(1,1), so the special-linear torus does not destabilize
    PointInP p = make_point(rep_standard(2), {Integer(1), Integer(1)});
    TorusReport t = torus_semistable(p);
    CHECK(t.semistable);
    // a single standard coordinate is torus-unstable
    PointInP p1 = make_point(rep_standard(2), {Integer(1), Integer(0)});
    TorusReport t1 = torus_semistable(p1);
    CHECK_FALSE(t1.semistable);
}

TEST_CASE("torus test agrees with the brute-force hull oracle") {
    Rng rng(31);
    std::vector<RepPtr> reps = {rep_adjoint(2), rep_adjoint(3),
                                rep_sym(2, rep_standard(3)),
                                rep_tensor(rep_adjoint(2), rep_standard(2)),
                                rep_wedge(2, rep_standard(4))};
    int checked = 0;
    for (int i = 0; i < 500; ++i) {
        const auto& rep = reps[static_cast<size_t>(i) % reps.size()];
        int dim = rep_dimension(*rep);
        std::vector<Integer> u(static_cast<size_t>(dim), Integer(0));
        int support = 1 + static_cast<int>(rng.uniform(0, std::min(dim, 12) - 1));
        for (int s = 0; s < support; ++s)
            u[static_cast<size_t>(rng.uniform(0, dim - 1))] =
                Integer(rng.uniform(-4, 4));
        bool nonzero = false;
        for (const auto& z : u) nonzero = nonzero || z != 0;
        if (!nonzero) u[0] = 1;
        PointInP p = make_point(rep, u);
        if (active_dual_weights(p).size() > 12) continue;
        TorusReport t = torus_semistable(p);
        bool oracle = oracles::hull_meets_diagonal_bruteforce(t.active);
        CHECK(t.semistable == oracle);
        ++checked;
    }
    CHECK(checked > 400);
}

TEST_CASE("instability search finds triangular certificates") {
    // already torus-unstable: certificate with the identity translate
    QMatrix e12{{rat(0), rat(1)}, {rat(0), rat(0)}};
    PointInP p = adjoint_point(2, e12);
    auto cert = instability_search(p, 8, 1);
    REQUIRE(cert.has_value());
    CHECK(cert->g == QMatrix::identity(2));
    CHECK(verify_instability(p, *cert));

    // conjugated by a transvection: the deterministic branch recovers it
    QMatrix v{{rat(1), rat(0)}, {rat(1), rat(1)}};
    QMatrix x = v * e12 * v.inverse();
    PointInP pc = adjoint_point(2, x);
    auto cert2 = instability_search(pc, 8, 1);
    REQUIRE(cert2.has_value());
    CHECK(verify_instability(pc, *cert2));

    // semisimple H: inconclusive at any budget
    QMatrix h{{rat(1), rat(0)}, {rat(0), rat(-1)}};
    CHECK_FALSE(instability_search(adjoint_point(2, h), 60, 5).has_value());
}

TEST_CASE("instability certificates verify on random nilpotents") {
    Rng rng(32);
    for (int n = 2; n <= 3; ++n) {
        for (int i = 0; i < 25; ++i) {
            QMatrix x = random_nilpotent(rng, n, 6);
            PointInP p = adjoint_point(n, x);
            auto cert = instability_search(p, 64, 7 + i);
            REQUIRE(cert.has_value());
            CHECK(verify_instability(p, *cert));
        }
    }
}

TEST_CASE("instability certificates on rank-4 and rational nilpotents") {
    Rng rng(36);
    // denominators and larger rank stress the kernel-filtration branch
    for (int i = 0; i < 10; ++i) {
        QMatrix x = random_nilpotent(rng, 4, 5);
        Rational c = random_positive_rational(rng, 7, 5);
        x = c * x;
        PointInP p = point_from_matrix(rep_adjoint(4), x);
        auto cert = instability_search(p, 32, 100 + i);
        REQUIRE(cert.has_value());
        CHECK(verify_instability(p, *cert));
    }
}

TEST_CASE("adjoint semistability by characteristic polynomial") {
    QMatrix e12{{rat(0), rat(1)}, {rat(0), rat(0)}};
    CHECK_FALSE(adjoint_semistable(e12));
    QMatrix h{{rat(1), rat(0)}, {rat(0), rat(-1)}};
    CHECK(adjoint_semistable(h));
    CHECK_THROWS_AS(adjoint_semistable(QMatrix{{rat(0), rat(0)}, {rat(0), rat(0)}}),
                    error);
    CHECK_THROWS_AS(adjoint_semistable(QMatrix{{rat(1), rat(0)}, {rat(0), rat(1)}}),
                    error);
}

TEST_CASE("matrix nilpotency matches nilpotency of its bracket action") {
    Rng rng(33);
    for (int n = 2; n <= 3; ++n) {
        auto basis = adjoint_basis(n);
        int d = static_cast<int>(basis.size());
        for (int i = 0; i < 40; ++i) {
            QMatrix x = (i % 3 == 0) ? random_nilpotent(rng, n, 4)
                                     : random_traceless(rng, n, 4, 3);
            // ad(x) on the trace-zero basis
            QMatrix ad(d, d);
            for (int q = 0; q < d; ++q) {
                QMatrix y = x * basis[static_cast<size_t>(q)] -
                            basis[static_cast<size_t>(q)] * x;
                auto coords = adjoint_coords(y);
                for (int r = 0; r < d; ++r) ad.at(r, q) = coords[static_cast<size_t>(r)];
            }
            auto cx = x.char_poly();
            auto cad = ad.char_poly();
            bool x_nilp = true;
            for (int k = 0; k < n; ++k)
                if (cx[static_cast<size_t>(k)] != 0) x_nilp = false;
            bool ad_nilp = true;
            for (int k = 0; k < d; ++k)
                if (cad[static_cast<size_t>(k)] != 0) ad_nilp = false;
            CHECK(x_nilp == ad_nilp);
        }
    }
}

TEST_CASE("sparse polynomial primitive clearing") {
    MPoly p(2);
    Rational half(1, 2), third(1, 3);
    half.canonicalize();
    third.canonicalize();
    p.add_term({1, 0}, half);
    p.add_term({0, 1}, third);
    MPoly prim = p.primitive_integer();
    CHECK(prim.has_integer_coefficients());
    MPoly expect(2);
    expect.add_term({1, 0}, 3);
    expect.add_term({0, 1}, 2);
    CHECK(prim == expect);
    // sign is preserved and content divided out
    MPoly q(1);
    q.add_term({2}, -6);
    q.add_term({0}, -9);
    MPoly qp = q.primitive_integer();
    MPoly qe(1);
    qe.add_term({2}, -2);
    qe.add_term({0}, -3);
    CHECK(qp == qe);
}

TEST_CASE("adjoint invariant generators") {
    auto gens = adjoint_invariants(2);
    REQUIRE(gens.gens.size() == 1);
    CHECK(gens.gens[0].degree == 2);
    CHECK(gens.gens[0].poly.has_integer_coefficients());
    // value -1 on the (primitive) H covector, 0 on the nilpotent line
    PointInP ph = make_point(rep_adjoint(2), {Integer(0), Integer(1), Integer(0)});
    auto c = invariant_certificate(ph, gens);
    REQUIRE(c.has_value());
    CHECK(c->first == 0);
    CHECK(c->second == -1);
    QMatrix e12{{rat(0), rat(1)}, {rat(0), rat(0)}};
    CHECK_FALSE(invariant_certificate(adjoint_point(2, e12), gens).has_value());

    auto gens3 = adjoint_invariants(3);
    REQUIRE(gens3.gens.size() == 2);
    CHECK(gens3.gens[0].degree == 2);
    CHECK(gens3.gens[1].degree == 3);
    QMatrix d3{{rat(1), rat(0), rat(0)},
               {rat(0), rat(1), rat(0)},
               {rat(0), rat(0), rat(-2)}};
    CHECK(invariant_certificate(adjoint_point(3, d3), gens3).has_value());
}

TEST_CASE("invariance sanity check rejects non-invariants") {
    InvariantGeneratorSet bogus;
    bogus.nvars = 3;
    MPoly p(3);
    p.add_term({1, 0, 0}, 1); // a coordinate is not conjugation-invariant
    bogus.gens.push_back(InvariantGenerator{p, 1});
    PointInP ph = make_point(rep_adjoint(2), {Integer(0), Integer(1), Integer(0)});
    CHECK_THROWS_AS(invariant_certificate(ph, bogus), error);
}

TEST_CASE("characteristic test matches the invariant route") {
    Rng rng(34);
    for (int n = 2; n <= 4; ++n) {
        auto rep = rep_adjoint(n);
        auto gens = adjoint_invariants(n);
        int random_count = 50, nilp_count = 12;
        for (int i = 0; i < random_count + nilp_count; ++i) {
            QMatrix x = i < random_count ? random_traceless(rng, n, 6, 4)
                                         : random_nilpotent(rng, n, 5);
            bool zero = true;
            for (int r = 0; r < n && zero; ++r)
                for (int c2 = 0; c2 < n; ++c2)
                    if (x.at(r, c2) != 0) { zero = false; break; }
            if (zero) continue;
            PointInP p = point_from_matrix(rep, x);
            bool by_char = adjoint_semistable(x);
            bool by_inv = invariant_certificate(p, gens).has_value();
            CHECK(by_char == by_inv);
        }
    }
}

TEST_CASE("pairing is symmetric under simultaneous permutation") {
    Rng rng(35);
    auto rep = rep_adjoint(3);
    QMatrix x = random_traceless(rng, 3, 5, 3);
    PointInP p = point_from_matrix(rep, x);
    OnePS lam = make_one_ps({2, -1, -1});
    long base = hm_weight(p, lam);
    // permuting the subgroup and conjugating the point by the matching
    // permutation matrix leaves the pairing unchanged
    std::vector<int> perm = {1, 2, 0};
    QMatrix pm(3, 3);
    for (int i = 0; i < 3; ++i) pm.at(perm[static_cast<size_t>(i)], i) = 1;
    QMatrix xp = pm * x * pm.inverse();
    PointInP pp = point_from_matrix(rep, xp);
    std::vector<long> rp(3);
    for (int i = 0; i < 3; ++i) rp[static_cast<size_t>(perm[static_cast<size_t>(i)])] =
        lam.r[static_cast<size_t>(i)];
    CHECK(hm_weight(pp, make_one_ps(rp)) == base);
}

TEST_CASE("exact simplex feasibility") {
    // x + y = 1, x - y = 0 has x = y = 1/2
    QMatrix a{{rat(1), rat(1)}, {rat(1), rat(-1)}};
    auto res = solve_feasibility(a, {rat(1), rat(0)});
    REQUIRE(res.feasible);
    CHECK(res.x[0] == rat(1, 2));
    CHECK(res.x[1] == rat(1, 2));
    // x + y = -1 with x, y >= 0 is infeasible, with a Farkas certificate
    QMatrix b{{rat(1), rat(1)}};
    auto inf = solve_feasibility(b, {rat(-1)});
    CHECK_FALSE(inf.feasible);
    REQUIRE(inf.farkas.size() == 1);
    CHECK(inf.farkas[0] < 0);
}
