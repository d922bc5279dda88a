#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "heightlab/hermlat.hpp"
#include "heightlab/jsonio.hpp"
#include "heightlab/qmatrix.hpp"
#include "heightlab/sampling.hpp"
#include "heightlab/upoly.hpp"

using namespace heightlab;

namespace {

Rational rat(long n, long d = 1) {
    Rational q(n, d);
    q.canonicalize();
    return q;
}

} // namespace

TEST_CASE("determinant, inverse, solve") {
    QMatrix a{{rat(2), rat(1)}, {rat(1), rat(1)}};
    CHECK(a.det() == 1);
    QMatrix inv = a.inverse();
    CHECK(a * inv == QMatrix::identity(2));
    auto x = a.solve({rat(3), rat(2)});
    CHECK(x[0] == 1);
    CHECK(x[1] == 1);
    QMatrix sing{{rat(1), rat(2)}, {rat(2), rat(4)}};
    CHECK(sing.det() == 0);
    CHECK_THROWS_AS(sing.inverse(), error);
}

TEST_CASE("characteristic polynomial") {
    QMatrix h{{rat(1), rat(0)}, {rat(0), rat(-1)}};
    auto c = h.char_poly(); // t^2 - 1
    CHECK(c.size() == 3);
    CHECK(c[0] == -1);
    CHECK(c[1] == 0);
    CHECK(c[2] == 1);
    QMatrix e{{rat(0), rat(1)}, {rat(0), rat(0)}};
    auto cn = e.char_poly(); // t^2
    CHECK(cn[0] == 0);
    CHECK(cn[1] == 0);
}

TEST_CASE("compound matrices multiply") {
    Rng rng(3);
    for (int rep = 0; rep < 20; ++rep) {
        QMatrix a(3, 3), b(3, 3);
        do {
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) {
                    a.at(i, j) = random_rational(rng, 3, 2);
                    b.at(i, j) = random_rational(rng, 3, 2);
                }
        } while (a.det() == 0 || b.det() == 0);
        CHECK((a * b).compound(2) == a.compound(2) * b.compound(2));
    }
}

TEST_CASE("sturm root counting and certified bounds") {
    // (t-1)(t-2)(t-3)
    UPoly p = upoly_from({rat(-6), rat(11), rat(-6), rat(1)});
    CHECK(sturm_count_roots(p, rat(0), rat(4)) == 3);
    CHECK(sturm_count_roots(p, rat(1), rat(2)) == 1);
    CHECK(sturm_count_roots(p, rat(3), rat(10)) == 0);
    Rational up = largest_root_upper_bound(p, rat(0), rat(100), 40);
    CHECK(up >= 3);
    CHECK(up < rat(31, 10));
    // repeated roots still count distinctly
    UPoly sq = upoly_from({rat(1), rat(-2), rat(1)}); // (t-1)^2
    CHECK(sturm_count_roots(sq, rat(0), rat(2)) == 1);
}

TEST_CASE("exact interpolation") {
    // m -> binomial(m+2, 2)
    std::vector<Rational> xs, ys;
    for (long m = 0; m <= 2; ++m) {
        xs.push_back(rat(m));
        ys.push_back(rat((m + 1) * (m + 2) / 2));
    }
    UPoly p = interpolate(xs, ys);
    CHECK(p.degree() == 2);
    CHECK(p.eval(rat(10)) == rat(66));
    CHECK(p.c[2] == rat(1, 2));
}

TEST_CASE("lattice validation") {
    CHECK_NOTHROW((HermitianLattice(QMatrix::identity(3))));
    QMatrix d{{rat(2), rat(0), rat(0)},
              {rat(0), rat(1), rat(0)},
              {rat(0), rat(0), rat(1)}};
    CHECK_NOTHROW((HermitianLattice(d)));
    QMatrix bad{{rat(1), rat(2)}, {rat(2), rat(1)}}; // det -3
    CHECK_THROWS_AS((HermitianLattice(bad)), error);
    QMatrix asym{{rat(1), rat(2)}, {rat(0), rat(1)}};
    CHECK_THROWS_AS((HermitianLattice(asym)), error);
    try {
        HermitianLattice l(bad);
    } catch (const error& e) {
        CHECK(e.code() == errc::not_positive_definite);
        CHECK(std::string(e.what()).find("minor 2") != std::string::npos);
    }
}

TEST_CASE("degree values") {
    CHECK(HermitianLattice(QMatrix::identity(4)).arakelov_degree().is_zero());
    QMatrix four{{rat(4)}};
    // generator of norm 2: degree -ln 2
    CHECK(HermitianLattice(four).arakelov_degree() ==
          -LogValue::log(Rational(2)));
    // scaling the Gram by c in rank N drops the degree by (N/2) ln c
    Rng rng(5);
    for (int i = 0; i < 20; ++i) {
        HermitianLattice l(random_spd_gram(rng, 3, 10, 10));
        Rational c = random_positive_rational(rng, 9, 9);
        LogValue lhs = l.scale(c).arakelov_degree();
        LogValue rhs = l.arakelov_degree() - LogValue::half_log(c).scale_int(3);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("dual and direct sum") {
    CHECK(HermitianLattice(QMatrix::identity(3)).dual().gram() ==
          QMatrix::identity(3));
    QMatrix four{{rat(4)}};
    HermitianLattice l4(four);
    CHECK(l4.dual().gram().at(0, 0) == rat(1, 4));
    CHECK(l4.dual().arakelov_degree() == LogValue::log(Rational(2)));
    QMatrix two{{rat(2)}}, eight{{rat(8)}};
    HermitianLattice sum =
        HermitianLattice::direct_sum(HermitianLattice(two), HermitianLattice(eight));
    // -(1/2) ln 16 = -2 ln 2
    CHECK(sum.arakelov_degree() == LogValue::log(Rational(2)).scale_int(-2));
}

TEST_CASE("dual degree cancels exactly on random lattices") {
    Rng rng(7);
    for (int i = 0; i < 100; ++i) {
        int n = 1 + static_cast<int>(rng.uniform(0, 4));
        HermitianLattice l(random_spd_gram(rng, n, 20, 20));
        CHECK((l.arakelov_degree() + l.dual().arakelov_degree()).is_zero());
        CHECK(l.dual().dual() == l);
    }
}

TEST_CASE("degree additive over direct sums") {
    Rng rng(8);
    for (int i = 0; i < 50; ++i) {
        HermitianLattice a(random_spd_gram(rng, 2, 20, 20));
        HermitianLattice b(random_spd_gram(rng, 3, 20, 20));
        CHECK(HermitianLattice::direct_sum(a, b).arakelov_degree() ==
              a.arakelov_degree() + b.arakelov_degree());
    }
}

TEST_CASE("lattice JSON round trip") {
    Rng rng(10);
    HermitianLattice l(random_spd_gram(rng, 3, 20, 20));
    HermitianLattice back = lattice_from_json(lattice_to_json(l));
    CHECK(back == l);
    CHECK_THROWS_AS(lattice_from_json("{\"rank\":2}"), error);
}

TEST_CASE("unimodular base change preserves the degree") {
    Rng rng(9);
    for (int i = 0; i < 100; ++i) {
        int n = 2 + static_cast<int>(rng.uniform(0, 2));
        HermitianLattice l(random_spd_gram(rng, n, 20, 20));
        QMatrix u = random_sl_matrix(rng, n, 6);
        HermitianLattice moved(u.transpose() * l.gram() * u);
        CHECK(moved.arakelov_degree() == l.arakelov_degree());
    }
}
