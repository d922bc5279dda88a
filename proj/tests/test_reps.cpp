#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <numeric>

#include "heightlab/enumeration.hpp"
#include "heightlab/reps.hpp"
#include "heightlab/sampling.hpp"

using namespace heightlab;

namespace {

Rational rat(long n, long d = 1) {
    Rational q(n, d);
    q.canonicalize();
    return q;
}

QMatrix random_invertible(Rng& rng, int n) {
    QMatrix g(n, n);
    do {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) g.at(i, j) = random_rational(rng, 3, 2);
    } while (g.det() == 0);
    return g;
}

} // namespace

TEST_CASE("dimensions and weights of the basic constructors") {
    auto sym2 = rep_sym(2, rep_standard(2));
    CHECK(rep_dimension(*sym2) == 3);
    WeightSystem ws = rep_weights(*sym2);
    CHECK(ws.weights ==
          std::vector<std::vector<long>>{{2, 0}, {1, 1}, {0, 2}});

    auto wedge = rep_wedge(2, rep_standard(3));
    CHECK(rep_dimension(*wedge) == 3);
    CHECK(rep_weights(*wedge).weights ==
          std::vector<std::vector<long>>{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}});

    auto ad2 = rep_adjoint(2);
    CHECK(rep_dimension(*ad2) == 3);
    // basis order (E12, H, E21)
    CHECK(rep_weights(*ad2).weights ==
          std::vector<std::vector<long>>{{1, -1}, {0, 0}, {-1, 1}});
    CHECK(rep_weights(*ad2).labels ==
          std::vector<std::string>{"E12", "H", "E21"});
}

TEST_CASE("homogeneity degrees") {
    CHECK(homogeneity_degrees(*rep_sym(3, rep_standard(2))) ==
          std::set<long>{3});
    CHECK(homogeneity_degrees(*rep_adjoint(2)) == std::set<long>{0});
    CHECK(homogeneity_degrees(*rep_adjoint(4)) == std::set<long>{0});
    auto ds = rep_direct_sum(rep_sym(2, rep_standard(2)),
                             rep_sym(3, rep_standard(2)));
    CHECK(homogeneity_degrees(*ds) == std::set<long>{2, 3});
    CHECK_FALSE(is_homogeneous(*ds));
    long a = 0;
    CHECK(is_homogeneous(*rep_dual(rep_standard(3)), &a));
    CHECK(a == -1);
}

TEST_CASE("tree validation") {
    CHECK_THROWS_AS(rep_wedge(4, rep_standard(3)), error);
    CHECK_THROWS_AS(rep_tensor(rep_standard(2), rep_standard(3)), error);
    CHECK_THROWS_AS(rep_adjoint(1), error);
    CHECK_NOTHROW(rep_det_power(2, -3));
}

TEST_CASE("matrix action examples") {
    Rng rng(21);
    QMatrix g = random_invertible(rng, 3);
    CHECK(matrix_action(*rep_standard(3), g) == g);

    QMatrix shear{{rat(1), rat(1)}, {rat(0), rat(1)}};
    QMatrix det1 = matrix_action(*rep_det_power(2, 1), shear);
    CHECK(det1.rows() == 1);
    CHECK(det1.at(0, 0) == 1);

    // adjoint action of diag(2, 1/2) on (E12, H, E21) is diag(4, 1, 1/4)
    QMatrix d{{rat(2), rat(0)}, {rat(0), rat(1, 2)}};
    QMatrix act = matrix_action(*rep_adjoint(2), d);
    QMatrix expect{{rat(4), rat(0), rat(0)},
                   {rat(0), rat(1), rat(0)},
                   {rat(0), rat(0), rat(1, 4)}};
    CHECK(act == expect);
}

TEST_CASE("functoriality of the action") {
    Rng rng(22);
    std::vector<RepPtr> trees = {
        rep_standard(3),
        rep_dual(rep_standard(3)),
        rep_sym(2, rep_standard(3)),
        rep_sym(3, rep_standard(2)),
        rep_wedge(2, rep_standard(3)),
        rep_tensor(rep_standard(2), rep_dual(rep_standard(2))),
        rep_direct_sum(rep_standard(2), rep_det_power(2, 2)),
        rep_sym(2, rep_dual(rep_standard(2))),
        rep_adjoint(2),
        rep_adjoint(3),
        rep_wedge(2, rep_sym(2, rep_standard(2))),
    };
    for (const auto& t : trees) {
        int n = t->group_rank;
        for (int i = 0; i < 50; ++i) {
            QMatrix g = random_invertible(rng, n);
            QMatrix h = random_invertible(rng, n);
            CHECK(matrix_action(*t, g * h) ==
                  matrix_action(*t, g) * matrix_action(*t, h));
        }
    }
}

TEST_CASE("induced Gram examples") {
    // standard representation: the Gram passes through
    Rng rng(23);
    QMatrix g0 = random_spd_gram(rng, 3, 10, 10);
    CHECK(induced_gram_raw(*rep_standard(3), g0) == g0);

    // wedge^2 of a rank-2 diagonal: the single 2x2 minor
    QMatrix diag{{rat(3), rat(0)}, {rat(0), rat(5)}};
    QMatrix w = induced_gram_raw(*rep_wedge(2, rep_standard(2)), diag);
    CHECK(w.rows() == 1);
    CHECK(w.at(0, 0) == 15);

    // adjoint of the identity on (E12, H, E21): diag(1, 2, 1)
    QMatrix ad = induced_gram_raw(*rep_adjoint(2), QMatrix::identity(2));
    QMatrix expect{{rat(1), rat(0), rat(0)},
                   {rat(0), rat(2), rat(0)},
                   {rat(0), rat(0), rat(1)}};
    CHECK(ad == expect);

    // quotient metric on Sym^2 of the identity: monomial x1x2 has norm^2 1/2
    QMatrix s = induced_gram_raw(*rep_sym(2, rep_standard(2)), QMatrix::identity(2));
    QMatrix sexpect{{rat(1), rat(0), rat(0)},
                    {rat(0), rat(1, 2), rat(0)},
                    {rat(0), rat(0), rat(1)}};
    CHECK(s == sexpect);
}

TEST_CASE("sym quotient metric matches the orthogonal projection route") {
    // the dual-restriction computation must reproduce the textbook
    // definition: the norm of a class is the norm of the projection of any
    // representative onto the orthogonal complement of the kernel
    Rng rng(29);
    for (int d = 2; d <= 3; ++d) {
        auto monos = monomials_lex_desc(d, 2);
        std::map<std::vector<int>, int> index;
        for (size_t i = 0; i < monos.size(); ++i)
            index[monos[i]] = static_cast<int>(i);
        auto type_of = [&](int i, int j) {
            std::vector<int> t(static_cast<size_t>(d), 0);
            ++t[static_cast<size_t>(i)];
            ++t[static_cast<size_t>(j)];
            return t;
        };
        for (int iter = 0; iter < 10; ++iter) {
            QMatrix g = random_spd_gram(rng, d, 8, 8);
            QMatrix m = QMatrix::kronecker(g, g);
            // symmetrized sums span the complement of the kernel
            QMatrix s(d * d, static_cast<int>(monos.size()));
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    s.at(i * d + j, index.at(type_of(i, j))) = 1;
            QMatrix mid = (s.transpose() * m * s).inverse();
            QMatrix proj = m * s * mid * s.transpose() * m;
            QMatrix ind = induced_gram_raw(*rep_sym(2, rep_standard(d)), g);
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    for (int k = 0; k < d; ++k)
                        for (int l = 0; l < d; ++l)
                            CHECK(proj.at(i * d + j, k * d + l) ==
                                  ind.at(index.at(type_of(i, j)),
                                         index.at(type_of(k, l))));
        }
    }
}

TEST_CASE("metric transport is equivariant") {
    Rng rng(24);
    std::vector<RepPtr> trees = {
        rep_standard(3),
        rep_dual(rep_standard(2)),
        rep_sym(2, rep_standard(3)),
        rep_wedge(2, rep_standard(3)),
        rep_tensor(rep_standard(2), rep_dual(rep_standard(2))),
        rep_sym(2, rep_dual(rep_standard(2))),
        rep_adjoint(2),
        rep_adjoint(3),
        rep_direct_sum(rep_adjoint(2), rep_det_power(2, 1)),
    };
    for (const auto& t : trees) {
        int n = t->group_rank;
        for (int i = 0; i < 50; ++i) {
            QMatrix g = random_spd_gram(rng, n, 8, 8);
            QMatrix u = random_invertible(rng, n);
            QMatrix lhs = induced_gram_raw(*t, u.transpose() * g * u);
            QMatrix a = matrix_action(*t, u);
            CHECK(lhs == a.transpose() * induced_gram_raw(*t, g) * a);
        }
    }
}

TEST_CASE("scale acts as a plain scalar on the induced Gram") {
    Rng rng(25);
    std::vector<RepPtr> trees = {rep_sym(2, rep_standard(2)),
                                 rep_wedge(2, rep_standard(3)),
                                 rep_adjoint(3)};
    for (const auto& t : trees) {
        QMatrix g = random_spd_gram(rng, t->group_rank, 10, 10);
        HermitianLattice l(g);
        Rational s = rat(7, 3);
        CompactifiedRep plain{t, rat(1)};
        CompactifiedRep scaled{t, s};
        CHECK(induced_lattice(scaled, l).gram() ==
              s * induced_lattice(plain, l).gram());
    }
}

TEST_CASE("homogeneous decomposition is exactly orthogonal") {
    Rng rng(26);
    auto tree = rep_direct_sum(rep_standard(2), rep_dual(rep_standard(2)));
    for (int i = 0; i < 50; ++i) {
        HermitianLattice l(random_spd_gram(rng, 2, 12, 12));
        auto comps = decompose_homogeneous(CompactifiedRep{tree, rat(1)}, l);
        REQUIRE(comps.size() == 2);
        CHECK(comps[0].degree == -1);
        CHECK(comps[1].degree == 1);
    }
    auto single = decompose_homogeneous(
        CompactifiedRep{rep_sym(2, rep_standard(2)), rat(1)},
        HermitianLattice(QMatrix::identity(2)));
    CHECK(single.size() == 1);
    CHECK(single[0].degree == 2);
    auto ad3 = decompose_homogeneous(CompactifiedRep{rep_adjoint(3), rat(1)},
                                     HermitianLattice(QMatrix::identity(3)));
    CHECK(ad3.size() == 1);
    CHECK(ad3[0].degree == 0);
}

TEST_CASE("determinant twist: exact equality for standard and wedge") {
    Rng rng(27);
    for (int i = 0; i < 20; ++i) {
        HermitianLattice l(random_spd_gram(rng, 3, 12, 12));
        CompactifiedRep std3{rep_standard(3), rat(1)};
        CHECK(det_twist_check(std3, l).eq());
        for (int k = 1; k <= 3; ++k) {
            CompactifiedRep wk{rep_wedge(k, rep_standard(3)), rat(1)};
            CHECK(det_twist_check(wk, l).eq());
        }
        CompactifiedRep dp{rep_det_power(3, 2), rat(1)};
        CHECK(det_twist_check(dp, l).eq());
    }
}

TEST_CASE("determinant twist: lattice discriminants for sym and adjoint") {
    // The symmetric-power quotient lattice and the trace-zero sublattice
    // are not unimodular over the tensor lattice, so the determinant
    // comparison is off by a constant that does not depend on the Gram:
    // prod_alpha alpha!/n! for Sym^n, N for the adjoint.
    Rng rng(28);
    for (int i = 0; i < 20; ++i) {
        HermitianLattice l2(random_spd_gram(rng, 2, 12, 12));
        auto r = det_twist_check(
            CompactifiedRep{rep_sym(2, rep_standard(2)), rat(1)}, l2);
        CHECK(r.ratio == rat(1, 2));
        auto ra = det_twist_check(CompactifiedRep{rep_adjoint(2), rat(1)}, l2);
        CHECK(ra.ratio == rat(2));
        HermitianLattice l3(random_spd_gram(rng, 3, 12, 12));
        auto ra3 = det_twist_check(CompactifiedRep{rep_adjoint(3), rat(1)}, l3);
        CHECK(ra3.ratio == rat(3));
    }
}

TEST_CASE("determinant twist: scale contributes scale^dim") {
    HermitianLattice l(QMatrix::identity(2));
    Rational s = rat(3, 2);
    auto r = det_twist_check(CompactifiedRep{rep_standard(2), s}, l);
    CHECK(r.ratio == r.scale_ratio);
    CHECK(r.scale_ratio == s * s);
    auto rw = det_twist_check(CompactifiedRep{rep_wedge(2, rep_standard(2)), s}, l);
    CHECK(rw.ratio == s);
    // for the sym and adjoint lattices the ratio factors as
    // scale^dim times the lattice discriminant
    auto rs = det_twist_check(CompactifiedRep{rep_sym(2, rep_standard(2)), s}, l);
    CHECK(rs.ratio == rs.scale_ratio * rat(1, 2));
    auto ra = det_twist_check(CompactifiedRep{rep_adjoint(2), s}, l);
    CHECK(ra.ratio == ra.scale_ratio * rat(2));
}

TEST_CASE("determinant twist preconditions") {
    HermitianLattice l(QMatrix::identity(2));
    auto ds = rep_direct_sum(rep_standard(2), rep_det_power(2, 2));
    CHECK_THROWS_AS(det_twist_check(CompactifiedRep{ds, rat(1)}, l), error);
    // the scalar character of any tree is an integral power of det, so
    // N | a*dim holds for every constructor; the happy path suffices
    CHECK_NOTHROW(det_twist_check(
        CompactifiedRep{rep_tensor(rep_standard(2), rep_standard(2)), rat(1)}, l));
}

TEST_CASE("rank mismatch is rejected") {
    HermitianLattice l(QMatrix::identity(3));
    CHECK_THROWS_AS(
        induced_lattice(CompactifiedRep{rep_standard(2), rat(1)}, l), error);
}
