#include "heightlab/heights.hpp"

#include <cmath>
#include <numeric>

#include "heightlab/errors.hpp"
#include "heightlab/sampling.hpp"
#include "heightlab/upoly.hpp"

namespace heightlab {

namespace {

// The rank-one quotient cut out by the covector, carrying the quotient
// metric: the generator's norm is 1/||u||_{G^{-1}}, and primitivity makes
// the finite part of the degree vanish.
MetrizedLine quotient_line(const HermitianLattice& w, const PointInP& p) {
    require(static_cast<int>(p.covector.size()) == w.rank(), errc::rank_mismatch,
            "covector length differs from dim(W)");
    QMatrix inv = w.gram().inverse();
    Rational q = 0;
    for (int i = 0; i < w.rank(); ++i) {
        if (p.covector[static_cast<size_t>(i)] == 0) continue;
        Rational ui(p.covector[static_cast<size_t>(i)]);
        for (int j = 0; j < w.rank(); ++j) {
            if (p.covector[static_cast<size_t>(j)] == 0) continue;
            q += ui * inv.at(i, j) * Rational(p.covector[static_cast<size_t>(j)]);
        }
    }
    return MetrizedLine{1 / q};
}

} // namespace

LogValue point_height(const HermitianLattice& L, const CompactifiedRep& T,
                      const PointInP& p) {
    return quotient_line(induced_lattice(T, L), p).arakelov_degree();
}

namespace {

// Certified rational r with r^d >= s, refined by bisection.
Rational dth_root_upper(const Rational& s, int d, int iters) {
    require(s > 0 && d >= 1, errc::invalid_argument, "bad root bound query");
    if (d == 1) return s;
    Rational lo = 0;
    Rational hi = s < 1 ? Rational(1) : s;
    for (int i = 0; i < iters; ++i) {
        Rational mid = (lo + hi) / 2;
        if (pow_rational(mid, d) >= s)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

Rational gershgorin_upper(const QMatrix& g) {
    Rational hi = 0;
    for (int i = 0; i < g.rows(); ++i) {
        Rational row = 0;
        for (int j = 0; j < g.cols(); ++j) row += abs_rational(g.at(i, j));
        if (row > hi) hi = row;
    }
    return hi + 1;
}

double sample_constant_estimate(const QMatrix& g_ref,
                                const InvariantGeneratorSet& gens) {
    int dim = g_ref.rows();
    QMatrix inv = g_ref.inverse();
    std::vector<std::vector<double>> invd(
        static_cast<size_t>(dim), std::vector<double>(static_cast<size_t>(dim)));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) invd[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            inv.at(i, j).get_d();
    Rng rng(0x5eedu);
    double best = 0.0;
    for (int s = 0; s < 400; ++s) {
        std::vector<Rational> v(static_cast<size_t>(dim));
        bool nonzero = false;
        for (auto& x : v) {
            x = Rational(rng.uniform(-5, 5));
            if (x != 0) nonzero = true;
        }
        if (!nonzero) continue;
        double nsq = 0.0;
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                nsq += v[static_cast<size_t>(i)].get_d() *
                       invd[static_cast<size_t>(i)][static_cast<size_t>(j)] *
                       v[static_cast<size_t>(j)].get_d();
        if (nsq <= 0) continue;
        for (const auto& gen : gens.gens) {
            double val = std::abs(gen.poly.eval(v).get_d());
            if (val == 0) continue;
            double ratio = std::pow(val, 1.0 / gen.degree) / std::sqrt(nsq);
            if (ratio > best) best = ratio;
        }
    }
    return best > 0 ? -std::log(best) : 0.0;
}

} // namespace

RepConstantReport rep_constant_for_gram(const QMatrix& reference_gram,
                                        const InvariantGeneratorSet& gens) {
    require(!gens.gens.empty(), errc::invalid_argument,
            "no invariant generators supplied");
    require(gens.nvars == reference_gram.rows(), errc::rank_mismatch,
            "generator variable count differs from the Gram rank");
    UPoly cp = upoly_from(reference_gram.char_poly());
    Rational lam_up = largest_root_upper_bound(cp, Rational(0),
                                               gershgorin_upper(reference_gram), 48);
    Rational b_sq;
    bool first = true;
    for (const auto& gen : gens.gens) {
        Rational s = gen.poly.coefficient_abs_sum();
        require(s > 0, errc::invalid_argument, "zero generator");
        Rational r = dth_root_upper(s, gen.degree, 48);
        Rational cand = r * r * lam_up;
        if (first || cand > b_sq) b_sq = cand;
        first = false;
    }
    // round up to denominator 10^8 so the certified bound stays readable
    Integer num_up;
    Integer scale_den(100000000);
    Integer scaled_num = b_sq.get_num() * scale_den;
    mpz_cdiv_q(num_up.get_mpz_t(), scaled_num.get_mpz_t(),
               b_sq.get_den_mpz_t());
    Rational rounded(num_up, scale_den);
    rounded.canonicalize();
    RepConstantReport rep;
    rep.b_sq_upper = rounded;
    rep.lambda_max_upper = lam_up;
    // minus the log bound, summed over the (length-one) places list
    LogValue certified;
    for (int place = 0; place < kNumPlaces; ++place)
        certified = certified + LogValue::half_log(1 / rounded);
    rep.certified = certified;
    rep.sampled_estimate = sample_constant_estimate(reference_gram, gens);
    return rep;
}

RepConstantReport rep_constant(const CompactifiedRep& T,
                               const InvariantGeneratorSet& gens) {
    long a = 0;
    require(is_homogeneous(*T.tree, &a), errc::not_homogeneous,
            "the constant is defined for homogeneous representations");
    HermitianLattice ref(QMatrix::identity(T.tree->group_rank));
    return rep_constant_for_gram(induced_lattice(T, ref).gram(), gens);
}

namespace {

std::string establish_semistable(const CompactifiedRep& T, const PointInP& p,
                                 const InvariantGeneratorSet& gens) {
    if (T.tree->kind == RepTree::Kind::adjoint) {
        QMatrix x = matrix_from_point(p);
        if (!adjoint_semistable(x))
            fail(errc::invalid_argument,
                 "the point is unstable (nilpotent); the floor only applies to "
                 "semistable points");
        return "adjoint characteristic polynomial is not t^N";
    }
    if (gens.gens.empty())
        fail(errc::invalid_argument,
             "no invariant generators available to certify semistability");
    auto cert = invariant_certificate(p, gens);
    if (!cert)
        fail(errc::invalid_argument,
             "no supplied invariant is nonzero at the point; semistability "
             "cannot be certified");
    return "generator " + std::to_string(cert->first) + " has value " +
           format_rational(cert->second);
}

} // namespace

BoundReport check_height_floor(const HermitianLattice& L,
                               const CompactifiedRep& T, const PointInP& p,
                               const InvariantGeneratorSet& gens) {
    long a = 0;
    require(is_homogeneous(*T.tree, &a), errc::not_homogeneous,
            "use the mixed floor for non-homogeneous representations");
    BoundReport r;
    r.witness = establish_semistable(T, p, gens);
    r.height = point_height(L, T, p);
    r.lattice_degree = L.arakelov_degree();
    r.constant = rep_constant(T, gens).certified;
    r.slope_degree = a;
    r.group_rank = T.tree->group_rank;
    // clear the /(field degree * N) denominator for an integer comparison
    long dn = static_cast<long>(kFieldDegree) * r.group_rank;
    Ordering ord = lv_affine_compare(
        std::vector<AffineTerm>{{dn, r.height}},
        std::vector<AffineTerm>{{a, r.lattice_degree}, {dn, r.constant}});
    r.satisfied = ord != Ordering::LT;
    r.margin = r.height.to_double() -
               (static_cast<double>(a) / static_cast<double>(dn)) *
                   r.lattice_degree.to_double() -
               r.constant.to_double();
    return r;
}

namespace {

// Flattens nested direct sums into (subtree, basis offset) summands.
void collect_summands(const RepPtr& t, int offset,
                      std::vector<std::pair<RepPtr, int>>& out) {
    if (t->kind == RepTree::Kind::direct_sum) {
        collect_summands(t->left, offset, out);
        collect_summands(t->right, offset + rep_dimension(*t->left), out);
    } else {
        out.emplace_back(t, offset);
    }
}

} // namespace

BoundReport check_height_floor_mixed(
    const HermitianLattice& L, const CompactifiedRep& T, const PointInP& p,
    const std::vector<std::optional<InvariantGeneratorSet>>& component_gens) {
    auto comps = decompose_homogeneous(T, L);
    require(comps.size() >= 2, errc::invalid_argument,
            "the representation is homogeneous; use the plain floor check");
    require(component_gens.empty() || component_gens.size() == comps.size(),
            errc::invalid_argument,
            "one generator set (possibly empty) per component expected");
    require(static_cast<int>(p.covector.size()) == rep_dimension(*T.tree),
            errc::rank_mismatch, "covector length differs from dim(W)");

    int n = T.tree->group_rank;
    LogValue deg = L.arakelov_degree();

    // A = min_i (a_i/N) deg^, decided exactly
    size_t min_idx = 0;
    for (size_t i = 1; i < comps.size(); ++i) {
        Ordering o = lv_affine_compare(
            std::vector<AffineTerm>{{comps[i].degree, deg}},
            std::vector<AffineTerm>{{comps[min_idx].degree, deg}});
        if (o == Ordering::LT) min_idx = i;
    }
    long a_min = comps[min_idx].degree;

    std::vector<std::pair<RepPtr, int>> summands;
    collect_summands(T.tree, 0, summands);
    HermitianLattice ref_lattice(QMatrix::identity(n));
    QMatrix ref_gram = induced_lattice(T, ref_lattice).gram();

    // support pattern across components
    std::vector<bool> touched(comps.size(), false);
    for (size_t ci = 0; ci < comps.size(); ++ci)
        for (int idx : comps[ci].indices)
            if (p.covector[static_cast<size_t>(idx)] != 0) touched[ci] = true;
    int touched_count = 0;
    for (bool b : touched) touched_count += b ? 1 : 0;

    HermitianLattice w = induced_lattice(T, L);
    LogValue h = point_height(L, T, p);

    BoundReport best;
    bool found = false;
    std::optional<LogValue> c_floor; // min over computable component constants

    for (size_t ci = 0; ci < comps.size(); ++ci) {
        const auto& comp = comps[ci];
        // the component subtree, when the block is exactly one summand
        RepPtr subtree;
        for (const auto& [st, off] : summands) {
            int d = rep_dimension(*st);
            if (off == comp.indices.front() &&
                off + d - 1 == comp.indices.back() &&
                static_cast<int>(comp.indices.size()) == d) {
                subtree = st;
                break;
            }
        }

        // restriction of the covector to the block
        std::vector<Integer> restricted;
        bool nonzero = false;
        for (int idx : comp.indices) {
            restricted.push_back(p.covector[static_cast<size_t>(idx)]);
            if (restricted.back() != 0) nonzero = true;
        }

        const std::optional<InvariantGeneratorSet>* gens_entry =
            component_gens.empty() ? nullptr : &component_gens[ci];

        // certified constant for this component
        std::optional<RepConstantReport> c_i;
        InvariantGeneratorSet gens_used;
        if (subtree && subtree->kind == RepTree::Kind::adjoint &&
            (!gens_entry || !gens_entry->has_value())) {
            gens_used = adjoint_invariants(n);
        } else if (gens_entry && gens_entry->has_value()) {
            gens_used = **gens_entry;
        }
        if (!gens_used.gens.empty() &&
            gens_used.nvars == static_cast<int>(comp.indices.size()))
            c_i = rep_constant_for_gram(
                ref_gram.submatrix(comp.indices, comp.indices), gens_used);
        if (c_i) {
            if (!c_floor || lv_compare(c_i->certified, *c_floor) == Ordering::LT)
                c_floor = c_i->certified;
        }

        if (!nonzero || found || !c_i) continue;

        // semistability of the (projected) point on this component; rank-one
        // components are evaluated directly (they carry no sub-point)
        std::string witness;
        bool established = false;
        if (subtree && comp.indices.size() >= 2) {
            PointInP sub = make_point(subtree, restricted);
            if (subtree->kind == RepTree::Kind::adjoint) {
                established = adjoint_semistable(matrix_from_point(sub));
                witness = "adjoint characteristic polynomial on component " +
                          std::to_string(ci);
            } else {
                auto cert = invariant_certificate(sub, gens_used);
                established = cert.has_value();
                if (cert)
                    witness = "component " + std::to_string(ci) + " generator " +
                              std::to_string(cert->first) + " value " +
                              format_rational(cert->second);
            }
        } else {
            // no aligned subtree: evaluate the generators directly
            std::vector<Rational> v;
            for (const auto& z : restricted) v.emplace_back(z);
            for (size_t gi = 0; gi < gens_used.gens.size(); ++gi) {
                Rational val = gens_used.gens[gi].poly.eval(v);
                if (val != 0) {
                    established = true;
                    witness = "component " + std::to_string(ci) + " generator " +
                              std::to_string(gi) + " value " +
                              format_rational(val);
                    break;
                }
            }
        }
        if (!established) continue;

        // projected height and the exact projection inequality
        std::vector<Integer> prim = restricted;
        Integer g = content(prim);
        for (auto& z : prim) z /= g;
        QMatrix block_inv = comp.lattice.gram().inverse();
        Rational q = 0;
        for (size_t i = 0; i < prim.size(); ++i)
            for (size_t j = 0; j < prim.size(); ++j)
                q += Rational(prim[i]) *
                     block_inv.at(static_cast<int>(i), static_cast<int>(j)) *
                     Rational(prim[j]);
        LogValue h_proj = LogValue::half_log(q);
        require(lv_compare(h, h_proj) != Ordering::LT, errc::internal,
                "projection increased the height");

        // the chain also needs the floor on the component itself; a
        // violation means the supplied generators were not invariants, so
        // this component cannot serve as a witness
        long dn_c = static_cast<long>(kFieldDegree) * n;
        Ordering comp_ord = lv_affine_compare(
            std::vector<AffineTerm>{{dn_c, h_proj}},
            std::vector<AffineTerm>{{comp.degree, deg}, {dn_c, c_i->certified}});
        if (comp_ord == Ordering::LT) continue;

        best.component = static_cast<int>(ci);
        best.witness = witness;
        best.projected_height = h_proj;
        best.used_projection = touched_count > 1;
        found = true;
    }

    if (!found)
        fail(errc::no_semistable_component,
             "no component carries a certified-semistable restriction");
    require(c_floor.has_value(), errc::invalid_argument,
            "no component constant could be certified");

    best.height = h;
    best.lattice_degree = deg;
    best.constant = *c_floor;
    best.slope_degree = a_min;
    best.group_rank = n;
    best.mixed = true;
    long dn = static_cast<long>(kFieldDegree) * n;
    Ordering ord = lv_affine_compare(
        std::vector<AffineTerm>{{dn, best.height}},
        std::vector<AffineTerm>{{a_min, deg}, {dn, best.constant}});
    best.satisfied = ord != Ordering::LT;
    best.margin = best.height.to_double() -
                  (static_cast<double>(a_min) / static_cast<double>(dn)) *
                      deg.to_double() -
                  best.constant.to_double();
    return best;
}

DriftReport drift_sequence(const PointInP& x, const OnePS& lam, long base,
                           int steps, const HermitianLattice& L0,
                           const CompactifiedRep& T) {
    require(base >= 2, errc::invalid_argument, "drift base must be at least 2");
    require(steps >= 1, errc::invalid_argument, "drift needs at least one step");
    int n = T.tree->group_rank;
    require(static_cast<int>(lam.r.size()) == n, errc::rank_mismatch,
            "subgroup length differs from group rank");
    require(L0.rank() == n, errc::rank_mismatch, "lattice rank mismatch");

    DriftReport rep;

    // pairings of the active dual weights with the subgroup
    WeightSystem ws = rep_weights(*T.tree);
    std::vector<int> active;
    std::vector<long> mu;
    for (size_t i = 0; i < ws.weights.size(); ++i) {
        if (x.covector[i] == 0) continue;
        long s = 0;
        for (size_t k = 0; k < ws.weights[i].size(); ++k)
            s -= ws.weights[i][k] * lam.r[k]; // dual weight pairing
        active.push_back(static_cast<int>(i));
        mu.push_back(s);
    }
    rep.certificate_ok = !active.empty();
    for (long m : mu)
        if (m <= 0) rep.certificate_ok = false;

    // exponent multiset of the height numerator q_n = sum c_ij base^{-n(mu_i+mu_j)}
    QMatrix inv0 = induced_lattice(T, L0).gram().inverse();
    bool have_min = false;
    long e_min = 0;
    bool single = true;
    for (size_t a = 0; a < active.size(); ++a)
        for (size_t b = 0; b < active.size(); ++b) {
            if (inv0.at(active[a], active[b]) == 0) continue;
            long e = mu[a] + mu[b];
            if (!have_min) {
                e_min = e;
                have_min = true;
            } else if (e != e_min) {
                single = false;
                if (e < e_min) e_min = e;
            }
        }
    require(have_min, errc::internal, "no active height contribution");
    rep.single_exponent = single;
    rep.asymptotic_step = LogValue::half_log(pow_rational(Rational(base), -e_min));

    LogValue deg0 = L0.arakelov_degree();
    for (int k = 0; k <= steps; ++k) {
        QMatrix a(n, n);
        QMatrix d = QMatrix::identity(n);
        for (int i = 0; i < n; ++i)
            d.at(i, i) = pow_rational(Rational(base),
                                      -static_cast<long>(k) * lam.r[static_cast<size_t>(i)]);
        a = d * L0.gram() * d;
        HermitianLattice lk(a);
        rep.exponents.push_back(k);
        rep.degrees.push_back(lk.arakelov_degree());
        require(rep.degrees.back() == deg0, errc::internal,
                "drift changed the Arakelov degree");
        rep.heights.push_back(point_height(lk, T, x));
    }

    // first step index from which the exact differences stay constant
    std::vector<Rational> ratio;
    for (int k = 0; k < steps; ++k)
        ratio.push_back(rep.heights[static_cast<size_t>(k) + 1].q() /
                        rep.heights[static_cast<size_t>(k)].q());
    int from = steps - 1;
    while (from > 0 &&
           ratio[static_cast<size_t>(from) - 1] == ratio[static_cast<size_t>(steps) - 1])
        --from;
    rep.constant_from = from;
    return rep;
}

} // namespace heightlab
