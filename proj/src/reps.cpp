#include "heightlab/reps.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "heightlab/enumeration.hpp"
#include "heightlab/errors.hpp"

namespace heightlab {

namespace {

RepPtr make_node(RepTree::Kind kind, int group_rank, int param, RepPtr l, RepPtr r) {
    auto t = std::make_shared<RepTree>();
    t->kind = kind;
    t->group_rank = group_rank;
    t->param = param;
    t->left = std::move(l);
    t->right = std::move(r);
    return t;
}

} // namespace

RepPtr rep_standard(int n) {
    require(n >= 1, errc::invalid_argument, "standard representation needs N >= 1");
    return make_node(RepTree::Kind::standard, n, 0, nullptr, nullptr);
}

RepPtr rep_dual(RepPtr t) {
    require(t != nullptr, errc::invalid_argument, "dual of null tree");
    int n = t->group_rank;
    return make_node(RepTree::Kind::dual, n, 0, std::move(t), nullptr);
}

RepPtr rep_sym(int n, RepPtr t) {
    require(t != nullptr, errc::invalid_argument, "sym of null tree");
    require(n >= 1, errc::invalid_argument, "sym power needs n >= 1");
    int gr = t->group_rank;
    return make_node(RepTree::Kind::sym, gr, n, std::move(t), nullptr);
}

RepPtr rep_wedge(int k, RepPtr t) {
    require(t != nullptr, errc::invalid_argument, "wedge of null tree");
    require(k >= 1, errc::invalid_argument, "wedge power needs k >= 1");
    require(k <= rep_dimension(*t), errc::invalid_argument,
            "wedge power exceeds dimension");
    int gr = t->group_rank;
    return make_node(RepTree::Kind::wedge, gr, k, std::move(t), nullptr);
}

RepPtr rep_tensor(RepPtr a, RepPtr b) {
    require(a && b, errc::invalid_argument, "tensor of null tree");
    require(a->group_rank == b->group_rank, errc::invalid_argument,
            "tensor factors have different group rank");
    int gr = a->group_rank;
    return make_node(RepTree::Kind::tensor, gr, 0, std::move(a), std::move(b));
}

RepPtr rep_direct_sum(RepPtr a, RepPtr b) {
    require(a && b, errc::invalid_argument, "direct sum of null tree");
    require(a->group_rank == b->group_rank, errc::invalid_argument,
            "direct summands have different group rank");
    int gr = a->group_rank;
    return make_node(RepTree::Kind::direct_sum, gr, 0, std::move(a), std::move(b));
}

RepPtr rep_det_power(int group_rank, int k) {
    require(group_rank >= 1, errc::invalid_argument, "det power needs N >= 1");
    return make_node(RepTree::Kind::det_power, group_rank, k, nullptr, nullptr);
}

RepPtr rep_adjoint(int n) {
    require(n >= 2, errc::invalid_argument, "adjoint representation needs N >= 2");
    return make_node(RepTree::Kind::adjoint, n, 0, nullptr, nullptr);
}

int rep_dimension(const RepTree& t) {
    switch (t.kind) {
    case RepTree::Kind::standard: return t.group_rank;
    case RepTree::Kind::dual: return rep_dimension(*t.left);
    case RepTree::Kind::sym: {
        int d = rep_dimension(*t.left);
        return static_cast<int>(binomial(d + t.param - 1, t.param));
    }
    case RepTree::Kind::wedge:
        return static_cast<int>(binomial(rep_dimension(*t.left), t.param));
    case RepTree::Kind::tensor:
        return rep_dimension(*t.left) * rep_dimension(*t.right);
    case RepTree::Kind::direct_sum:
        return rep_dimension(*t.left) + rep_dimension(*t.right);
    case RepTree::Kind::det_power: return 1;
    case RepTree::Kind::adjoint: return t.group_rank * t.group_rank - 1;
    }
    fail(errc::internal, "unhandled tree kind");
}

// ---------------------------------------------------------------------------
// adjoint basis

namespace {

std::vector<std::pair<int, int>> adjoint_offdiag_order(int n) {
    std::vector<std::pair<int, int>> order;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) order.emplace_back(i, j); // upper
    return order;
}

} // namespace

std::vector<QMatrix> adjoint_basis(int n) {
    std::vector<QMatrix> basis;
    auto upper = adjoint_offdiag_order(n);
    for (auto [i, j] : upper) {
        QMatrix e(n, n);
        e.at(i, j) = 1;
        basis.push_back(e);
    }
    for (int i = 0; i + 1 < n; ++i) {
        QMatrix h(n, n);
        h.at(i, i) = 1;
        h.at(i + 1, i + 1) = -1;
        basis.push_back(h);
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) {
            QMatrix e(n, n);
            e.at(i, j) = 1;
            basis.push_back(e);
        }
    return basis;
}

QMatrix adjoint_trace_gram(int n) {
    auto basis = adjoint_basis(n);
    int d = static_cast<int>(basis.size());
    QMatrix f(d, d);
    for (int p = 0; p < d; ++p)
        for (int q = 0; q < d; ++q)
            f.at(p, q) = (basis[static_cast<size_t>(p)] *
                          basis[static_cast<size_t>(q)]).trace();
    return f;
}

std::vector<Rational> adjoint_coords(const QMatrix& y) {
    require(y.is_square(), errc::invalid_argument, "adjoint coords of non-square");
    int n = y.rows();
    require(y.trace() == 0, errc::nonzero_trace, "matrix has nonzero trace");
    std::vector<Rational> c;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) c.push_back(y.at(i, j));
    Rational partial = 0;
    for (int i = 0; i + 1 < n; ++i) {
        partial += y.at(i, i);
        c.push_back(partial);
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) c.push_back(y.at(i, j));
    return c;
}

// ---------------------------------------------------------------------------
// weights

namespace {

std::string monomial_label(const std::vector<int>& exps,
                           const std::vector<std::string>& inner) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] == 0) continue;
        if (!first) os << "*";
        first = false;
        os << inner[i];
        if (exps[i] > 1) os << "^" << exps[i];
    }
    return first ? "1" : os.str();
}

} // namespace

WeightSystem rep_weights(const RepTree& t) {
    int N = t.group_rank;
    switch (t.kind) {
    case RepTree::Kind::standard: {
        WeightSystem ws;
        for (int i = 0; i < N; ++i) {
            std::vector<long> w(static_cast<size_t>(N), 0);
            w[static_cast<size_t>(i)] = 1;
            ws.weights.push_back(w);
            ws.labels.push_back("e" + std::to_string(i + 1));
        }
        return ws;
    }
    case RepTree::Kind::dual: {
        WeightSystem in = rep_weights(*t.left);
        for (auto& w : in.weights)
            for (auto& x : w) x = -x;
        for (auto& l : in.labels) l += "^*";
        return in;
    }
    case RepTree::Kind::sym: {
        WeightSystem in = rep_weights(*t.left);
        int d = static_cast<int>(in.weights.size());
        WeightSystem ws;
        for (const auto& mono : monomials_lex_desc(d, t.param)) {
            std::vector<long> w(static_cast<size_t>(N), 0);
            for (int i = 0; i < d; ++i)
                for (int c = 0; c < static_cast<int>(w.size()); ++c)
                    w[static_cast<size_t>(c)] +=
                        mono[static_cast<size_t>(i)] *
                        in.weights[static_cast<size_t>(i)][static_cast<size_t>(c)];
            ws.weights.push_back(w);
            ws.labels.push_back(monomial_label(mono, in.labels));
        }
        return ws;
    }
    case RepTree::Kind::wedge: {
        WeightSystem in = rep_weights(*t.left);
        int d = static_cast<int>(in.weights.size());
        WeightSystem ws;
        for (const auto& sub : subsets_lex(d, t.param)) {
            std::vector<long> w(static_cast<size_t>(N), 0);
            std::ostringstream lab;
            for (size_t k = 0; k < sub.size(); ++k) {
                for (int c = 0; c < N; ++c)
                    w[static_cast<size_t>(c)] +=
                        in.weights[static_cast<size_t>(sub[k])][static_cast<size_t>(c)];
                if (k) lab << "^";
                lab << in.labels[static_cast<size_t>(sub[k])];
            }
            ws.weights.push_back(w);
            ws.labels.push_back(lab.str());
        }
        return ws;
    }
    case RepTree::Kind::tensor: {
        WeightSystem a = rep_weights(*t.left);
        WeightSystem b = rep_weights(*t.right);
        WeightSystem ws;
        for (size_t i = 0; i < a.weights.size(); ++i)
            for (size_t j = 0; j < b.weights.size(); ++j) {
                std::vector<long> w(static_cast<size_t>(N), 0);
                for (int c = 0; c < N; ++c)
                    w[static_cast<size_t>(c)] =
                        a.weights[i][static_cast<size_t>(c)] +
                        b.weights[j][static_cast<size_t>(c)];
                ws.weights.push_back(w);
                ws.labels.push_back(a.labels[i] + "(x)" + b.labels[j]);
            }
        return ws;
    }
    case RepTree::Kind::direct_sum: {
        WeightSystem a = rep_weights(*t.left);
        WeightSystem b = rep_weights(*t.right);
        for (size_t j = 0; j < b.weights.size(); ++j) {
            a.weights.push_back(b.weights[j]);
            a.labels.push_back(b.labels[j]);
        }
        return a;
    }
    case RepTree::Kind::det_power: {
        WeightSystem ws;
        ws.weights.push_back(std::vector<long>(static_cast<size_t>(N), t.param));
        ws.labels.push_back("det^" + std::to_string(t.param));
        return ws;
    }
    case RepTree::Kind::adjoint: {
        WeightSystem ws;
        auto upper = adjoint_offdiag_order(N);
        auto push_offdiag = [&](int i, int j) {
            std::vector<long> w(static_cast<size_t>(N), 0);
            w[static_cast<size_t>(i)] = 1;
            w[static_cast<size_t>(j)] = -1;
            ws.weights.push_back(w);
            ws.labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
        };
        for (auto [i, j] : upper) push_offdiag(i, j);
        for (int i = 0; i + 1 < N; ++i) {
            ws.weights.push_back(std::vector<long>(static_cast<size_t>(N), 0));
            ws.labels.push_back(N == 2 ? "H" : "H" + std::to_string(i + 1));
        }
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < i; ++j) push_offdiag(i, j);
        return ws;
    }
    }
    fail(errc::internal, "unhandled tree kind");
}

std::set<long> homogeneity_degrees(const RepTree& t) {
    std::set<long> degs;
    for (const auto& w : rep_weights(t).weights)
        degs.insert(std::accumulate(w.begin(), w.end(), 0L));
    return degs;
}

bool is_homogeneous(const RepTree& t, long* degree_out) {
    auto degs = homogeneity_degrees(t);
    if (degs.size() != 1) return false;
    if (degree_out) *degree_out = *degs.begin();
    return true;
}

// ---------------------------------------------------------------------------
// matrix action

namespace {

// Symmetric power of a d x d matrix on the monomial basis.
QMatrix sym_power_matrix(const QMatrix& m, int n) {
    int d = m.rows();
    auto monos = monomials_lex_desc(d, n);
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < monos.size(); ++i)
        index[monos[i]] = static_cast<int>(i);
    int dim = static_cast<int>(monos.size());
    QMatrix out(dim, dim);
    for (int col = 0; col < dim; ++col) {
        // expand prod_j (sum_i m_{i,j} x_i)^{alpha_j}
        std::map<std::vector<int>, Rational> poly;
        poly[std::vector<int>(static_cast<size_t>(d), 0)] = 1;
        const auto& alpha = monos[static_cast<size_t>(col)];
        for (int j = 0; j < d; ++j) {
            for (int rep = 0; rep < alpha[static_cast<size_t>(j)]; ++rep) {
                std::map<std::vector<int>, Rational> next;
                for (const auto& [e, c] : poly)
                    for (int i = 0; i < d; ++i) {
                        if (m.at(i, j) == 0) continue;
                        std::vector<int> e2 = e;
                        ++e2[static_cast<size_t>(i)];
                        next[e2] += c * m.at(i, j);
                    }
                poly.swap(next);
            }
        }
        for (const auto& [e, c] : poly)
            out.at(index.at(e), col) = c;
    }
    return out;
}

} // namespace

QMatrix matrix_action(const RepTree& t, const QMatrix& g) {
    require(g.is_square() && g.rows() == t.group_rank, errc::rank_mismatch,
            "group element has wrong size");
    if (g.det() == 0) fail(errc::singular_matrix, "group element is singular");
    switch (t.kind) {
    case RepTree::Kind::standard: return g;
    case RepTree::Kind::dual:
        return matrix_action(*t.left, g).inverse().transpose();
    case RepTree::Kind::sym:
        return sym_power_matrix(matrix_action(*t.left, g), t.param);
    case RepTree::Kind::wedge:
        return matrix_action(*t.left, g).compound(t.param);
    case RepTree::Kind::tensor:
        return QMatrix::kronecker(matrix_action(*t.left, g),
                                  matrix_action(*t.right, g));
    case RepTree::Kind::direct_sum:
        return QMatrix::block_diag(matrix_action(*t.left, g),
                                   matrix_action(*t.right, g));
    case RepTree::Kind::det_power: {
        QMatrix out(1, 1);
        out.at(0, 0) = pow_rational(g.det(), t.param);
        return out;
    }
    case RepTree::Kind::adjoint: {
        auto basis = adjoint_basis(t.group_rank);
        QMatrix ginv = g.inverse();
        int d = static_cast<int>(basis.size());
        QMatrix out(d, d);
        for (int q = 0; q < d; ++q) {
            auto coords = adjoint_coords(g * basis[static_cast<size_t>(q)] * ginv);
            for (int p = 0; p < d; ++p)
                out.at(p, q) = coords[static_cast<size_t>(p)];
        }
        return out;
    }
    }
    fail(errc::internal, "unhandled tree kind");
}

// ---------------------------------------------------------------------------
// metric transport

namespace {

// All words (i_1..i_n) with multiset type alpha, i.e. value i appears
// alpha_i times.
std::vector<std::vector<int>> words_of_type(const std::vector<int>& alpha) {
    std::vector<int> sorted_word;
    for (size_t i = 0; i < alpha.size(); ++i)
        for (int r = 0; r < alpha[i]; ++r) sorted_word.push_back(static_cast<int>(i));
    std::vector<std::vector<int>> words;
    std::sort(sorted_word.begin(), sorted_word.end());
    do {
        words.push_back(sorted_word);
    } while (std::next_permutation(sorted_word.begin(), sorted_word.end()));
    return words;
}

// Quotient metric on Sym^n by the dual-restriction rule: the dual of the
// quotient is the symmetrized dual sublattice with the restricted metric
// H^{(x)n}, H = inner^{-1}; invert the restricted Gram at the end.
QMatrix sym_quotient_gram(const QMatrix& inner, int n) {
    int d = inner.rows();
    QMatrix h = inner.inverse();
    auto monos = monomials_lex_desc(d, n);
    int dim = static_cast<int>(monos.size());
    std::vector<std::vector<std::vector<int>>> words;
    words.reserve(monos.size());
    for (const auto& a : monos) words.push_back(words_of_type(a));
    QMatrix b(dim, dim);
    for (int p = 0; p < dim; ++p)
        for (int q = p; q < dim; ++q) {
            Rational s = 0;
            for (const auto& w : words[static_cast<size_t>(p)])
                for (const auto& w2 : words[static_cast<size_t>(q)]) {
                    Rational prod = 1;
                    for (int l = 0; l < n; ++l) {
                        prod *= h.at(w[static_cast<size_t>(l)],
                                     w2[static_cast<size_t>(l)]);
                        if (prod == 0) break;
                    }
                    s += prod;
                }
            b.at(p, q) = s;
            b.at(q, p) = s;
        }
    return b.inverse();
}

QMatrix adjoint_gram(int n, const QMatrix& gram) {
    auto basis = adjoint_basis(n);
    QMatrix ginv = gram.inverse();
    int d = static_cast<int>(basis.size());
    QMatrix out(d, d);
    for (int p = 0; p < d; ++p)
        for (int q = p; q < d; ++q) {
            // restriction of the Std (x) Dual metric:
            // <A, B> = tr(G B G^{-1} A^T)
            Rational v = (gram * basis[static_cast<size_t>(q)] * ginv *
                          basis[static_cast<size_t>(p)].transpose()).trace();
            out.at(p, q) = v;
            out.at(q, p) = v;
        }
    return out;
}

} // namespace

QMatrix induced_gram_raw(const RepTree& t, const QMatrix& gram) {
    require(gram.is_square() && gram.rows() == t.group_rank, errc::rank_mismatch,
            "Gram rank differs from the representation's group rank");
    switch (t.kind) {
    case RepTree::Kind::standard: return gram;
    case RepTree::Kind::dual:
        return induced_gram_raw(*t.left, gram).inverse();
    case RepTree::Kind::sym:
        return sym_quotient_gram(induced_gram_raw(*t.left, gram), t.param);
    case RepTree::Kind::wedge:
        return induced_gram_raw(*t.left, gram).compound(t.param);
    case RepTree::Kind::tensor:
        return QMatrix::kronecker(induced_gram_raw(*t.left, gram),
                                  induced_gram_raw(*t.right, gram));
    case RepTree::Kind::direct_sum:
        return QMatrix::block_diag(induced_gram_raw(*t.left, gram),
                                   induced_gram_raw(*t.right, gram));
    case RepTree::Kind::det_power: {
        QMatrix out(1, 1);
        out.at(0, 0) = pow_rational(gram.det(), t.param);
        return out;
    }
    case RepTree::Kind::adjoint:
        return adjoint_gram(t.group_rank, gram);
    }
    fail(errc::internal, "unhandled tree kind");
}

HermitianLattice induced_lattice(const CompactifiedRep& rep,
                                 const HermitianLattice& L) {
    require(rep.tree != nullptr, errc::invalid_argument, "null tree");
    require(rep.scale > 0, errc::invalid_argument, "scale must be positive");
    require(L.rank() == rep.tree->group_rank, errc::rank_mismatch,
            "lattice rank differs from the representation's group rank");
    return HermitianLattice(rep.scale * induced_gram_raw(*rep.tree, L.gram()));
}

std::vector<HomogeneousComponent> decompose_homogeneous(
    const CompactifiedRep& rep, const HermitianLattice& L) {
    HermitianLattice w = induced_lattice(rep, L);
    WeightSystem ws = rep_weights(*rep.tree);
    std::map<long, std::vector<int>> by_degree;
    for (size_t i = 0; i < ws.weights.size(); ++i) {
        long s = std::accumulate(ws.weights[i].begin(), ws.weights[i].end(), 0L);
        by_degree[s].push_back(static_cast<int>(i));
    }
    // cross blocks must vanish exactly
    const QMatrix& g = w.gram();
    for (auto ita = by_degree.begin(); ita != by_degree.end(); ++ita)
        for (auto itb = std::next(ita); itb != by_degree.end(); ++itb)
            for (int i : ita->second)
                for (int j : itb->second)
                    if (g.at(i, j) != 0)
                        fail(errc::orthogonality_violation,
                             "nonzero Gram entry between degree " +
                                 std::to_string(ita->first) + " and degree " +
                                 std::to_string(itb->first) + " blocks");
    std::vector<HomogeneousComponent> out;
    for (const auto& [deg, idxs] : by_degree)
        out.push_back(HomogeneousComponent{
            deg, idxs, HermitianLattice(g.submatrix(idxs, idxs))});
    return out;
}

DetTwistReport det_twist_check(const CompactifiedRep& rep,
                               const HermitianLattice& L) {
    long a = 0;
    require(is_homogeneous(*rep.tree, &a), errc::not_homogeneous,
            "determinant twist check needs a homogeneous representation");
    long dim = rep_dimension(*rep.tree);
    long num = a * dim;
    int n = rep.tree->group_rank;
    if (num % n != 0)
        fail(errc::divisibility_failure,
             "a*dim(W) = " + std::to_string(num) + " is not divisible by N = " +
                 std::to_string(n));
    long e = num / n;
    HermitianLattice w = induced_lattice(rep, L);
    Rational lhs = w.gram().det();
    Rational rhs = pow_rational(L.gram().det(), e);
    DetTwistReport r;
    r.degree = a;
    r.twist_exponent = e;
    r.ratio = lhs / rhs;
    r.scale_ratio = pow_rational(rep.scale, dim);
    int c = cmp(lhs, rhs);
    r.order = c < 0 ? Ordering::LT : (c == 0 ? Ordering::EQ : Ordering::GT);
    return r;
}

} // namespace heightlab
