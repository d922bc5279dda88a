#include "heightlab/qmatrix.hpp"

#include "heightlab/enumeration.hpp"
#include "heightlab/errors.hpp"

namespace heightlab {

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
    data_.reserve(static_cast<size_t>(rows_) * static_cast<size_t>(cols_));
    for (const auto& r : rows) {
        require(static_cast<int>(r.size()) == cols_, errc::invalid_argument,
                "ragged initializer matrix");
        for (const auto& x : r) data_.push_back(x);
    }
}

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool QMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

QMatrix QMatrix::transpose() const {
    QMatrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

QMatrix QMatrix::submatrix(const std::vector<int>& rows,
                           const std::vector<int>& cols) const {
    QMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j)
            m.at(static_cast<int>(i), static_cast<int>(j)) = at(rows[i], cols[j]);
    return m;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
    require(a.rows_ == b.rows_ && a.cols_ == b.cols_, errc::invalid_argument,
            "shape mismatch in matrix sum");
    QMatrix m(a.rows_, a.cols_);
    for (size_t i = 0; i < a.data_.size(); ++i) m.data_[i] = a.data_[i] + b.data_[i];
    return m;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
    require(a.rows_ == b.rows_ && a.cols_ == b.cols_, errc::invalid_argument,
            "shape mismatch in matrix difference");
    QMatrix m(a.rows_, a.cols_);
    for (size_t i = 0; i < a.data_.size(); ++i) m.data_[i] = a.data_[i] - b.data_[i];
    return m;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    require(a.cols_ == b.rows_, errc::invalid_argument,
            "shape mismatch in matrix product");
    QMatrix m(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols_; ++j) {
                if (b.at(k, j) == 0) continue;
                m.at(i, j) += aik * b.at(k, j);
            }
        }
    return m;
}

QMatrix operator*(const Rational& c, const QMatrix& a) {
    QMatrix m(a.rows_, a.cols_);
    for (size_t i = 0; i < a.data_.size(); ++i) m.data_[i] = c * a.data_[i];
    return m;
}

bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Rational QMatrix::trace() const {
    require(is_square(), errc::invalid_argument, "trace of non-square matrix");
    Rational t = 0;
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

Rational QMatrix::det() const {
    require(is_square(), errc::invalid_argument, "det of non-square matrix");
    QMatrix a = *this;
    Rational d = 1;
    for (int col = 0; col < cols_; ++col) {
        int pivot = -1;
        for (int r = col; r < rows_; ++r)
            if (a.at(r, col) != 0) { pivot = r; break; }
        if (pivot < 0) return Rational(0);
        if (pivot != col) {
            for (int j = 0; j < cols_; ++j) std::swap(a.at(pivot, j), a.at(col, j));
            d = -d;
        }
        d *= a.at(col, col);
        Rational inv = 1 / a.at(col, col);
        for (int r = col + 1; r < rows_; ++r) {
            if (a.at(r, col) == 0) continue;
            Rational f = a.at(r, col) * inv;
            for (int j = col; j < cols_; ++j) a.at(r, j) -= f * a.at(col, j);
        }
    }
    return d;
}

QMatrix QMatrix::inverse() const {
    require(is_square(), errc::invalid_argument, "inverse of non-square matrix");
    int n = rows_;
    QMatrix a = *this;
    QMatrix inv = identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (a.at(r, col) != 0) { pivot = r; break; }
        if (pivot < 0) fail(errc::singular_matrix, "matrix is singular");
        if (pivot != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(pivot, j), a.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        Rational p = 1 / a.at(col, col);
        for (int j = 0; j < n; ++j) {
            a.at(col, j) *= p;
            inv.at(col, j) *= p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a.at(r, col) == 0) continue;
            Rational f = a.at(r, col);
            for (int j = 0; j < n; ++j) {
                a.at(r, j) -= f * a.at(col, j);
                inv.at(r, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

std::vector<Rational> QMatrix::solve(const std::vector<Rational>& b) const {
    require(is_square() && static_cast<int>(b.size()) == rows_,
            errc::invalid_argument, "solve shape mismatch");
    QMatrix inv = inverse();
    std::vector<Rational> x(b.size());
    for (int i = 0; i < rows_; ++i) {
        Rational s = 0;
        for (int j = 0; j < cols_; ++j) s += inv.at(i, j) * b[static_cast<size_t>(j)];
        x[static_cast<size_t>(i)] = s;
    }
    return x;
}

std::vector<Rational> QMatrix::leading_principal_minors() const {
    require(is_square(), errc::invalid_argument, "minors of non-square matrix");
    std::vector<Rational> out;
    std::vector<int> idxs;
    for (int k = 1; k <= rows_; ++k) {
        idxs.push_back(k - 1);
        out.push_back(submatrix(idxs, idxs).det());
    }
    return out;
}

std::vector<Rational> QMatrix::char_poly() const {
    require(is_square(), errc::invalid_argument, "char_poly of non-square matrix");
    // Faddeev-LeVerrier: det(tI - A) = t^n + c_1 t^{n-1} + ... + c_n.
    int n = rows_;
    std::vector<Rational> c(static_cast<size_t>(n) + 1);
    c[static_cast<size_t>(n)] = 1;
    QMatrix b = identity(n);
    for (int k = 1; k <= n; ++k) {
        QMatrix ab = (*this) * b;
        Rational ck = -ab.trace() / k;
        c[static_cast<size_t>(n - k)] = ck;
        b = ab;
        for (int i = 0; i < n; ++i) b.at(i, i) += ck;
    }
    return c;
}

QMatrix QMatrix::compound(int k) const {
    require(is_square(), errc::invalid_argument, "compound of non-square matrix");
    auto subs = subsets_lex(rows_, k);
    int m = static_cast<int>(subs.size());
    QMatrix out(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            out.at(i, j) = submatrix(subs[static_cast<size_t>(i)],
                                     subs[static_cast<size_t>(j)]).det();
    return out;
}

QMatrix QMatrix::kronecker(const QMatrix& a, const QMatrix& b) {
    QMatrix m(a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) {
            if (a.at(i, j) == 0) continue;
            for (int p = 0; p < b.rows_; ++p)
                for (int q = 0; q < b.cols_; ++q)
                    m.at(i * b.rows_ + p, j * b.cols_ + q) = a.at(i, j) * b.at(p, q);
        }
    return m;
}

QMatrix QMatrix::block_diag(const QMatrix& a, const QMatrix& b) {
    QMatrix m(a.rows_ + b.rows_, a.cols_ + b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) m.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows_; ++i)
        for (int j = 0; j < b.cols_; ++j)
            m.at(a.rows_ + i, a.cols_ + j) = b.at(i, j);
    return m;
}

} // namespace heightlab
