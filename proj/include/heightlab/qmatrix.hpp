#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

#include "heightlab/rational.hpp"

namespace heightlab {

// Dense matrix over Q with exact arithmetic throughout.
class QMatrix {
public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          data_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {}
    QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static QMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) { return data_[idx(i, j)]; }
    const Rational& at(int i, int j) const { return data_[idx(i, j)]; }

    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;

    QMatrix transpose() const;
    QMatrix submatrix(const std::vector<int>& rows,
                      const std::vector<int>& cols) const;

    friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator*(const Rational& c, const QMatrix& a);
    friend bool operator==(const QMatrix& a, const QMatrix& b);

    Rational det() const;
    Rational trace() const;

    // Throws singular_matrix if not invertible.
    QMatrix inverse() const;

    // Unique solution of A x = b for square invertible A.
    std::vector<Rational> solve(const std::vector<Rational>& b) const;

    // det of the leading principal k x k block, k = 1..n.
    std::vector<Rational> leading_principal_minors() const;

    // Coefficients of det(tI - A), ascending in t; size n+1, leading 1.
    std::vector<Rational> char_poly() const;

    // k-th compound matrix: entries det(A[S,T]) over k-subsets S,T in
    // lexicographic order.
    QMatrix compound(int k) const;

    static QMatrix kronecker(const QMatrix& a, const QMatrix& b);
    static QMatrix block_diag(const QMatrix& a, const QMatrix& b);

private:
    size_t idx(int i, int j) const {
        return static_cast<size_t>(i) * static_cast<size_t>(cols_) +
               static_cast<size_t>(j);
    }

    int rows_, cols_;
    std::vector<Rational> data_;
};

} // namespace heightlab
