#pragma once

#include <cstddef>
#include <vector>

#include "orbitlef/rational.h"

namespace orbitlef {

// Dense exact-rational matrix. Small sizes only (Lie-algebra elements,
// Hessians); all operations are exact.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

    static QMatrix identity(std::size_t n);
    static QMatrix diagonal(const std::vector<Rat>& d);
    // Elementary matrix with a single 1 in row i, column j (0-based).
    static QMatrix unit(std::size_t n, std::size_t i, std::size_t j);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const QMatrix& o) const = default;

    QMatrix operator+(const QMatrix& o) const;
    QMatrix operator-(const QMatrix& o) const;
    QMatrix operator*(const QMatrix& o) const;
    QMatrix operator*(const Rat& c) const;

    Rat trace() const;
    bool is_zero() const;
    bool is_symmetric() const;

    // Exact rank by Gaussian elimination over Q.
    std::size_t rank() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

// Lie bracket XY - YX.
QMatrix bracket(const QMatrix& x, const QMatrix& y);

// tr(XY); the invariant bilinear form used throughout.
Rat trace_product(const QMatrix& x, const QMatrix& y);

} // namespace orbitlef
