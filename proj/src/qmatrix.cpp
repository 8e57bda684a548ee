#include "orbitlef/qmatrix.h"

namespace orbitlef {

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::diagonal(const std::vector<Rat>& d) {
    QMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        m.at(i, i) = d[i];
    return m;
}

QMatrix QMatrix::unit(std::size_t n, std::size_t i, std::size_t j) {
    QMatrix m(n, n);
    m.at(i, j) = 1;
    return m;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        fail(ErrorKind::SizeMismatch, "matrix addition size mismatch");
    QMatrix r(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k)
        r.a_[k] = a_[k] + o.a_[k];
    return r;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        fail(ErrorKind::SizeMismatch, "matrix subtraction size mismatch");
    QMatrix r(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k)
        r.a_[k] = a_[k] - o.a_[k];
    return r;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
    if (cols_ != o.rows_)
        fail(ErrorKind::SizeMismatch, "matrix product size mismatch");
    QMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& aik = at(i, k);
            if (aik == 0)
                continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

QMatrix QMatrix::operator*(const Rat& c) const {
    QMatrix r(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k)
        r.a_[k] = a_[k] * c;
    return r;
}

Rat QMatrix::trace() const {
    if (rows_ != cols_)
        fail(ErrorKind::SizeMismatch, "trace of non-square matrix");
    Rat t(0);
    for (std::size_t i = 0; i < rows_; ++i)
        t += at(i, i);
    return t;
}

bool QMatrix::is_zero() const {
    for (const auto& v : a_)
        if (v != 0)
            return false;
    return true;
}

bool QMatrix::is_symmetric() const {
    if (rows_ != cols_)
        return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i))
                return false;
    return true;
}

std::size_t QMatrix::rank() const {
    QMatrix m = *this;
    std::size_t rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t pivot = row;
        while (pivot < rows_ && m.at(pivot, col) == 0)
            ++pivot;
        if (pivot == rows_)
            continue;
        if (pivot != row)
            for (std::size_t j = col; j < cols_; ++j)
                std::swap(m.at(pivot, j), m.at(row, j));
        const Rat inv = 1 / m.at(row, col);
        for (std::size_t i = row + 1; i < rows_; ++i) {
            if (m.at(i, col) == 0)
                continue;
            const Rat f = m.at(i, col) * inv;
            for (std::size_t j = col; j < cols_; ++j)
                m.at(i, j) -= f * m.at(row, j);
        }
        ++row;
        ++rank;
    }
    return rank;
}

QMatrix bracket(const QMatrix& x, const QMatrix& y) {
    return x * y - y * x;
}

Rat trace_product(const QMatrix& x, const QMatrix& y) {
    if (x.cols() != y.rows() || x.rows() != y.cols())
        fail(ErrorKind::SizeMismatch, "trace_product size mismatch");
    Rat t(0);
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t k = 0; k < x.cols(); ++k)
            t += x.at(i, k) * y.at(k, i);
    return t;
}

} // namespace orbitlef
