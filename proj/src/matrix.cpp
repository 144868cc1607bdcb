#include "balrs/matrix.hpp"

#include <algorithm>

namespace balrs {

Matrix::Matrix(FieldHandle field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::identity(FieldHandle field, std::size_t n) {
    Matrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::mul(const Matrix& o) const {
    if (!field_->same(*o.field_)) throw FieldMismatch("matrices over different fields");
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product dimension mismatch");
    const Field& F = *field_;
    Matrix out(field_, rows_, o.cols_);
#pragma omp parallel for schedule(static) if (rows_ * cols_ * o.cols_ > 1u << 16)
    for (std::ptrdiff_t r = 0; r < static_cast<std::ptrdiff_t>(rows_); ++r) {
        for (std::size_t i = 0; i < cols_; ++i) {
            const Elem a = at(static_cast<std::size_t>(r), i);
            if (a == 0) continue;
            for (std::size_t c = 0; c < o.cols_; ++c) {
                Elem& dst = out.at(static_cast<std::size_t>(r), c);
                dst = F.add(dst, F.mul(a, o.at(i, c)));
            }
        }
    }
    return out;
}

std::vector<Elem> Matrix::left_mul(std::span<const Elem> v) const {
    if (v.size() != rows_) throw DimensionMismatch("vector length must equal row count");
    const Field& F = *field_;
    std::vector<Elem> out(cols_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        if (v[i] == 0) continue;
        for (std::size_t c = 0; c < cols_; ++c) out[c] = F.add(out[c], F.mul(v[i], at(i, c)));
    }
    return out;
}

std::size_t Matrix::rank() const {
    const Field& F = *field_;
    std::vector<Elem> a = data_;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows_ && a[pivot * cols_ + col] == 0) ++pivot;
        if (pivot == rows_) continue;
        if (pivot != rank)
            std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(pivot * cols_),
                             a.begin() + static_cast<std::ptrdiff_t>((pivot + 1) * cols_),
                             a.begin() + static_cast<std::ptrdiff_t>(rank * cols_));
        const Elem pinv = F.inv(a[rank * cols_ + col]);
        for (std::size_t r = rank + 1; r < rows_; ++r) {
            const Elem factor = F.mul(a[r * cols_ + col], pinv);
            if (factor == 0) continue;
            for (std::size_t c = col; c < cols_; ++c)
                a[r * cols_ + c] = F.sub(a[r * cols_ + c], F.mul(factor, a[rank * cols_ + c]));
        }
        ++rank;
    }
    return rank;
}

Matrix Matrix::inverse() const {
    if (rows_ != cols_) throw DimensionMismatch("inverse of a non-square matrix");
    const Field& F = *field_;
    const std::size_t n = rows_;
    // augmented [A | I], reduced to [I | A^-1]
    std::vector<Elem> a(n * 2 * n, 0);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) a[r * 2 * n + c] = at(r, c);
        a[r * 2 * n + n + r] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot * 2 * n + col] == 0) ++pivot;
        if (pivot == n) throw Error("matrix is singular");
        if (pivot != col)
            std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(pivot * 2 * n),
                             a.begin() + static_cast<std::ptrdiff_t>((pivot + 1) * 2 * n),
                             a.begin() + static_cast<std::ptrdiff_t>(col * 2 * n));
        const Elem pinv = F.inv(a[col * 2 * n + col]);
        for (std::size_t c = 0; c < 2 * n; ++c) a[col * 2 * n + c] = F.mul(a[col * 2 * n + c], pinv);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const Elem factor = a[r * 2 * n + col];
            if (factor == 0) continue;
            for (std::size_t c = 0; c < 2 * n; ++c)
                a[r * 2 * n + c] = F.sub(a[r * 2 * n + c], F.mul(factor, a[col * 2 * n + c]));
        }
    }
    Matrix out(field_, n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) out.at(r, c) = a[r * 2 * n + n + c];
    return out;
}

std::size_t Matrix::row_weight(std::size_t r) const {
    std::size_t w = 0;
    for (std::size_t c = 0; c < cols_; ++c)
        if (at(r, c) != 0) ++w;
    return w;
}

std::size_t Matrix::col_weight(std::size_t c) const {
    std::size_t w = 0;
    for (std::size_t r = 0; r < rows_; ++r)
        if (at(r, c) != 0) ++w;
    return w;
}

bool Matrix::operator==(const Matrix& o) const {
    return field_->same(*o.field_) && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

}  // namespace balrs
