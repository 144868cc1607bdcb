#ifndef BALRS_MATRIX_HPP
#define BALRS_MATRIX_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "balrs/gf.hpp"

namespace balrs {

/// Dense row-major matrix over GF(q).
class Matrix {
public:
    Matrix(FieldHandle field, std::size_t rows, std::size_t cols);
    static Matrix identity(FieldHandle field, std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldHandle& field() const { return field_; }

    Elem at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Elem& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::span<const Elem> row(std::size_t r) const {
        return {data_.data() + r * cols_, cols_};
    }

    Matrix mul(const Matrix& o) const;
    /// Row vector times matrix: returns v * M of length cols().
    std::vector<Elem> left_mul(std::span<const Elem> v) const;

    std::size_t rank() const;
    /// Inverse of a square matrix; throws Error when singular.
    Matrix inverse() const;

    std::size_t row_weight(std::size_t r) const;
    std::size_t col_weight(std::size_t c) const;

    bool operator==(const Matrix& o) const;

private:
    FieldHandle field_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Elem> data_;
};

}  // namespace balrs

#endif
