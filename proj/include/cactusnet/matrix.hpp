#pragma once

#include <cstddef>
#include <vector>

#include "cactusnet/exact/rational.hpp"

namespace cactusnet {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = i + 1; j < cols_; ++j) {
                if ((*this)(i, j) != (*this)(j, i)) return false;
            }
        }
        return true;
    }

    bool has_zero_row_sums() const {
        for (std::size_t i = 0; i < rows_; ++i) {
            Rational sum;
            for (std::size_t j = 0; j < cols_; ++j) sum += (*this)(i, j);
            if (!sum.is_zero()) return false;
        }
        return true;
    }

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

} // namespace cactusnet
