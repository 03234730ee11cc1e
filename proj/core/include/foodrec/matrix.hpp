#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "foodrec/errors.hpp"

namespace foodrec {

// Dense row-major matrix of doubles. All models in this project are small
// enough that a plain contiguous buffer beats anything fancier; there are no
// views or strides, and every operation that promises finite output checks it.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }

    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }
    std::vector<double>& values() { return data_; }
    const std::vector<double>& values() const { return data_; }

    bool same_shape(const Matrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_;
    }
    std::string shape_str() const;

    bool all_finite() const;

    void fill(double v) { data_.assign(data_.size(), v); }
    // this += s * other; shapes must agree.
    void add_scaled(const Matrix& other, double s);
    void scale(double s);

    bool operator==(const Matrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

// Standard matrix product; throws ShapeError naming both shapes when the
// inner dimensions disagree.
Matrix matmul(const Matrix& a, const Matrix& b);

Matrix transpose(const Matrix& a);

double dot(std::span<const double> a, std::span<const double> b);

} // namespace foodrec
