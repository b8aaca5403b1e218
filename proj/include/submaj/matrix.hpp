#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "submaj/error.hpp"

namespace submaj {

// Dense real matrix, row-major. Entries are required to stay finite;
// the constructor and all producers reject NaN/Inf.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries);
    Matrix(std::initializer_list<std::initializer_list<double>> rows);

    static Matrix identity(std::size_t n);
    static Matrix diag(const std::vector<double>& d);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    double& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    const std::vector<double>& entries() const noexcept { return entries_; }

    Matrix transpose() const;
    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix operator*(double s) const;

    Matrix column(std::size_t j) const;
    std::vector<double> column_vector(std::size_t j) const;

    double norm_frobenius() const;
    double norm_max() const;  // max |a_ij|
    double symmetry_defect() const;  // ||A - A^T||_max, square only

    void check_finite() const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> entries_;
};

Matrix operator*(double s, const Matrix& m);

}  // namespace submaj
