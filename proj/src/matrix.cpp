#include "submaj/matrix.hpp"

#include <cmath>
#include <cstdlib>

namespace submaj {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonSquare: return "NonSquare";
        case ErrorCode::AsymmetryExceedsTolerance: return "AsymmetryExceedsTolerance";
        case ErrorCode::NoConvergence: return "NoConvergence";
        case ErrorCode::ZeroRank: return "ZeroRank";
        case ErrorCode::NotPSD: return "NotPSD";
        case ErrorCode::NonFiniteEntry: return "NonFiniteEntry";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::AmbientMismatch: return "AmbientMismatch";
        case ErrorCode::FullSpace: return "FullSpace";
        case ErrorCode::DimMismatch: return "DimMismatch";
        case ErrorCode::ZeroSpread: return "ZeroSpread";
        case ErrorCode::SpectrumOutOfUnitInterval: return "SpectrumOutOfUnitInterval";
        case ErrorCode::TooSmall: return "TooSmall";
        case ErrorCode::NoEdges: return "NoEdges";
        case ErrorCode::VertexCountMismatch: return "VertexCountMismatch";
        case ErrorCode::EdgeCountMismatch: return "EdgeCountMismatch";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::UnknownTheorem: return "UnknownTheorem";
        case ErrorCode::BadDims: return "BadDims";
        case ErrorCode::BadRange: return "BadRange";
    }
    return "Unknown";
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, 0.0) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        throw Error(ErrorCode::LengthMismatch, "entry count does not match rows*cols");
    }
    check_finite();
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) {
            throw Error(ErrorCode::LengthMismatch, "ragged initializer");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
    check_finite();
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::diag(const std::vector<double>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    m.check_finite();
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) {
        throw Error(ErrorCode::LengthMismatch, "inner dimensions do not match");
    }
    Matrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const double aik = (*this)(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                out(i, j) += aik * rhs(k, j);
            }
        }
    }
    return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        throw Error(ErrorCode::LengthMismatch, "shape mismatch in addition");
    }
    Matrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] + rhs.entries_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        throw Error(ErrorCode::LengthMismatch, "shape mismatch in subtraction");
    }
    Matrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] - rhs.entries_[i];
    return out;
}

Matrix Matrix::operator*(double s) const {
    Matrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] * s;
    return out;
}

Matrix operator*(double s, const Matrix& m) { return m * s; }

Matrix Matrix::column(std::size_t j) const {
    Matrix c(rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
    return c;
}

std::vector<double> Matrix::column_vector(std::size_t j) const {
    std::vector<double> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

double Matrix::norm_frobenius() const {
    double s = 0.0;
    for (double v : entries_) s += v * v;
    return std::sqrt(s);
}

double Matrix::norm_max() const {
    double m = 0.0;
    for (double v : entries_) m = std::max(m, std::abs(v));
    return m;
}

double Matrix::symmetry_defect() const {
    if (rows_ != cols_) {
        throw Error(ErrorCode::NonSquare, "symmetry defect needs a square matrix");
    }
    double d = 0.0;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            d = std::max(d, std::abs((*this)(i, j) - (*this)(j, i)));
    return d;
}

void Matrix::check_finite() const {
    for (double v : entries_) {
        if (!std::isfinite(v)) {
            throw Error(ErrorCode::NonFiniteEntry, "matrix entry is not finite");
        }
    }
}

}  // namespace submaj
