#pragma once

#include "modext/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace modext {

using Vec = std::vector<Rat>;

Vec operator+(const Vec& u, const Vec& v);
Vec operator-(const Vec& u, const Vec& v);
Vec operator*(const Rat& c, const Vec& v);
bool is_zero(const Vec& v);
Vec zero_vec(std::size_t n);

/// Dense matrix over Q, row-major. Elimination uses a fixed pivot order
/// (leftmost column, topmost row), so every derived basis is canonical.
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c) {}

    static Mat identity(std::size_t n);
    static Mat from_rows(const std::vector<Vec>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;

    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const Mat& o) const;
    Vec apply(const Vec& v) const; // matrix * column vector
    Mat transpose() const;
    Mat scaled(const Rat& c) const;
    bool is_zero() const;

    /// In-place reduced row echelon form; returns pivot column indices.
    std::vector<std::size_t> rref();
    std::size_t rank() const;

    /// Canonical basis of {x : Ax = 0}, one kernel vector per row.
    Mat nullspace() const;

    /// One solution of Ax = b, or nullopt if inconsistent.
    std::optional<Vec> solve(const Vec& b) const;

private:
    std::size_t rows_, cols_;
    std::vector<Rat> a_;
};

Mat vstack(const Mat& top, const Mat& bottom);

/// rank of the row span
std::size_t row_span_dim(const Mat& m);

/// every row of sub lies in the row span of space
bool rows_in_span(const Mat& sub, const Mat& space);

bool same_row_span(const Mat& a, const Mat& b);

} // namespace modext
