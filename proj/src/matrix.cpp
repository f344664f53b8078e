#include "modext/matrix.hpp"

#include <stdexcept>

namespace modext {

Vec operator+(const Vec& u, const Vec& v)
{
    if (u.size() != v.size())
        throw std::invalid_argument("vector length mismatch");
    Vec w(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        w[i] = u[i] + v[i];
    return w;
}

Vec operator-(const Vec& u, const Vec& v)
{
    if (u.size() != v.size())
        throw std::invalid_argument("vector length mismatch");
    Vec w(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        w[i] = u[i] - v[i];
    return w;
}

Vec operator*(const Rat& c, const Vec& v)
{
    Vec w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        w[i] = c * v[i];
    return w;
}

bool is_zero(const Vec& v)
{
    for (const auto& x : v)
        if (x != 0)
            return false;
    return true;
}

Vec zero_vec(std::size_t n) { return Vec(n); }

Mat Mat::identity(std::size_t n)
{
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, std::size_t cols)
{
    Mat m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw std::invalid_argument("row length mismatch");
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = rows[i][j];
    }
    return m;
}

Vec Mat::row(std::size_t i) const
{
    Vec v(cols_);
    for (std::size_t j = 0; j < cols_; ++j)
        v[j] = at(i, j);
    return v;
}

Vec Mat::col(std::size_t j) const
{
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        v[i] = at(i, j);
    return v;
}

Mat Mat::operator+(const Mat& o) const
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix shape mismatch");
    Mat m(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i)
        m.a_[i] = a_[i] + o.a_[i];
    return m;
}

Mat Mat::operator-(const Mat& o) const
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix shape mismatch");
    Mat m(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i)
        m.a_[i] = a_[i] - o.a_[i];
    return m;
}

Mat Mat::operator*(const Mat& o) const
{
    if (cols_ != o.rows_)
        throw std::invalid_argument("matrix shape mismatch in product");
    Mat m(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& x = at(i, k);
            if (x == 0)
                continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                m.at(i, j) += x * o.at(k, j);
        }
    return m;
}

Vec Mat::apply(const Vec& v) const
{
    if (v.size() != cols_)
        throw std::invalid_argument("vector length mismatch in apply");
    Vec w(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0)
                w[i] += at(i, j) * v[j];
    return w;
}

Mat Mat::transpose() const
{
    Mat m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            m.at(j, i) = at(i, j);
    return m;
}

Mat Mat::scaled(const Rat& c) const
{
    Mat m(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i)
        m.a_[i] = c * a_[i];
    return m;
}

bool Mat::is_zero() const
{
    for (const auto& x : a_)
        if (x != 0)
            return false;
    return true;
}

std::vector<std::size_t> Mat::rref()
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t p = r;
        while (p < rows_ && at(p, c) == 0)
            ++p;
        if (p == rows_)
            continue;
        if (p != r)
            for (std::size_t j = 0; j < cols_; ++j)
                std::swap(at(p, j), at(r, j));
        Rat inv = 1 / at(r, c);
        for (std::size_t j = c; j < cols_; ++j)
            at(r, j) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || at(i, c) == 0)
                continue;
            Rat f = at(i, c);
            for (std::size_t j = c; j < cols_; ++j)
                at(i, j) -= f * at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t Mat::rank() const
{
    Mat m = *this;
    return m.rref().size();
}

Mat Mat::nullspace() const
{
    Mat m = *this;
    auto pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots)
        is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f])
            continue;
        Vec v(cols_);
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -m.at(i, f);
        basis.push_back(std::move(v));
    }
    return Mat::from_rows(basis, cols_);
}

std::optional<Vec> Mat::solve(const Vec& b) const
{
    if (b.size() != rows_)
        throw std::invalid_argument("rhs length mismatch");
    Mat aug(rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j)
            aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = b[i];
    }
    auto pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == cols_)
        return std::nullopt; // inconsistent
    Vec x(cols_);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        x[pivots[i]] = aug.at(i, cols_);
    return x;
}

Mat vstack(const Mat& top, const Mat& bottom)
{
    if (top.rows() == 0)
        return bottom;
    if (bottom.rows() == 0)
        return top;
    if (top.cols() != bottom.cols())
        throw std::invalid_argument("vstack column mismatch");
    Mat m(top.rows() + bottom.rows(), top.cols());
    for (std::size_t i = 0; i < top.rows(); ++i)
        for (std::size_t j = 0; j < top.cols(); ++j)
            m.at(i, j) = top.at(i, j);
    for (std::size_t i = 0; i < bottom.rows(); ++i)
        for (std::size_t j = 0; j < top.cols(); ++j)
            m.at(top.rows() + i, j) = bottom.at(i, j);
    return m;
}

std::size_t row_span_dim(const Mat& m) { return m.rank(); }

bool rows_in_span(const Mat& sub, const Mat& space)
{
    if (sub.rows() == 0)
        return true;
    if (space.rows() == 0) {
        Mat s = sub;
        return s.rank() == 0;
    }
    return vstack(space, sub).rank() == space.rank();
}

bool same_row_span(const Mat& a, const Mat& b)
{
    return rows_in_span(a, b) && rows_in_span(b, a);
}

} // namespace modext
