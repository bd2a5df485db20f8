#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "graphsusy/error.hpp"

namespace graphsusy {

/// Dense row-major matrix. Small by design: the operators in this library
/// live on graphs with at most a few thousand simplices.
template <typename T>
class Matrix {
public:
    using value_type = T;

    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, T fill = T{})
        : rows_(rows)
        , cols_(cols)
        , data_(rows * cols, fill)
    {
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = T{1};
        return m;
    }

    static Matrix diagonal(std::span<const T> values)
    {
        Matrix m(values.size(), values.size());
        for (std::size_t i = 0; i < values.size(); ++i)
            m(i, i) = values[i];
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }
    bool empty() const noexcept { return data_.empty(); }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    const std::vector<T>& data() const noexcept { return data_; }
    std::vector<T>& data() noexcept { return data_; }

    Matrix transpose() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                t(c, r) = (*this)(r, c);
        return t;
    }

    template <typename U>
    Matrix<U> cast() const
    {
        Matrix<U> out(rows_, cols_);
        std::transform(data_.begin(), data_.end(), out.data().begin(),
                       [](const T& v) { return static_cast<U>(v); });
        return out;
    }

    T trace() const
    {
        T s{};
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i)
            s += (*this)(i, i);
        return s;
    }

    Matrix& operator+=(const Matrix& o)
    {
        require_same_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i)
            data_[i] += o.data_[i];
        return *this;
    }

    Matrix& operator-=(const Matrix& o)
    {
        require_same_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i)
            data_[i] -= o.data_[i];
        return *this;
    }

    Matrix& operator*=(const T& s)
    {
        for (auto& v : data_)
            v *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
    friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
    friend Matrix operator-(Matrix a)
    {
        for (auto& v : a.data_)
            v = -v;
        return a;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_)
            throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T aik = a(i, k);
                if (aik == T{})
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    c(i, j) += aik * b(k, j);
            }
        }
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    void require_same_shape(const Matrix& o) const
    {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw Error(ErrorCode::DimensionMismatch, "matrix shapes differ");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<std::int64_t>;
using RealMatrix = Matrix<double>;

template <typename T>
std::vector<T> operator*(const Matrix<T>& m, std::span<const T> x)
{
    if (m.cols() != x.size())
        throw Error(ErrorCode::DimensionMismatch, "matrix-vector shape mismatch");
    std::vector<T> y(m.rows(), T{});
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            y[i] += m(i, j) * x[j];
    return y;
}

template <typename T>
std::vector<T> operator*(const Matrix<T>& m, const std::vector<T>& x)
{
    return m * std::span<const T>(x);
}

/// Exact integer power by repeated squaring.
template <typename T>
Matrix<T> matrix_power(const Matrix<T>& m, unsigned k)
{
    Matrix<T> result = Matrix<T>::identity(m.rows());
    Matrix<T> base = m;
    while (k > 0) {
        if (k & 1u)
            result = result * base;
        k >>= 1u;
        if (k > 0)
            base = base * base;
    }
    return result;
}

template <typename T>
Matrix<T> commutator(const Matrix<T>& a, const Matrix<T>& b)
{
    return a * b - b * a;
}

template <typename T>
Matrix<T> anticommutator(const Matrix<T>& a, const Matrix<T>& b)
{
    return a * b + b * a;
}

template <typename T>
Matrix<T> direct_sum(const Matrix<T>& a, const Matrix<T>& b)
{
    Matrix<T> out(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            out(a.rows() + i, a.cols() + j) = b(i, j);
    return out;
}

template <typename T>
bool is_zero(const Matrix<T>& m)
{
    return std::all_of(m.data().begin(), m.data().end(), [](const T& v) { return v == T{}; });
}

inline double max_abs(const RealMatrix& m)
{
    double r = 0.0;
    for (double v : m.data())
        r = std::max(r, std::abs(v));
    return r;
}

inline double max_abs_diff(const RealMatrix& a, const RealMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error(ErrorCode::DimensionMismatch, "matrix shapes differ");
    double r = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i)
        r = std::max(r, std::abs(a.data()[i] - b.data()[i]));
    return r;
}

inline double frobenius_norm(const RealMatrix& m)
{
    double s = 0.0;
    for (double v : m.data())
        s += v * v;
    return std::sqrt(s);
}

template <typename T>
bool is_symmetric_exact(const Matrix<T>& m)
{
    if (!m.square())
        return false;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i + 1; j < m.cols(); ++j)
            if (m(i, j) != m(j, i))
                return false;
    return true;
}

inline bool is_symmetric(const RealMatrix& m, double tol)
{
    if (!m.square())
        return false;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i + 1; j < m.cols(); ++j)
            if (std::abs(m(i, j) - m(j, i)) > tol)
                return false;
    return true;
}

inline double vector_norm(std::span<const double> x)
{
    double s = 0.0;
    for (double v : x)
        s += v * v;
    return std::sqrt(s);
}

} // namespace graphsusy
