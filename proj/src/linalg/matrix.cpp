#include "galt/matrix.hpp"

#include <sstream>

#include "galt/errors.hpp"

namespace galt {

Vector zero_vector(const Field& f, std::size_t n) { return Vector(n, f.zero()); }

Vector unit_vector(const Field& f, std::size_t n, std::size_t i)
{
    Vector v = zero_vector(f, n);
    v.at(i) = f.one();
    return v;
}

bool is_zero(const Vector& v)
{
    for (const auto& x : v)
        if (!x.is_zero())
            return false;
    return true;
}

Vector& add_to(Vector& acc, const Vector& v)
{
    if (acc.size() != v.size())
        throw DimensionMismatch("vector lengths " + std::to_string(acc.size()) + " and " + std::to_string(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i)
        acc[i] += v[i];
    return acc;
}

Vector& add_scaled(Vector& acc, const Scalar& c, const Vector& v)
{
    if (acc.size() != v.size())
        throw DimensionMismatch("vector lengths " + std::to_string(acc.size()) + " and " + std::to_string(v.size()));
    if (c.is_zero())
        return acc;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero())
            acc[i] += c * v[i];
    return acc;
}

Vector operator+(Vector a, const Vector& b) { return add_to(a, b); }

Vector operator-(Vector a, const Vector& b)
{
    if (a.size() != b.size())
        throw DimensionMismatch("vector lengths " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] -= b[i];
    return a;
}

Vector operator-(Vector v)
{
    for (auto& x : v)
        x = -x;
    return v;
}

Vector operator*(const Scalar& c, Vector v)
{
    for (auto& x : v)
        x *= c;
    return v;
}

std::string to_string(const Vector& v)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? ", " : "") << v[i];
    os << ')';
    return os.str();
}

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, f.zero())
{
}

Matrix Matrix::identity(const Field& f, std::size_t n)
{
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = f.one();
    return m;
}

Matrix Matrix::from_rows(const Field& f, std::size_t cols, const std::vector<Vector>& rows)
{
    Matrix m(f, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw DimensionMismatch("row length " + std::to_string(rows[r].size()) + ", expected " + std::to_string(cols));
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::from_columns(const Field& f, std::size_t rows, const std::vector<Vector>& cols)
{
    Matrix m(f, rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows)
            throw DimensionMismatch("column length " + std::to_string(cols[c].size()) + ", expected " + std::to_string(rows));
        for (std::size_t r = 0; r < rows; ++r)
            m(r, c) = cols[c][r];
    }
    return m;
}

Vector Matrix::row(std::size_t r) const
{
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const
{
    Vector v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v.push_back((*this)(r, c));
    return v;
}

std::vector<Vector> Matrix::row_vectors() const
{
    std::vector<Vector> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        out.push_back(row(r));
    return out;
}

Vector Matrix::apply(const Vector& v) const
{
    if (v.size() != cols_)
        throw DimensionMismatch("matrix with " + std::to_string(cols_) + " columns applied to vector of length " +
                                std::to_string(v.size()));
    Vector out = zero_vector(field_, rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
        if (v[c].is_zero())
            continue;
        for (std::size_t r = 0; r < rows_; ++r) {
            const Scalar& e = (*this)(r, c);
            if (!e.is_zero())
                out[r] += e * v[c];
        }
    }
    return out;
}

Matrix Matrix::transpose() const
{
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

bool Matrix::is_zero() const
{
    for (const auto& x : data_)
        if (!x.is_zero())
            return false;
    return true;
}

Matrix Matrix::stacked(const Matrix& below) const
{
    if (below.cols_ != cols_)
        throw DimensionMismatch("stacking matrices with " + std::to_string(cols_) + " and " +
                                std::to_string(below.cols_) + " columns");
    if (!(below.field_ == field_))
        throw FieldMismatch();
    Matrix m(field_, rows_ + below.rows_, cols_);
    std::copy(data_.begin(), data_.end(), m.data_.begin());
    std::copy(below.data_.begin(), below.data_.end(), m.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
    return m;
}

Matrix& Matrix::operator+=(const Matrix& o)
{
    if (o.rows_ != rows_ || o.cols_ != cols_)
        throw DimensionMismatch("matrix sum shapes differ");
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] += o.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o)
{
    if (o.rows_ != rows_ || o.cols_ != cols_)
        throw DimensionMismatch("matrix difference shapes differ");
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] -= o.data_[i];
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols_ != b.rows_)
        throw DimensionMismatch("product of " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) + " and " +
                                std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
    if (!(a.field_ == b.field_))
        throw FieldMismatch();
    Matrix m(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& x = a(i, k);
            if (x.is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Scalar& y = b(k, j);
                if (!y.is_zero())
                    m(i, j) += x * y;
            }
        }
    return m;
}

Matrix operator*(const Scalar& c, Matrix m)
{
    for (auto& x : m.data_)
        x *= c;
    return m;
}

bool operator==(const Matrix& a, const Matrix& b)
{
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
}

RrefResult rref(const Matrix& m)
{
    for (const auto& x : m.entries())
        if (!(x.field() == m.field()))
            throw FieldMismatch("matrix over " + m.field().name() + " holds an entry from " + x.field().name());

    Matrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c).is_zero())
            ++p;
        if (p == a.rows())
            continue;
        if (p != r)
            for (std::size_t j = 0; j < a.cols(); ++j)
                std::swap(a(p, j), a(r, j));
        Scalar inv = a(r, c).inverse();
        for (std::size_t j = c; j < a.cols(); ++j)
            if (!a(r, j).is_zero())
                a(r, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c).is_zero())
                continue;
            Scalar factor = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j)
                if (!a(r, j).is_zero())
                    a(i, j) -= factor * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(a), r, std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::optional<Vector> solve(const Matrix& m, const Vector& rhs)
{
    if (rhs.size() != m.rows())
        throw DimensionMismatch("right-hand side length " + std::to_string(rhs.size()) + " vs " +
                                std::to_string(m.rows()) + " rows");
    Matrix aug(m.field(), m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c)
            aug(r, c) = m(r, c);
        aug(r, m.cols()) = rhs[r];
    }
    auto [red, rk, piv] = rref(aug);
    if (!piv.empty() && piv.back() == m.cols())
        return std::nullopt;
    Vector x = zero_vector(m.field(), m.cols());
    for (std::size_t i = 0; i < rk; ++i)
        x[piv[i]] = red(i, m.cols());
    return x;
}

}  // namespace galt
