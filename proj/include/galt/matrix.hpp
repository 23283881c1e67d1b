#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "galt/field.hpp"

namespace galt {

/// Coordinate vector over a field. All entries must share one field.
using Vector = std::vector<Scalar>;

Vector zero_vector(const Field& f, std::size_t n);
Vector unit_vector(const Field& f, std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector& add_to(Vector& acc, const Vector& v);
/// acc += c * v
Vector& add_scaled(Vector& acc, const Scalar& c, const Vector& v);
Vector operator+(Vector a, const Vector& b);
Vector operator-(Vector a, const Vector& b);
Vector operator-(Vector v);
Vector operator*(const Scalar& c, Vector v);
std::string to_string(const Vector& v);

/// Dense row-major matrix over an exact field. A matrix M represents the
/// linear map v -> M v on column vectors, so column j holds the image of e_j.
class Matrix {
public:
    Matrix(const Field& f, std::size_t rows, std::size_t cols);

    static Matrix identity(const Field& f, std::size_t n);
    /// Rows given as vectors of length `cols`.
    static Matrix from_rows(const Field& f, std::size_t cols, const std::vector<Vector>& rows);
    /// Columns given as vectors of length `rows`.
    static Matrix from_columns(const Field& f, std::size_t rows, const std::vector<Vector>& cols);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;
    std::vector<Vector> row_vectors() const;

    Vector apply(const Vector& v) const;
    Matrix transpose() const;
    bool is_zero() const;
    /// Vertical concatenation.
    Matrix stacked(const Matrix& below) const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& c, Matrix m);
    friend bool operator==(const Matrix& a, const Matrix& b);

    /// Row-major flattening, length rows*cols.
    const std::vector<Scalar>& entries() const { return data_; }

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Scalar> data_;
};

struct RrefResult {
    Matrix reduced;
    std::size_t rank;
    std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form. Throws FieldMismatch if any entry lives over a
/// different field than the matrix.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Some x with m x = rhs, if one exists.
std::optional<Vector> solve(const Matrix& m, const Vector& rhs);

}  // namespace galt
