#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "galt/matrix.hpp"
#include "galt/subspace.hpp"

namespace galt {

/// Finite-dimensional (not necessarily associative) algebra given by
/// structure constants: e_i e_j = sum_k c[i][j][k] e_k.
class Algebra {
public:
    /// Zero multiplication on `dim` basis vectors named e0, e1, ...
    Algebra(const Field& f, std::size_t dim);
    Algebra(const Field& f, std::vector<std::string> basis_names);

    const Field& field() const { return field_; }
    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& basis_names() const { return names_; }

    const Scalar& constant(std::size_t i, std::size_t j, std::size_t k) const
    {
        return table_[(i * dim_ + j) * dim_ + k];
    }
    void set_constant(std::size_t i, std::size_t j, std::size_t k, Scalar value);
    /// Sets e_i e_j = v.
    void set_product(std::size_t i, std::size_t j, const Vector& v);

    /// e_i e_j as a coordinate vector.
    const Vector& basis_product(std::size_t i, std::size_t j) const { return products_[i * dim_ + j]; }

    Vector multiply(const Vector& x, const Vector& y) const;

    /// Matrix of y -> x y.
    Matrix left_operator(const Vector& x) const;
    /// Matrix of y -> y x.
    Matrix right_operator(const Vector& x) const;
    Matrix left_basis_operator(std::size_t i) const;
    Matrix right_basis_operator(std::size_t i) const;

    Vector zero_vector() const { return galt::zero_vector(field_, dim_); }
    Vector basis_vector(std::size_t i) const { return unit_vector(field_, dim_, i); }

    /// Index of a basis name, or dim() when absent.
    std::size_t index_of(const std::string& name) const;

    friend bool operator==(const Algebra& a, const Algebra& b);

private:
    void check_vector(const Vector& v, const char* what) const;

    Field field_;
    std::size_t dim_;
    std::vector<std::string> names_;
    std::vector<Scalar> table_;
    std::vector<Vector> products_;
};

/// Algebra on a subspace closed under multiplication, in the subspace's RREF
/// basis. Throws PreconditionError if the subspace is not a subalgebra.
Algebra subalgebra(const Algebra& a, const Subspace& s);

/// {z : e_i z = z e_i = 0 for all i}
Subspace annihilator(const Algebra& a);

/// Smallest two-sided ideal containing s.
Subspace ideal_generated(const Algebra& a, const Subspace& s);

bool is_ideal(const Algebra& a, const Subspace& s);
bool is_subalgebra(const Algebra& a, const Subspace& s);

/// Direct product A x B with basis of A first.
Algebra direct_product(const Algebra& a, const Algebra& b);

}  // namespace galt
