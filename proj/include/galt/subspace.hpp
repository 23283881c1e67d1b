#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "galt/matrix.hpp"

namespace galt {

/// Linear subspace of F^n held as a reduced row-echelon basis. Since the RREF
/// basis of a subspace is unique, two subspaces are equal exactly when their
/// basis matrices are equal.
class Subspace {
public:
    static Subspace zero(const Field& f, std::size_t n);
    static Subspace full(const Field& f, std::size_t n);
    static Subspace span(const Field& f, std::size_t n, const std::vector<Vector>& vectors);
    /// Row space of m.
    static Subspace row_space(const Matrix& m);

    const Field& field() const { return basis_.field(); }
    std::size_t ambient_dim() const { return basis_.cols(); }
    std::size_t dim() const { return basis_.rows(); }
    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_dim(); }

    const Matrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    std::vector<Vector> basis_vectors() const { return basis_.row_vectors(); }

    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;
    /// Coordinates of v with respect to basis(); v must lie in the subspace.
    Vector coordinates(const Vector& v) const;

    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;
    /// Rows span the functionals vanishing on this subspace.
    Matrix annihilator() const;

    friend bool operator==(const Subspace& a, const Subspace& b)
    {
        return a.ambient_dim() == b.ambient_dim() && a.basis_ == b.basis_;
    }

private:
    Subspace(Matrix basis, std::vector<std::size_t> pivots)
        : basis_(std::move(basis)), pivots_(std::move(pivots))
    {
    }
    void check_ambient(std::size_t n, const char* what) const;

    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

/// {v : m v = 0}
Subspace kernel(const Matrix& m);

/// {v : m v in w}
Subspace preimage_under(const Matrix& m, const Subspace& w);

/// Smallest subspace containing `start` and mapped into itself by every
/// operator in `ops`.
Subspace invariant_closure(const Subspace& start, std::span<const Matrix> ops);

}  // namespace galt
