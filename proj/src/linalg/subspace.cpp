#include "galt/subspace.hpp"

#include "galt/errors.hpp"

namespace galt {

Subspace Subspace::zero(const Field& f, std::size_t n) { return Subspace(Matrix(f, 0, n), {}); }

Subspace Subspace::full(const Field& f, std::size_t n)
{
    std::vector<std::size_t> piv(n);
    for (std::size_t i = 0; i < n; ++i)
        piv[i] = i;
    return Subspace(Matrix::identity(f, n), std::move(piv));
}

Subspace Subspace::span(const Field& f, std::size_t n, const std::vector<Vector>& vectors)
{
    return row_space(Matrix::from_rows(f, n, vectors));
}

Subspace Subspace::row_space(const Matrix& m)
{
    auto [red, rk, piv] = rref(m);
    Matrix basis(m.field(), rk, m.cols());
    for (std::size_t r = 0; r < rk; ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            basis(r, c) = red(r, c);
    return Subspace(std::move(basis), std::move(piv));
}

void Subspace::check_ambient(std::size_t n, const char* what) const
{
    if (n != ambient_dim())
        throw DimensionMismatch(std::string(what) + ": ambient dimension " + std::to_string(ambient_dim()) +
                                " vs " + std::to_string(n));
}

bool Subspace::contains(const Vector& v) const
{
    check_ambient(v.size(), "contains");
    // In RREF the coordinates of a member are its entries at the pivot columns.
    Vector w = zero_vector(field(), ambient_dim());
    for (std::size_t r = 0; r < dim(); ++r)
        if (!v[pivots_[r]].is_zero())
            for (std::size_t c = 0; c < ambient_dim(); ++c)
                if (!basis_(r, c).is_zero())
                    w[c] += v[pivots_[r]] * basis_(r, c);
    return w == v;
}

bool Subspace::contains(const Subspace& other) const
{
    check_ambient(other.ambient_dim(), "contains");
    for (std::size_t r = 0; r < other.dim(); ++r)
        if (!contains(other.basis_.row(r)))
            return false;
    return true;
}

Vector Subspace::coordinates(const Vector& v) const
{
    if (!contains(v))
        throw PreconditionError("coordinates requested for a vector outside the subspace");
    Vector out;
    out.reserve(dim());
    for (auto p : pivots_)
        out.push_back(v[p]);
    return out;
}

Subspace Subspace::sum(const Subspace& other) const
{
    check_ambient(other.ambient_dim(), "sum");
    return row_space(basis_.stacked(other.basis_));
}

Subspace Subspace::intersect(const Subspace& other) const
{
    check_ambient(other.ambient_dim(), "intersect");
    return kernel(annihilator().stacked(other.annihilator()));
}

Matrix Subspace::annihilator() const
{
    // Functionals phi with B phi = 0 are exactly those vanishing on the rows of B.
    return kernel(basis_).basis();
}

Subspace kernel(const Matrix& m)
{
    auto [red, rk, piv] = rref(m);
    const Field& f = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : piv)
        is_pivot[p] = true;
    std::vector<Vector> gens;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        Vector v = zero_vector(f, m.cols());
        v[free] = f.one();
        for (std::size_t r = 0; r < rk; ++r)
            v[piv[r]] = -red(r, free);
        gens.push_back(std::move(v));
    }
    return Subspace::span(f, m.cols(), gens);
}

Subspace preimage_under(const Matrix& m, const Subspace& w)
{
    if (m.rows() != w.ambient_dim())
        throw DimensionMismatch("preimage: map lands in dimension " + std::to_string(m.rows()) +
                                " but subspace lives in " + std::to_string(w.ambient_dim()));
    return kernel(w.annihilator() * m);
}

Subspace invariant_closure(const Subspace& start, std::span<const Matrix> ops)
{
    Subspace current = start;
    for (const auto& op : ops)
        if (op.rows() != start.ambient_dim() || op.cols() != start.ambient_dim())
            throw DimensionMismatch("closure operator shape");
    // Only images of newly added directions need to be examined each round.
    std::vector<Vector> frontier = current.basis_vectors();
    while (!frontier.empty()) {
        std::vector<Vector> images;
        for (const auto& v : frontier)
            for (const auto& op : ops) {
                Vector w = op.apply(v);
                if (!current.contains(w))
                    images.push_back(std::move(w));
            }
        if (images.empty())
            break;
        current = current.sum(Subspace::span(current.field(), current.ambient_dim(), images));
        frontier = std::move(images);
    }
    return current;
}

}  // namespace galt
