#include "galt/algebra.hpp"

#include "galt/errors.hpp"

namespace galt {

namespace {

std::vector<std::string> default_names(std::size_t n)
{
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i)
        names.push_back("e" + std::to_string(i));
    return names;
}

}  // namespace

Algebra::Algebra(const Field& f, std::size_t dim) : Algebra(f, default_names(dim)) {}

Algebra::Algebra(const Field& f, std::vector<std::string> basis_names)
    : field_(f),
      dim_(basis_names.size()),
      names_(std::move(basis_names)),
      table_(dim_ * dim_ * dim_, f.zero()),
      products_(dim_ * dim_, galt::zero_vector(f, dim_))
{
}

void Algebra::set_constant(std::size_t i, std::size_t j, std::size_t k, Scalar value)
{
    if (i >= dim_ || j >= dim_ || k >= dim_)
        throw DimensionMismatch("structure constant index out of range");
    if (!(value.field() == field_))
        throw FieldMismatch("structure constant from " + value.field().name() + " in an algebra over " + field_.name());
    table_[(i * dim_ + j) * dim_ + k] = value;
    products_[i * dim_ + j][k] = std::move(value);
}

void Algebra::set_product(std::size_t i, std::size_t j, const Vector& v)
{
    check_vector(v, "set_product");
    for (std::size_t k = 0; k < dim_; ++k)
        set_constant(i, j, k, v[k]);
}

void Algebra::check_vector(const Vector& v, const char* what) const
{
    if (v.size() != dim_)
        throw DimensionMismatch(std::string(what) + ": vector of length " + std::to_string(v.size()) +
                                " in an algebra of dimension " + std::to_string(dim_));
    for (const auto& c : v)
        if (!(c.field() == field_))
            throw FieldMismatch(std::string(what) + ": vector over " + c.field().name() + " in an algebra over " +
                                field_.name());
}

Vector Algebra::multiply(const Vector& x, const Vector& y) const
{
    check_vector(x, "multiply");
    check_vector(y, "multiply");
    Vector out = zero_vector();
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i].is_zero())
            continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y[j].is_zero())
                continue;
            const Vector& p = products_[i * dim_ + j];
            Scalar c = x[i] * y[j];
            for (std::size_t k = 0; k < dim_; ++k)
                if (!p[k].is_zero())
                    out[k] += c * p[k];
        }
    }
    return out;
}

Matrix Algebra::left_operator(const Vector& x) const
{
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < dim_; ++j)
        cols.push_back(multiply(x, basis_vector(j)));
    return Matrix::from_columns(field_, dim_, cols);
}

Matrix Algebra::right_operator(const Vector& x) const
{
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < dim_; ++j)
        cols.push_back(multiply(basis_vector(j), x));
    return Matrix::from_columns(field_, dim_, cols);
}

Matrix Algebra::left_basis_operator(std::size_t i) const
{
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < dim_; ++j)
        cols.push_back(basis_product(i, j));
    return Matrix::from_columns(field_, dim_, cols);
}

Matrix Algebra::right_basis_operator(std::size_t i) const
{
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < dim_; ++j)
        cols.push_back(basis_product(j, i));
    return Matrix::from_columns(field_, dim_, cols);
}

std::size_t Algebra::index_of(const std::string& name) const
{
    for (std::size_t i = 0; i < dim_; ++i)
        if (names_[i] == name)
            return i;
    return dim_;
}

bool operator==(const Algebra& a, const Algebra& b)
{
    return a.field_ == b.field_ && a.dim_ == b.dim_ && a.names_ == b.names_ && a.table_ == b.table_;
}

bool is_subalgebra(const Algebra& a, const Subspace& s)
{
    auto basis = s.basis_vectors();
    for (const auto& u : basis)
        for (const auto& v : basis)
            if (!s.contains(a.multiply(u, v)))
                return false;
    return true;
}

bool is_ideal(const Algebra& a, const Subspace& s)
{
    for (const auto& u : s.basis_vectors())
        for (std::size_t i = 0; i < a.dim(); ++i) {
            Vector e = a.basis_vector(i);
            if (!s.contains(a.multiply(e, u)) || !s.contains(a.multiply(u, e)))
                return false;
        }
    return true;
}

Algebra subalgebra(const Algebra& a, const Subspace& s)
{
    if (s.ambient_dim() != a.dim())
        throw DimensionMismatch("subalgebra: subspace ambient dimension differs from algebra dimension");
    if (!is_subalgebra(a, s))
        throw PreconditionError("subspace is not closed under multiplication");
    Algebra sub(a.field(), s.dim());
    auto basis = s.basis_vectors();
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j)
            sub.set_product(i, j, s.coordinates(a.multiply(basis[i], basis[j])));
    return sub;
}

Subspace annihilator(const Algebra& a)
{
    Matrix stacked(a.field(), 0, a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        stacked = stacked.stacked(a.left_basis_operator(i)).stacked(a.right_basis_operator(i));
    return kernel(stacked);
}

Subspace ideal_generated(const Algebra& a, const Subspace& s)
{
    std::vector<Matrix> ops;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        ops.push_back(a.left_basis_operator(i));
        ops.push_back(a.right_basis_operator(i));
    }
    return invariant_closure(s, ops);
}

Algebra direct_product(const Algebra& a, const Algebra& b)
{
    if (!(a.field() == b.field()))
        throw FieldMismatch("direct product of algebras over different fields");
    std::vector<std::string> names;
    for (const auto& n : a.basis_names())
        names.push_back(n + "_1");
    for (const auto& n : b.basis_names())
        names.push_back(n + "_2");
    Algebra p(a.field(), std::move(names));
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            for (std::size_t k = 0; k < a.dim(); ++k)
                p.set_constant(i, j, k, a.constant(i, j, k));
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j)
            for (std::size_t k = 0; k < b.dim(); ++k)
                p.set_constant(n + i, n + j, n + k, b.constant(i, j, k));
    return p;
}

}  // namespace galt
