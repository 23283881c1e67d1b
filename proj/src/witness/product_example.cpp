#include "galt/errors.hpp"
#include "galt/witness.hpp"

namespace galt {

namespace {

// Block matrix on A x A with `m` placed at block (row, col).
Matrix block(const Matrix& m, std::size_t row, std::size_t col)
{
    const std::size_t n = m.rows();
    Matrix out(m.field(), 2 * n, 2 * n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            out(row * n + r, col * n + c) = m(r, c);
    return out;
}

}  // namespace

ProductExample product_example(std::uint32_t p)
{
    if (p == 2 || p == 3)
        throw PreconditionError("the product example needs characteristic other than 2 and 3");
    const Field f = Field::prime(p);
    const Algebra a = heisenberg_like(f);
    const std::size_t n = a.dim();
    Algebra product = direct_product(a, a);

    Matrix first = block(Matrix::identity(f, n), 0, 0);
    ActionData scalar_part{scalar_algebra(f), product, {first}, {first}};
    ActionData lambda_part{a, product, {}, {}};
    for (std::size_t x = 0; x < n; ++x) {
        lambda_part.left.push_back(block(a.left_basis_operator(x), 1, 0));
        lambda_part.right.push_back(block(a.right_basis_operator(x), 1, 0));
    }

    ProductExample out{p,
                       product,
                       scalar_part,
                       lambda_part,
                       check_derived_action(scalar_part, Category::galt),
                       check_derived_action(lambda_part, Category::galt),
                       {},
                       std::nullopt,
                       closure(product, {}),
                       {}};

    MultiplierPair lambda = action_pairs(lambda_part)[0];
    MultiplierPair one = action_pairs(scalar_part)[0];
    Vector x2 = product.basis_vector(1);
    out.b1_residual = identity_B(BIdentity::b1, lambda, one, one, x2);

    const std::size_t z2 = n + 2;
    bool on_line = true;
    for (std::size_t k = 0; k < out.b1_residual.size(); ++k)
        if (k != z2 && !out.b1_residual[k].is_zero())
            on_line = false;
    if (on_line)
        out.coefficient = out.b1_residual[z2];

    if (all_hold(out.scalar_reports) && all_hold(out.lambda_reports))
        out.closure = relative_actor(product, {scalar_part, lambda_part});
    out.closure_axiom_2_1 = check_law(out.closure.table, Law::axiom_2_1);
    return out;
}

}  // namespace galt
