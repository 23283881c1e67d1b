#include <charconv>

#include "galt/errors.hpp"
#include "galt/witness.hpp"

namespace galt {

namespace {

using IntVec = std::vector<long>;

IntVec conj(IntVec x)
{
    for (std::size_t i = 1; i < x.size(); ++i)
        x[i] = -x[i];
    return x;
}

// Cayley-Dickson doubling: (a, b)(c, d) = (ac - d* b, da + b c*).
IntVec cd_mul(const IntVec& x, const IntVec& y)
{
    const std::size_t n = x.size();
    if (n == 1)
        return {x[0] * y[0]};
    const std::size_t h = n / 2;
    IntVec a(x.begin(), x.begin() + h), b(x.begin() + h, x.end());
    IntVec c(y.begin(), y.begin() + h), d(y.begin() + h, y.end());
    IntVec ac = cd_mul(a, c), db = cd_mul(conj(d), b), da = cd_mul(d, a), bc = cd_mul(b, conj(c));
    IntVec out(n);
    for (std::size_t i = 0; i < h; ++i) {
        out[i] = ac[i] - db[i];
        out[h + i] = da[i] + bc[i];
    }
    return out;
}

Algebra octonions()
{
    const Field q = Field::rationals();
    std::vector<std::string> names{"1"};
    for (int i = 1; i < 8; ++i)
        names.push_back("e" + std::to_string(i));
    Algebra o(q, names);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) {
            IntVec x(8, 0), y(8, 0);
            x[i] = 1;
            y[j] = 1;
            IntVec p = cd_mul(x, y);
            for (std::size_t k = 0; k < 8; ++k)
                if (p[k] != 0)
                    o.set_constant(i, j, k, q.from_int(p[k]));
        }
    return o;
}

std::optional<std::size_t> zero_dim(std::string_view name)
{
    std::string_view digits;
    if (name.starts_with("zero(") && name.ends_with(")"))
        digits = name.substr(5, name.size() - 6);
    else if (name.starts_with("zero"))
        digits = name.substr(4);
    else
        return std::nullopt;
    std::size_t n = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size() || n > 64)
        return std::nullopt;
    return n;
}

}  // namespace

Algebra heisenberg_like(const Field& f)
{
    Algebra h(f, std::vector<std::string>{"x1", "x2", "z"});
    h.set_constant(0, 1, 2, f.one());
    h.set_constant(1, 0, 2, -f.one());
    return h;
}

Algebra canonical(std::string_view name)
{
    if (auto n = zero_dim(name))
        return Algebra(Field::prime(2), *n);
    if (name == "gf4") {
        Field f = Field::prime(2);
        Algebra a(f, std::vector<std::string>{"1", "t"});
        a.set_constant(0, 0, 0, f.one());
        a.set_constant(0, 1, 1, f.one());
        a.set_constant(1, 0, 1, f.one());
        a.set_constant(1, 1, 0, f.one());
        a.set_constant(1, 1, 1, f.one());
        return a;
    }
    if (name == "h5")
        return heisenberg_like(Field::prime(5));
    if (name == "w4") {
        Field f = Field::prime(2);
        Algebra a(f, std::vector<std::string>{"x", "u", "v", "w"});
        a.set_constant(0, 0, 1, f.one());  // xx = u
        a.set_constant(0, 1, 2, f.one());  // xu = v
        a.set_constant(1, 0, 3, f.one());  // ux = w
        return a;
    }
    if (name == "octonions")
        return octonions();
    if (name == "unital-gf5-dim2") {
        Field f = Field::prime(5);
        Algebra a(f, std::vector<std::string>{"e", "n"});
        a.set_constant(0, 0, 0, f.one());
        a.set_constant(0, 1, 1, f.one());
        a.set_constant(1, 0, 1, f.one());
        return a;
    }
    throw ParseError("unknown built-in algebra '" + std::string(name) + "'");
}

std::vector<std::string> canonical_names()
{
    return {"zero3", "gf4", "h5", "w4", "octonions", "unital-gf5-dim2"};
}

}  // namespace galt
