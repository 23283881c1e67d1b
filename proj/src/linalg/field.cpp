#include "galt/field.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <ostream>

#include "galt/errors.hpp"

namespace galt {

bool is_prime(std::uint32_t n)
{
    if (n < 2)
        return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

Field Field::prime(std::uint32_t p)
{
    if (p < 2 || p >= (1u << 16) || !is_prime(p))
        throw PreconditionError("GF(p) requires a prime 2 <= p < 65536, got " + std::to_string(p));
    return Field(p);
}

namespace {

std::string lowercase(std::string_view s)
{
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
    return out;
}

// Replaces the UTF-8 minus sign with '-' and trims blanks.
std::string normalize_number(std::string_view text)
{
    std::string out;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text.substr(i, 3) == "\xE2\x88\x92") {
            out.push_back('-');
            i += 2;
        } else if (!std::isspace(static_cast<unsigned char>(text[i]))) {
            out.push_back(text[i]);
        }
    }
    return out;
}

std::uint32_t parse_prime_digits(std::string_view digits, std::string_view original)
{
    std::uint32_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size())
        throw ParseError("unrecognized field '" + std::string(original) + "'");
    return p;
}

}  // namespace

Field Field::parse(std::string_view text)
{
    std::string s = lowercase(normalize_number(text));
    if (s == "q" || s == "qq" || s == "rationals" || s == "rational")
        return rationals();
    std::string_view digits = s;
    if (digits.starts_with("gf(") && digits.ends_with(")"))
        digits = digits.substr(3, digits.size() - 4);
    else if (digits.starts_with("gf"))
        digits = digits.substr(2);
    else if (digits.starts_with("f"))
        digits = digits.substr(1);
    std::uint32_t p = parse_prime_digits(digits, text);
    try {
        return prime(p);
    } catch (const PreconditionError& e) {
        throw ParseError(e.what());
    }
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t v) const
{
    if (is_rational())
        return Scalar(mpq_class(mpz_class(std::to_string(v))));
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0)
        r += p_;
    return Scalar(Scalar::Residue{static_cast<std::uint32_t>(r), p_});
}

Scalar Field::parse_scalar(std::string_view text) const
{
    std::string s = normalize_number(text);
    if (s.empty())
        throw ParseError("empty coefficient");
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    auto valid_int = [](const std::string& t, bool allow_sign) {
        std::size_t start = (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (start >= t.size())
            return false;
        return std::all_of(t.begin() + static_cast<std::ptrdiff_t>(start), t.end(),
                           [](unsigned char c) { return std::isdigit(c) != 0; });
    };
    if (!valid_int(num, true) || !valid_int(den, false))
        throw ParseError("malformed coefficient '" + std::string(text) + "'");
    if (num[0] == '+')
        num.erase(0, 1);
    mpz_class n(num), d(den);
    if (d == 0)
        throw ParseError("zero denominator in coefficient '" + std::string(text) + "'");
    if (is_rational())
        return Scalar(mpq_class(n, d));
    mpz_class p(p_);
    mpz_class nr = n % p, dr = d % p;
    if (dr == 0)
        throw ParseError("denominator of '" + std::string(text) + "' vanishes in " + name());
    Scalar a = from_int(nr.get_si());
    Scalar b = from_int(dr.get_si());
    return a / b;
}

std::string Field::name() const
{
    return is_rational() ? "Q" : "GF(" + std::to_string(p_) + ")";
}

Field Scalar::field() const
{
    if (auto r = std::get_if<Residue>(&rep_))
        return Field(r->modulus);
    return Field::rationals();
}

bool Scalar::is_zero() const
{
    if (auto r = std::get_if<Residue>(&rep_))
        return r->value == 0;
    return std::get<mpq_class>(rep_) == 0;
}

bool Scalar::is_one() const
{
    if (auto r = std::get_if<Residue>(&rep_))
        return r->value == 1;
    return std::get<mpq_class>(rep_) == 1;
}

namespace {

std::uint32_t pow_mod(std::uint64_t b, std::uint32_t e, std::uint32_t m)
{
    std::uint64_t r = 1;
    b %= m;
    while (e) {
        if (e & 1)
            r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

}  // namespace

Scalar Scalar::inverse() const
{
    if (is_zero())
        throw DivisionByZero();
    if (auto r = std::get_if<Residue>(&rep_))
        return Scalar(Residue{pow_mod(r->value, r->modulus - 2, r->modulus), r->modulus});
    mpq_class inv = 1 / std::get<mpq_class>(rep_);
    return Scalar(inv);
}

Scalar& Scalar::operator+=(const Scalar& o)
{
    if (auto a = std::get_if<Residue>(&rep_)) {
        auto b = std::get_if<Residue>(&o.rep_);
        if (!b || b->modulus != a->modulus)
            throw FieldMismatch();
        std::uint32_t s = a->value + b->value;
        a->value = s >= a->modulus ? s - a->modulus : s;
        return *this;
    }
    auto b = std::get_if<mpq_class>(&o.rep_);
    if (!b)
        throw FieldMismatch();
    std::get<mpq_class>(rep_) += *b;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o)
{
    if (auto a = std::get_if<Residue>(&rep_)) {
        auto b = std::get_if<Residue>(&o.rep_);
        if (!b || b->modulus != a->modulus)
            throw FieldMismatch();
        a->value = a->value >= b->value ? a->value - b->value : a->value + a->modulus - b->value;
        return *this;
    }
    auto b = std::get_if<mpq_class>(&o.rep_);
    if (!b)
        throw FieldMismatch();
    std::get<mpq_class>(rep_) -= *b;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o)
{
    if (auto a = std::get_if<Residue>(&rep_)) {
        auto b = std::get_if<Residue>(&o.rep_);
        if (!b || b->modulus != a->modulus)
            throw FieldMismatch();
        a->value = static_cast<std::uint32_t>(std::uint64_t{a->value} * b->value % a->modulus);
        return *this;
    }
    auto b = std::get_if<mpq_class>(&o.rep_);
    if (!b)
        throw FieldMismatch();
    std::get<mpq_class>(rep_) *= *b;
    return *this;
}

Scalar Scalar::operator-() const
{
    if (auto a = std::get_if<Residue>(&rep_))
        return Scalar(Residue{a->value == 0 ? 0 : a->modulus - a->value, a->modulus});
    return Scalar(mpq_class(-std::get<mpq_class>(rep_)));
}

bool operator==(const Scalar& a, const Scalar& b)
{
    if (a.rep_.index() != b.rep_.index())
        throw FieldMismatch();
    if (auto x = std::get_if<Scalar::Residue>(&a.rep_)) {
        const auto& y = std::get<Scalar::Residue>(b.rep_);
        if (x->modulus != y.modulus)
            throw FieldMismatch();
        return x->value == y.value;
    }
    return std::get<mpq_class>(a.rep_) == std::get<mpq_class>(b.rep_);
}

std::string Scalar::to_string() const
{
    if (auto r = std::get_if<Residue>(&rep_))
        return std::to_string(r->value);
    return std::get<mpq_class>(rep_).get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace galt
