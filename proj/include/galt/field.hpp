#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace galt {

class Scalar;

/// Ground field: a prime field GF(p) with 2 <= p < 2^16, or the rationals.
class Field {
public:
    static Field rationals() { return Field(0); }
    static Field prime(std::uint32_t p);

    /// Accepts "Q", "QQ", "rationals", "GF(p)", "GFp", "Fp" or a bare prime.
    static Field parse(std::string_view text);

    bool is_rational() const { return p_ == 0; }
    bool is_finite() const { return p_ != 0; }
    /// 0 for the rationals.
    std::uint32_t characteristic() const { return p_; }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(std::int64_t v) const;
    /// Parses "3", "-2/7" (also with a U+2212 minus sign).
    Scalar parse_scalar(std::string_view text) const;

    std::string name() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    friend class Scalar;
    explicit Field(std::uint32_t p) : p_(p) {}
    std::uint32_t p_;
};

bool is_prime(std::uint32_t n);

/// Exact field element. Residues are kept in [0, p); fractions are kept
/// reduced with a positive denominator (mpq canonical form).
class Scalar {
public:
    struct Residue {
        std::uint32_t value;
        std::uint32_t modulus;
        friend bool operator==(const Residue&, const Residue&) = default;
    };

    Scalar(Residue r) : rep_(r) {}
    Scalar(mpq_class q) : rep_(std::move(q)) { std::get<mpq_class>(rep_).canonicalize(); }

    Field field() const;
    bool is_zero() const;
    bool is_one() const;

    /// Only meaningful for residues.
    std::uint32_t residue() const { return std::get<Residue>(rep_).value; }
    const mpq_class& rational() const { return std::get<mpq_class>(rep_); }

    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar operator-() const;

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    std::string to_string() const;

private:
    std::variant<Residue, mpq_class> rep_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace galt
