#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace superbracket {

/// The base field: either the rationals or a prime field F_p.
class Field {
  public:
    enum class Kind { Rationals, Prime };

    static Field rationals() { return Field{}; }
    /// Throws FieldError unless p is a prime below 2^31.
    static Field prime(std::uint64_t p);
    /// Parses "q" or "fp:<p>".
    static Field parse(const std::string& text);

    Kind kind() const { return kind_; }
    bool is_rationals() const { return kind_ == Kind::Rationals; }
    /// 0 for Q.
    std::uint64_t characteristic() const { return kind_ == Kind::Rationals ? 0 : p_; }
    std::string to_string() const;

    friend bool operator==(const Field&, const Field&) = default;

  private:
    Field() = default;
    Kind kind_ = Kind::Rationals;
    std::uint64_t p_ = 0;
};

/// Exact field element. Rationals are kept in lowest terms with positive
/// denominator (GMP canonical form); residues live in [0, p).
class Scalar {
  public:
    Scalar() : Scalar(Field::rationals()) {}
    explicit Scalar(const Field& field, long value = 0);
    Scalar(const Field& field, const mpq_class& value);

    static Scalar zero(const Field& field) { return Scalar(field, 0L); }
    static Scalar one(const Field& field) { return Scalar(field, 1L); }
    /// "a/b" or "a" for Q; any decimal integer for F_p (reduced).
    static Scalar parse(const Field& field, const std::string& text);

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    /// Canonical text: "a/b" for Q, decimal residue for F_p.
    std::string to_string() const;

    const mpq_class& rational() const { return std::get<mpq_class>(value_); }
    std::uint64_t residue() const { return std::get<std::uint64_t>(value_); }

    Scalar inverse() const;
    /// Some r with r*r == *this, if one exists in the field.
    std::optional<Scalar> sqrt() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  private:
    void check_same_field(const Scalar& other) const;

    Field field_;
    std::variant<mpq_class, std::uint64_t> value_;
};

/// The image [n] of an integer under Z -> k.
Scalar int_image(long n, const Field& field);
Scalar int_image(const mpz_class& n, const Field& field);

/// True when x lies in the image of Z (always true in a prime field).
bool is_integer_in_field(const Scalar& x);

} // namespace superbracket
