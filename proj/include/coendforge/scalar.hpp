#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace coendforge {

/// Thrown when two values from different base fields meet in one operation.
class MixedFieldError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Base field descriptor. `Rational` is Q, `Prime` is F_p, `PAdic` is Q with
/// the p-adic absolute value attached (arithmetic is that of Q).
class Field {
public:
    enum class Kind : std::uint8_t { Rational, Prime, PAdic };

    Field() = default;

    static Field rational() { return Field{Kind::Rational, 0}; }
    static Field prime(std::uint32_t p);
    static Field padic(std::uint32_t p);

    /// Parses "q", "fp:<p>" or "padic:<p>".
    static Field parse(std::string_view text);

    Kind kind() const { return kind_; }
    std::uint32_t characteristic_prime() const { return p_; }
    bool is_prime_field() const { return kind_ == Kind::Prime; }
    bool is_padic() const { return kind_ == Kind::PAdic; }

    std::string to_string() const;

    friend bool operator==(const Field&, const Field&) = default;

    // Field arithmetic on raw representatives. For F_p the representative is
    // an integer in [0, p).
    void normalize(mpq_class& x) const;
    mpq_class from_rational(const mpq_class& x) const;
    mpq_class add(const mpq_class& a, const mpq_class& b) const;
    mpq_class sub(const mpq_class& a, const mpq_class& b) const;
    mpq_class mul(const mpq_class& a, const mpq_class& b) const;
    mpq_class neg(const mpq_class& a) const;
    mpq_class inv(const mpq_class& a) const;
    mpq_class div(const mpq_class& a, const mpq_class& b) const { return mul(a, inv(b)); }

    /// In-place a -= c * b, the elimination kernel.
    void sub_mul(mpq_class& a, const mpq_class& c, const mpq_class& b) const;

private:
    Field(Kind k, std::uint32_t p) : kind_(k), p_(p) {}
    Kind kind_ = Kind::Rational;
    std::uint32_t p_ = 0;
};

void require_same_field(const Field& a, const Field& b, std::string_view where);

/// Exact scalar: an element of Q, F_p, or p-adically valued Q.
class Scalar {
public:
    Scalar() = default;
    Scalar(Field f, const mpq_class& v) : field_(f), value_(f.from_rational(v)) {}
    Scalar(Field f, long v) : Scalar(f, mpq_class(v)) {}

    /// Parses "3/4", "-2", "0".
    static Scalar parse(Field f, std::string_view text);

    const Field& field() const { return field_; }
    const mpq_class& value() const { return value_; }
    bool is_zero() const { return sgn(value_) == 0; }

    std::string to_string() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.field_ == b.field_ && a.value_ == b.value_;
    }

private:
    Field field_ = Field::rational();
    mpq_class value_ = 0;
};

/// p-adic valuation of a nonzero rational.
long padic_valuation(const mpq_class& x, std::uint32_t p);

std::string rational_to_string(const mpq_class& x);
mpq_class parse_rational(std::string_view text);

}  // namespace coendforge
