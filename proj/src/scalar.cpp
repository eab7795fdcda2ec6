#include "coendforge/scalar.hpp"

#include <charconv>

namespace coendforge {

namespace {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

std::uint32_t parse_prime(std::string_view digits, std::string_view text) {
    std::uint32_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || !is_prime(p)) {
        throw std::invalid_argument("field descriptor needs a prime: " + std::string(text));
    }
    return p;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
    if (!is_prime(p)) throw std::invalid_argument("F_p needs a prime modulus, got " + std::to_string(p));
    return Field{Kind::Prime, p};
}

Field Field::padic(std::uint32_t p) {
    if (!is_prime(p)) throw std::invalid_argument("p-adic field needs a prime, got " + std::to_string(p));
    return Field{Kind::PAdic, p};
}

Field Field::parse(std::string_view text) {
    if (text == "q" || text == "Q") return rational();
    if (text.starts_with("fp:")) return prime(parse_prime(text.substr(3), text));
    if (text.starts_with("padic:")) return padic(parse_prime(text.substr(6), text));
    throw std::invalid_argument("unknown field descriptor: " + std::string(text));
}

std::string Field::to_string() const {
    switch (kind_) {
        case Kind::Rational: return "q";
        case Kind::Prime: return "fp:" + std::to_string(p_);
        case Kind::PAdic: return "padic:" + std::to_string(p_);
    }
    return "q";
}

void Field::normalize(mpq_class& x) const {
    if (kind_ != Kind::Prime) {
        x.canonicalize();
        return;
    }
    mpz_class p = p_;
    mpz_class num = x.get_num() % p;
    mpz_class den = x.get_den() % p;
    if (den < 0) den += p;
    if (den == 0) throw std::domain_error("denominator divisible by p in F_" + std::to_string(p_));
    mpz_class den_inv;
    mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    mpz_class r = (num * den_inv) % p;
    if (r < 0) r += p;
    x = mpq_class(r);
}

mpq_class Field::from_rational(const mpq_class& x) const {
    mpq_class r = x;
    normalize(r);
    return r;
}

mpq_class Field::add(const mpq_class& a, const mpq_class& b) const {
    mpq_class r = a + b;
    if (kind_ == Kind::Prime && r >= p_) r -= p_;
    return r;
}

mpq_class Field::sub(const mpq_class& a, const mpq_class& b) const {
    mpq_class r = a - b;
    if (kind_ == Kind::Prime && r < 0) r += p_;
    return r;
}

mpq_class Field::mul(const mpq_class& a, const mpq_class& b) const {
    if (kind_ != Kind::Prime) return a * b;
    mpz_class r = (a.get_num() * b.get_num()) % p_;
    return mpq_class(r);
}

mpq_class Field::neg(const mpq_class& a) const {
    if (kind_ != Kind::Prime) return -a;
    if (sgn(a) == 0) return a;
    return mpq_class(p_) - a;
}

mpq_class Field::inv(const mpq_class& a) const {
    if (sgn(a) == 0) throw std::domain_error("division by zero");
    if (kind_ != Kind::Prime) return 1 / a;
    mpz_class p = p_;
    mpz_class r;
    mpz_invert(r.get_mpz_t(), a.get_num_mpz_t(), p.get_mpz_t());
    return mpq_class(r);
}

void Field::sub_mul(mpq_class& a, const mpq_class& c, const mpq_class& b) const {
    if (kind_ != Kind::Prime) {
        a -= c * b;
        return;
    }
    mpz_class r = (a.get_num() - c.get_num() * b.get_num()) % p_;
    if (r < 0) r += p_;
    a = mpq_class(r);
}

void require_same_field(const Field& a, const Field& b, std::string_view where) {
    if (!(a == b)) {
        throw MixedFieldError(std::string(where) + ": mixed scalar fields " + a.to_string() + " and " +
                              b.to_string());
    }
}

mpq_class parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("empty scalar");
    if (s.front() == '+') s.erase(0, 1);
    mpq_class r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("not an exact rational: \"" + std::string(text) + "\"");
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: \"" + std::string(text) + "\"");
    r.canonicalize();
    return r;
}

std::string rational_to_string(const mpq_class& x) { return x.get_str(10); }

Scalar Scalar::parse(Field f, std::string_view text) { return Scalar(f, parse_rational(text)); }

std::string Scalar::to_string() const { return rational_to_string(value_); }

Scalar Scalar::operator+(const Scalar& o) const {
    require_same_field(field_, o.field_, "scalar +");
    Scalar r = *this;
    r.value_ = field_.add(value_, o.value_);
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
    require_same_field(field_, o.field_, "scalar -");
    Scalar r = *this;
    r.value_ = field_.sub(value_, o.value_);
    return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
    require_same_field(field_, o.field_, "scalar *");
    Scalar r = *this;
    r.value_ = field_.mul(value_, o.value_);
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const {
    require_same_field(field_, o.field_, "scalar /");
    Scalar r = *this;
    r.value_ = field_.div(value_, o.value_);
    return r;
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.value_ = field_.neg(value_);
    return r;
}

Scalar Scalar::inverse() const {
    Scalar r = *this;
    r.value_ = field_.inv(value_);
    return r;
}

long padic_valuation(const mpq_class& x, std::uint32_t p) {
    if (sgn(x) == 0) throw std::domain_error("valuation of zero");
    long v = 0;
    mpz_class num = x.get_num();
    mpz_class den = x.get_den();
    while (mpz_divisible_ui_p(num.get_mpz_t(), p)) {
        num /= p;
        ++v;
    }
    while (mpz_divisible_ui_p(den.get_mpz_t(), p)) {
        den /= p;
        --v;
    }
    return v;
}

}  // namespace coendforge
