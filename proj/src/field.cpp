#include "superbracket/field.hpp"

#include <cctype>

#include "superbracket/errors.hpp"

namespace superbracket {

namespace {

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

std::uint64_t reduce(const mpz_class& n, std::uint64_t p)
{
    mpz_class r = n % mpz_class(static_cast<unsigned long>(p));
    if (r < 0)
        r += static_cast<unsigned long>(p);
    return r.get_ui();
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p)
{
    std::uint64_t result = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1)
            result = result * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return result;
}

bool parse_integer(const std::string& text, mpz_class& out)
{
    if (text.empty())
        return false;
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size())
        return false;
    for (std::size_t i = start; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            return false;
    std::string digits = text[0] == '+' ? text.substr(1) : text;
    return out.set_str(digits, 10) == 0;
}

} // namespace

Field Field::prime(std::uint64_t p)
{
    if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
        throw FieldError("field characteristic must be a prime below 2^31, got " + std::to_string(p));
    Field f;
    f.kind_ = Kind::Prime;
    f.p_ = p;
    return f;
}

Field Field::parse(const std::string& text)
{
    if (text == "q" || text == "Q")
        return rationals();
    if (text.rfind("fp:", 0) == 0) {
        mpz_class p;
        if (!parse_integer(text.substr(3), p) || p <= 0 || !p.fits_ulong_p())
            throw FieldError("bad prime in field spec '" + text + "'");
        return prime(p.get_ui());
    }
    throw FieldError("field spec must be 'q' or 'fp:<p>', got '" + text + "'");
}

std::string Field::to_string() const
{
    return is_rationals() ? "q" : "fp:" + std::to_string(p_);
}

Scalar::Scalar(const Field& field, long value) : field_(field)
{
    if (field.is_rationals())
        value_ = mpq_class(value);
    else
        value_ = reduce(mpz_class(value), field.characteristic());
}

Scalar::Scalar(const Field& field, const mpq_class& value) : field_(field)
{
    if (field.is_rationals()) {
        mpq_class v = value;
        v.canonicalize();
        value_ = v;
        return;
    }
    std::uint64_t p = field.characteristic();
    std::uint64_t den = reduce(value.get_den(), p);
    if (den == 0)
        throw FieldError("denominator vanishes in " + field.to_string());
    value_ = reduce(value.get_num(), p) * pow_mod(den, p - 2, p) % p;
}

Scalar Scalar::parse(const Field& field, const std::string& text)
{
    auto slash = text.find('/');
    mpz_class num, den = 1;
    bool ok = slash == std::string::npos
                  ? parse_integer(text, num)
                  : parse_integer(text.substr(0, slash), num) && parse_integer(text.substr(slash + 1), den);
    if (!ok || den == 0)
        throw FieldError("malformed scalar '" + text + "'");
    if (!field.is_rationals() && slash != std::string::npos)
        throw FieldError("prime-field scalars are plain residues, got '" + text + "'");
    return Scalar(field, mpq_class(num, den));
}

bool Scalar::is_zero() const
{
    if (field_.is_rationals())
        return sgn(rational()) == 0;
    return residue() == 0;
}

bool Scalar::is_one() const
{
    if (field_.is_rationals())
        return rational() == 1;
    return residue() == 1;
}

std::string Scalar::to_string() const
{
    if (field_.is_rationals())
        return rational().get_num().get_str() + "/" + rational().get_den().get_str();
    return std::to_string(residue());
}

void Scalar::check_same_field(const Scalar& other) const
{
    if (!(field_ == other.field_))
        throw FieldError("mixing scalars from " + field_.to_string() + " and " + other.field_.to_string());
}

Scalar Scalar::inverse() const
{
    if (is_zero())
        throw std::domain_error("inverse of zero");
    Scalar r = *this;
    if (field_.is_rationals()) {
        mpq_class inv = 1 / rational();
        r.value_ = inv;
    } else {
        std::uint64_t p = field_.characteristic();
        r.value_ = pow_mod(residue(), p - 2, p);
    }
    return r;
}

std::optional<Scalar> Scalar::sqrt() const
{
    if (field_.is_rationals()) {
        const mpq_class& q = rational();
        if (sgn(q) < 0)
            return std::nullopt;
        if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
            return std::nullopt;
        mpz_class n, d;
        mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
        mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
        return Scalar(field_, mpq_class(n, d));
    }
    std::uint64_t p = field_.characteristic();
    // Primes here are small enough that a linear scan is cheap.
    for (std::uint64_t r = 0; r < p; ++r)
        if (r * r % p == residue())
            return Scalar(field_, static_cast<long>(r));
    return std::nullopt;
}

Scalar Scalar::operator-() const
{
    Scalar r = *this;
    if (field_.is_rationals())
        r.value_ = mpq_class(-rational());
    else
        r.value_ = residue() == 0 ? 0 : field_.characteristic() - residue();
    return r;
}

Scalar& Scalar::operator+=(const Scalar& rhs)
{
    check_same_field(rhs);
    if (field_.is_rationals())
        std::get<mpq_class>(value_) += rhs.rational();
    else
        value_ = (residue() + rhs.residue()) % field_.characteristic();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs)
{
    check_same_field(rhs);
    if (field_.is_rationals())
        std::get<mpq_class>(value_) -= rhs.rational();
    else
        value_ = (residue() + field_.characteristic() - rhs.residue()) % field_.characteristic();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs)
{
    check_same_field(rhs);
    if (field_.is_rationals())
        std::get<mpq_class>(value_) *= rhs.rational();
    else
        value_ = residue() * rhs.residue() % field_.characteristic();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs)
{
    check_same_field(rhs);
    return *this *= rhs.inverse();
}

bool operator==(const Scalar& a, const Scalar& b)
{
    a.check_same_field(b);
    if (a.field_.is_rationals())
        return a.rational() == b.rational();
    return a.residue() == b.residue();
}

Scalar int_image(long n, const Field& field)
{
    return Scalar(field, n);
}

Scalar int_image(const mpz_class& n, const Field& field)
{
    return Scalar(field, mpq_class(n));
}

bool is_integer_in_field(const Scalar& x)
{
    if (!x.field().is_rationals())
        return true;
    return x.rational().get_den() == 1;
}

} // namespace superbracket
