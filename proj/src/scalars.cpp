#include "incalg/scalars.hpp"

#include <charconv>

namespace incalg {

namespace {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod)
{
    std::uint64_t result = 1 % mod;
    base %= mod;
    while (exp > 0) {
        if (exp & 1)
            result = result * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return result;
}

std::uint32_t reduce(std::int64_t value, std::uint32_t p)
{
    auto r = value % static_cast<std::int64_t>(p);
    if (r < 0)
        r += p;
    return static_cast<std::uint32_t>(r);
}

std::uint32_t reduce(const BigInt& value, std::uint32_t p)
{
    BigInt r = value % p;
    if (r < 0)
        r += p;
    return r.convert_to<std::uint32_t>();
}

void require_same_field(const Scalar& a, const Scalar& b)
{
    if (!(a.field() == b.field()))
        throw Error(Errc::field_mismatch,
                    "scalar field mismatch: " + a.field().name() + " vs " + b.field().name());
}

bool is_perfect_square(const BigInt& n)
{
    if (n < 0)
        return false;
    BigInt root = boost::multiprecision::sqrt(n);
    return root * root == n;
}

} // namespace

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

Field Field::prime(std::uint32_t p, std::uint32_t max_modulus)
{
    if (p == 2)
        throw Error(Errc::invalid_field, "characteristic 2 is not supported");
    if (!is_prime(p))
        throw Error(Errc::invalid_field, "modulus " + std::to_string(p) + " is not prime");
    if (p > max_modulus)
        throw Error(Errc::invalid_field, "modulus " + std::to_string(p) + " exceeds the bound " +
                                             std::to_string(max_modulus));
    return Field(Kind::prime, p);
}

Field Field::parse(std::string_view text, std::uint32_t max_modulus)
{
    if (text == "Q" || text == "q")
        return rationals();
    std::uint32_t p = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), p);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw Error(Errc::invalid_field, "cannot parse field '" + std::string(text) + "'");
    return prime(p, max_modulus);
}

std::string Field::name() const
{
    return is_prime_field() ? "F" + std::to_string(modulus_) : "Q";
}

Scalar::Scalar(Field field, std::int64_t value) : field_(field)
{
    if (field_.is_prime_field())
        residue_ = reduce(value, field_.modulus());
    else
        rational_ = value;
}

Scalar::Scalar(Field field, const Rational& value) : field_(field)
{
    if (!field_.is_prime_field()) {
        rational_ = value;
        return;
    }
    auto p = field_.modulus();
    auto den = reduce(BigInt(denominator(value)), p);
    if (den == 0)
        throw Error(Errc::division_by_zero,
                    "denominator vanishes in " + field_.name());
    auto num = reduce(BigInt(numerator(value)), p);
    residue_ = static_cast<std::uint32_t>(num * pow_mod(den, p - 2, p) % p);
}

Scalar Scalar::parse(Field field, std::string_view text)
{
    auto bad = [&] {
        return Error(Errc::syntax_error, "malformed scalar '" + std::string(text) + "'");
    };
    if (text.empty())
        throw bad();
    auto slash = text.find('/');
    auto parse_int = [&](std::string_view part) {
        if (part.empty())
            throw bad();
        std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (start == part.size())
            throw bad();
        for (std::size_t i = start; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9')
                throw bad();
        return BigInt(std::string(part[0] == '+' ? part.substr(1) : part));
    };
    BigInt num = parse_int(text.substr(0, slash));
    BigInt den = 1;
    if (slash != std::string_view::npos)
        den = parse_int(text.substr(slash + 1));
    if (den == 0)
        throw Error(Errc::division_by_zero, "zero denominator in '" + std::string(text) + "'");
    return Scalar(field, Rational(num, den));
}

bool Scalar::is_zero() const
{
    return field_.is_prime_field() ? residue_ == 0 : rational_ == 0;
}

bool Scalar::is_one() const
{
    return field_.is_prime_field() ? residue_ == 1 : rational_ == 1;
}

std::uint32_t Scalar::residue() const
{
    if (!field_.is_prime_field())
        throw Error(Errc::field_mismatch, "residue() on a rational scalar");
    return residue_;
}

const Rational& Scalar::rational() const
{
    if (field_.is_prime_field())
        throw Error(Errc::field_mismatch, "rational() on a prime-field scalar");
    return rational_;
}

Scalar Scalar::operator-() const
{
    Scalar r = *this;
    if (field_.is_prime_field())
        r.residue_ = residue_ == 0 ? 0 : field_.modulus() - residue_;
    else
        r.rational_ = -rational_;
    return r;
}

Scalar Scalar::inverse() const
{
    if (is_zero())
        throw Error(Errc::division_by_zero, "inverse of zero");
    Scalar r = *this;
    if (field_.is_prime_field())
        r.residue_ = static_cast<std::uint32_t>(pow_mod(residue_, field_.modulus() - 2, field_.modulus()));
    else
        r.rational_ = 1 / rational_;
    return r;
}

Scalar operator+(const Scalar& a, const Scalar& b)
{
    require_same_field(a, b);
    Scalar r = a;
    if (a.field_.is_prime_field())
        r.residue_ = (a.residue_ + b.residue_) % a.field_.modulus();
    else
        r.rational_ = a.rational_ + b.rational_;
    return r;
}

Scalar operator-(const Scalar& a, const Scalar& b)
{
    return a + (-b);
}

Scalar operator*(const Scalar& a, const Scalar& b)
{
    require_same_field(a, b);
    Scalar r = a;
    if (a.field_.is_prime_field())
        r.residue_ = static_cast<std::uint32_t>(std::uint64_t{a.residue_} * b.residue_ % a.field_.modulus());
    else
        r.rational_ = a.rational_ * b.rational_;
    return r;
}

Scalar operator/(const Scalar& a, const Scalar& b)
{
    require_same_field(a, b);
    return a * b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b)
{
    if (!(a.field_ == b.field_))
        return false;
    return a.field_.is_prime_field() ? a.residue_ == b.residue_ : a.rational_ == b.rational_;
}

std::string Scalar::to_string() const
{
    if (field_.is_prime_field())
        return std::to_string(residue_);
    return rational_.str();
}

Scalar arith(const Scalar& a, const Scalar& b, ArithOp op)
{
    switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
    }
    throw Error(Errc::precondition_violated, "unknown arithmetic operation");
}

bool is_square(const Scalar& a)
{
    if (a.is_zero())
        throw Error(Errc::zero_input, "is_square of zero");
    if (a.field().is_prime_field()) {
        auto p = a.field().modulus();
        return pow_mod(a.residue(), (p - 1) / 2, p) == 1;
    }
    const auto& q = a.rational();
    return q > 0 && is_perfect_square(BigInt(numerator(q))) && is_perfect_square(BigInt(denominator(q)));
}

SquareClassGroup square_classes(Field field)
{
    SquareClassGroup group{field, std::nullopt, {}};
    if (!field.is_prime_field())
        return group;
    group.class_count = 2;
    group.representatives.push_back(Scalar::one(field));
    for (std::uint32_t x = 2; x < field.modulus(); ++x) {
        Scalar s(field, std::int64_t{x});
        if (!is_square(s)) {
            group.representatives.push_back(s);
            break;
        }
    }
    return group;
}

std::optional<std::uint64_t> square_class_count(Field field)
{
    return square_classes(field).class_count;
}

} // namespace incalg
