#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "incalg/error.hpp"

namespace incalg {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

bool is_prime(std::uint64_t n);

/// The coefficient field: F_p for an odd prime p, or the rationals.
class Field {
public:
    enum class Kind { prime, rationals };

    static constexpr std::uint32_t default_max_modulus = 997;

    /// Throws Errc::invalid_field unless p is an odd prime not above max_modulus.
    static Field prime(std::uint32_t p, std::uint32_t max_modulus = default_max_modulus);
    static Field rationals() { return Field(Kind::rationals, 0); }

    /// "Q" (or "q") selects the rationals; anything else must be an odd prime.
    static Field parse(std::string_view text, std::uint32_t max_modulus = default_max_modulus);

    Kind kind() const noexcept { return kind_; }
    bool is_prime_field() const noexcept { return kind_ == Kind::prime; }
    /// 0 for the rationals.
    std::uint32_t modulus() const noexcept { return modulus_; }

    std::string name() const;

    bool operator==(const Field&) const = default;

private:
    Field(Kind kind, std::uint32_t modulus) : kind_(kind), modulus_(modulus) {}

    Kind kind_;
    std::uint32_t modulus_;
};

/// An exact field element in canonical form. Residues live in [0, p-1];
/// rationals are reduced with a positive denominator.
class Scalar {
public:
    Scalar(Field field, std::int64_t value);
    /// For a prime field the fraction is reduced modulo p (its denominator must be a unit).
    Scalar(Field field, const Rational& value);

    static Scalar zero(Field field) { return Scalar(field, std::int64_t{0}); }
    static Scalar one(Field field) { return Scalar(field, std::int64_t{1}); }

    /// Accepts "n" or "n/d" with optional sign.
    static Scalar parse(Field field, std::string_view text);

    const Field& field() const noexcept { return field_; }
    bool is_zero() const;
    bool is_one() const;

    /// Prime fields only.
    std::uint32_t residue() const;
    /// Rationals only.
    const Rational& rational() const;

    Scalar operator-() const;
    Scalar inverse() const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);

    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

    friend bool operator==(const Scalar& a, const Scalar& b);

    std::string to_string() const;

private:
    Field field_;
    std::uint32_t residue_ = 0;
    Rational rational_;
};

enum class ArithOp { add, sub, mul, div };

/// Errc::field_mismatch on mixed fields, Errc::division_by_zero on b == 0 for div.
Scalar arith(const Scalar& a, const Scalar& b, ArithOp op);

/// True iff a is a nonzero square. Errc::zero_input for a == 0.
bool is_square(const Scalar& a);

/// K*/(K*)^2.
struct SquareClassGroup {
    Field field;
    /// Absent for the rationals (infinitely many classes).
    std::optional<std::uint64_t> class_count;
    /// One representative per class; empty when the group is infinite.
    std::vector<Scalar> representatives;
};

SquareClassGroup square_classes(Field field);

/// 2 for odd prime fields, absent (infinite) for the rationals.
std::optional<std::uint64_t> square_class_count(Field field);

} // namespace incalg
