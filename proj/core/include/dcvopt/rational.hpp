#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dcvopt {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// A caller violated an operation's precondition (eps outside K, ...).
class PreconditionViolation : public Error {
public:
    using Error::Error;
};

/// Strict membership was requested on a cone whose interior is empty.
class InteriorEmpty : public Error {
public:
    using Error::Error;
};

/// Parses an integer or "p/q" literal. Decimals, exponents and empty
/// denominators are rejected.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "n" for integers) rendering.
std::string to_string(const Rational& value);

/// Element of Q^n. Every operation is exact.
class RationalVector {
public:
    RationalVector() = default;
    explicit RationalVector(std::size_t dim) : coords_(dim) {}
    explicit RationalVector(std::vector<Rational> coords) : coords_(std::move(coords)) {}
    RationalVector(std::initializer_list<Rational> coords) : coords_(coords) {}

    /// Convenience constructor from small integers, e.g. {1, -1}.
    static RationalVector from_ints(std::initializer_list<long> values);
    static RationalVector zero(std::size_t dim) { return RationalVector(dim); }
    static RationalVector constant(std::size_t dim, const Rational& value);
    static RationalVector unit(std::size_t dim, std::size_t index);

    std::size_t dim() const noexcept { return coords_.size(); }
    bool empty() const noexcept { return coords_.empty(); }

    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    Rational& operator[](std::size_t i) { return coords_[i]; }

    std::span<const Rational> coords() const noexcept { return coords_; }
    auto begin() const noexcept { return coords_.begin(); }
    auto end() const noexcept { return coords_.end(); }

    bool is_zero() const;

    RationalVector& operator+=(const RationalVector& other);
    RationalVector& operator-=(const RationalVector& other);
    RationalVector& operator*=(const Rational& scale);

    friend RationalVector operator+(RationalVector lhs, const RationalVector& rhs) { return lhs += rhs; }
    friend RationalVector operator-(RationalVector lhs, const RationalVector& rhs) { return lhs -= rhs; }
    friend RationalVector operator*(const Rational& scale, RationalVector v) { return v *= scale; }
    friend RationalVector operator*(RationalVector v, const Rational& scale) { return v *= scale; }
    RationalVector operator-() const;

    friend bool operator==(const RationalVector& a, const RationalVector& b) { return a.coords_ == b.coords_; }

    /// Lexicographic order; vectors of different dimension order by dimension first.
    friend std::strong_ordering operator<=>(const RationalVector& a, const RationalVector& b);

    std::string str() const;

private:
    std::vector<Rational> coords_;
};

std::ostream& operator<<(std::ostream& os, const RationalVector& v);

void require_same_dim(const RationalVector& a, const RationalVector& b, std::string_view what);

Rational dot(const RationalVector& a, const RationalVector& b);

/// max_i |v_i|
Rational max_norm(const RationalVector& v);

/// Positive multiple of v with coprime integer coordinates. Zero stays zero.
RationalVector primitive_integer(const RationalVector& v);

/// Parses "a, b, c" (commas or whitespace) into a vector of rationals.
RationalVector parse_vector(std::string_view text);

} // namespace dcvopt
