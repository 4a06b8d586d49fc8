#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace stacktrick::exact {

// All scalar arithmetic runs on 128-bit signed integers. Operations that
// would leave that range throw std::overflow_error; nothing ever wraps.
using Int = __int128;

std::string to_string(Int value);

Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);

// ceil(a/d) for d >= 1: the unique q with q-1 < a/d <= q.
// Negative numerators are allowed; d <= 0 throws std::invalid_argument.
Int ceil_div(Int a, Int d);

// floor(a/d) for d >= 1. Satisfies floor_div(a, d) == ceil_div(a - d + 1, d).
Int floor_div(Int a, Int d);

// Greatest common divisor of non-negative a, b with gcd(a, 0) == a.
// Both zero is rejected.
Int gcd(Int a, Int b);

// Least common multiple of a, b >= 1. a*b == gcd(a,b)*lcm(a,b).
Int lcm(Int a, Int b);

// All divisors n of c with 1 < n <= c, ascending. Empty for c == 1.
std::vector<Int> divisors_gt1(Int c);

// Exact base^exponent for base >= 1, exponent >= 0. Throws
// std::overflow_error naming base and exponent when the result does not
// fit in 128 bits.
Int checked_pow(Int base, Int exponent);

// Exact fraction, eagerly reduced: den > 0 and gcd(|num|, den) == 1, so
// equality is structural.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(Int numerator, Int denominator);
    static Rational from_integer(Int value) { return Rational(value, 1); }

    Int num() const { return num_; }
    Int den() const { return den_; }
    bool is_integer() const { return den_ == 1; }

    Int floor() const;
    Int ceil() const;

    // "num/den", e.g. "7/2", "-1/3", "5/1".
    std::string str() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    Int num_;
    Int den_;
};

struct RationalParts {
    Int floor;
    Rational frac;  // in [0, 1), lowest terms
};

// Splits r into floor + frac with 0 <= frac < 1.
RationalParts rational_parts(const Rational& r);

}  // namespace stacktrick::exact
