#include "stacktrick/exact.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace stacktrick::exact {

std::string to_string(Int value) {
    if (value == 0) return "0";
    const bool negative = value < 0;
    // Two's complement: |INT128_MIN| does not fit in Int, so accumulate in
    // the unsigned counterpart.
    unsigned __int128 magnitude =
        negative ? -static_cast<unsigned __int128>(value)
                 : static_cast<unsigned __int128>(value);
    std::string digits;
    while (magnitude != 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(magnitude % 10)));
        magnitude /= 10;
    }
    if (negative) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

Int checked_add(Int a, Int b) {
    Int result;
    if (__builtin_add_overflow(a, b, &result))
        throw std::overflow_error("integer addition overflows 128 bits");
    return result;
}

Int checked_sub(Int a, Int b) {
    Int result;
    if (__builtin_sub_overflow(a, b, &result))
        throw std::overflow_error("integer subtraction overflows 128 bits");
    return result;
}

Int checked_mul(Int a, Int b) {
    Int result;
    if (__builtin_mul_overflow(a, b, &result))
        throw std::overflow_error("integer multiplication overflows 128 bits");
    return result;
}

Int ceil_div(Int a, Int d) {
    if (d < 1) throw std::invalid_argument("ceil_div: divisor must be positive");
    const Int q = a / d;
    const Int r = a % d;  // same sign as a since d > 0
    return r > 0 ? q + 1 : q;
}

Int floor_div(Int a, Int d) {
    if (d < 1) throw std::invalid_argument("floor_div: divisor must be positive");
    const Int q = a / d;
    const Int r = a % d;
    return r < 0 ? q - 1 : q;
}

Int gcd(Int a, Int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("gcd: arguments must be non-negative");
    if (a == 0 && b == 0) throw std::invalid_argument("gcd: both arguments are zero");
    while (b != 0) {
        const Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Int lcm(Int a, Int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("lcm: arguments must be positive");
    return checked_mul(a / gcd(a, b), b);
}

std::vector<Int> divisors_gt1(Int c) {
    if (c < 1) throw std::invalid_argument("divisors_gt1: argument must be positive");
    std::vector<Int> small;
    std::vector<Int> large;
    for (Int i = 1; i <= c / i; ++i) {
        if (c % i != 0) continue;
        if (i > 1) small.push_back(i);
        const Int partner = c / i;
        if (partner != i && partner > 1) large.push_back(partner);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

Int checked_pow(Int base, Int exponent) {
    if (base < 1) throw std::invalid_argument("checked_pow: base must be positive");
    if (exponent < 0) throw std::invalid_argument("checked_pow: exponent must be non-negative");
    Int result = 1;
    for (Int i = 0; i < exponent; ++i) {
        if (__builtin_mul_overflow(result, base, &result))
            throw std::overflow_error("checked_pow: " + to_string(base) + "^" +
                                      to_string(exponent) + " overflows 128 bits");
    }
    return result;
}

Rational::Rational(Int numerator, Int denominator) {
    if (denominator == 0) throw std::invalid_argument("Rational: zero denominator");
    if (denominator < 0) {
        numerator = checked_sub(0, numerator);
        denominator = checked_sub(0, denominator);
    }
    const Int g = gcd(numerator < 0 ? -numerator : numerator, denominator);
    num_ = numerator / g;
    den_ = denominator / g;
}

Int Rational::floor() const { return floor_div(num_, den_); }

Int Rational::ceil() const { return ceil_div(num_, den_); }

std::string Rational::str() const {
    return to_string(num_) + "/" + to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(checked_add(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
                    checked_mul(a.den_, b.den_));
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational(checked_sub(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
                    checked_mul(a.den_, b.den_));
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(checked_mul(a.num_, b.num_), checked_mul(a.den_, b.den_));
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::invalid_argument("Rational: division by zero");
    return Rational(checked_mul(a.num_, b.den_), checked_mul(a.den_, b.num_));
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = checked_sub(0, num_);
    r.den_ = den_;
    return r;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const Int lhs = checked_mul(a.num_, b.den_);
    const Int rhs = checked_mul(b.num_, a.den_);
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

RationalParts rational_parts(const Rational& r) {
    const Int whole = r.floor();
    return RationalParts{whole, r - Rational(whole, 1)};
}

}  // namespace stacktrick::exact
