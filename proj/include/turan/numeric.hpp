#ifndef TURAN_NUMERIC_HPP
#define TURAN_NUMERIC_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace turan {

// Copy/homomorphism counts. 128 bits: anything larger could not be
// enumerated at desk scale anyway, and n^h fits comfortably.
using Count = unsigned __int128;
using Int128 = __int128;

std::string to_decimal(Count v);
std::string to_decimal(Int128 v);

Count pow_count(Count base, int exp);

// n * (n-1) * ... * (n-k+1); zero when k > n, one when k == 0.
Count falling_factorial(int n, int k);

// Exact rational on 128-bit integers. Always normalized: gcd(|num|,den)=1,
// den > 0.
class Rational {
public:
    Rational() = default;
    Rational(Int128 value) : num_(value), den_(1) {}
    Rational(Int128 num, Int128 den);

    Int128 num() const { return num_; }
    Int128 den() const { return den_; }

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator-() const;

    bool operator==(const Rational& o) const = default;
    bool operator<(const Rational& o) const { return num_ * o.den_ < o.num_ * den_; }
    bool operator<=(const Rational& o) const { return num_ * o.den_ <= o.num_ * den_; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }

    // Rendered as "p/q", q always printed so persisted values stay exact.
    std::string str() const;

private:
    Int128 num_ = 0;
    Int128 den_ = 1;
};

}  // namespace turan

#endif  // TURAN_NUMERIC_HPP
