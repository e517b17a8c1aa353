#include "turan/numeric.hpp"

namespace turan {

namespace {

Int128 gcd128(Int128 a, Int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

std::string to_decimal(Count v) {
    if (v == 0) return "0";
    std::string out;
    while (v > 0) {
        out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    return std::string(out.rbegin(), out.rend());
}

std::string to_decimal(Int128 v) {
    if (v < 0) return "-" + to_decimal(static_cast<Count>(-v));
    return to_decimal(static_cast<Count>(v));
}

Count pow_count(Count base, int exp) {
    Count r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

Count falling_factorial(int n, int k) {
    if (k < 0) throw std::invalid_argument("falling_factorial: negative k");
    if (k > n) return 0;
    Count r = 1;
    for (int i = 0; i < k; ++i) r *= static_cast<Count>(n - i);
    return r;
}

Rational::Rational(Int128 num, Int128 den) : num_(num), den_(den) {
    if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    Int128 g = gcd128(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
    return Rational(num_ * o.num_, den_ * o.den_);
}

Rational Rational::operator-() const { return Rational(-num_, den_); }

std::string Rational::str() const {
    return to_decimal(num_) + "/" + to_decimal(den_);
}

}  // namespace turan
