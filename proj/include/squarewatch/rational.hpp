#ifndef SQUAREWATCH_RATIONAL_HPP
#define SQUAREWATCH_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace squarewatch {

/// Exact rational on int64, normalized (den > 0, gcd = 1). The quantities here
/// stay tiny (numerators ~ n*d^2) so no overflow guard beyond 64 bits is needed.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value) : num_(value), den_(1) {}
    Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
        if (den_ == 0) throw std::invalid_argument("rational with zero denominator");
        normalize();
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    Rational operator+(const Rational& o) const {
        return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    Rational operator*(const Rational& o) const {
        return Rational(num_ * o.num_, den_ * o.den_);
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw std::invalid_argument("rational division by zero");
        return Rational(num_ * o.den_, den_ * o.num_);
    }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return num_ * o.den_ < o.num_ * den_; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator<=(const Rational& o) const { return !(o < *this); }
    bool operator>=(const Rational& o) const { return !(*this < o); }

    /// Deterministic fixed-point rendering with `digits` decimals, truncated toward zero.
    std::string decimal(int digits = 6) const {
        std::int64_t scale = 1;
        for (int i = 0; i < digits; ++i) scale *= 10;
        std::int64_t whole = num_ / den_;
        std::int64_t rem = num_ % den_;
        if (rem < 0) rem = -rem;
        std::int64_t frac = rem * scale / den_;
        std::string fs = std::to_string(frac);
        fs.insert(fs.begin(), digits - static_cast<int>(fs.size()), '0');
        std::string sign = (num_ < 0 && (whole == 0)) ? "-" : "";
        return sign + std::to_string(whole) + "." + fs;
    }

private:
    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// RHS of the main bound: 2n(1 - 2/(d+1) - 3/(d-3)) = 2nd(d-7) / ((d+1)(d-3)).
inline Rational theoremRhs(int n, int d) {
    if (d <= 3) throw std::invalid_argument("theorem RHS undefined for d <= 3");
    return Rational(2LL * n) *
           (Rational(1) - Rational(2, d + 1) - Rational(3, d - 3));
}

}  // namespace squarewatch

#endif
