#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace segre {

// Invalid argument (precondition violated).
class domain_error : public std::invalid_argument {
public:
    explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

// Argument outside the supported input window (see limits below).
class guard_error : public domain_error {
public:
    explicit guard_error(const std::string& what) : domain_error(what) {}
};

// 64-bit exact arithmetic overflowed.
class overflow_error : public std::overflow_error {
public:
    explicit overflow_error(const std::string& what) : std::overflow_error(what) {}
};

// Supported input window. Everything inside computes exactly in 64 bits
// with headroom; inputs outside are rejected with guard_error.
inline constexpr std::int64_t kMaxRank = 64;
inline constexpr std::int64_t kMaxGenus = 1'000'000;
inline constexpr std::int64_t kMaxDegreeAbs = 1'000'000'000;

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw overflow_error("integer overflow in addition");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw overflow_error("integer overflow in subtraction");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("integer overflow in multiplication");
    return r;
}

inline std::int64_t checked_neg(std::int64_t a) { return checked_sub(0, a); }

// Floor division / residue for arbitrary-sign numerator, positive modulus.
inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    if (b <= 0) throw domain_error("floor_div requires positive divisor");
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
    return checked_sub(a, checked_mul(floor_div(a, m), m));
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    if (b <= 0) throw domain_error("ceil_div requires positive divisor");
    return checked_neg(floor_div(checked_neg(a), b));
}

// Exact rational, always in lowest terms with positive denominator.
class Rat {
public:
    Rat() = default;
    Rat(std::int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit from integer wanted
    Rat(std::int64_t n, std::int64_t d) {
        if (d == 0) throw domain_error("rational with zero denominator");
        if (d < 0) {
            n = checked_neg(n);
            d = checked_neg(d);
        }
        const std::int64_t g = std::gcd(n, d);
        num_ = (g == 0) ? 0 : n / g;
        den_ = (g == 0) ? 1 : d / g;
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }

    // Smallest integer >= this value.
    std::int64_t ceil() const { return ceil_div(num_, den_); }
    std::int64_t floor() const { return floor_div(num_, den_); }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return Rat(checked_add(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
                   checked_mul(a.den_, b.den_));
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return Rat(checked_sub(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
                   checked_mul(a.den_, b.den_));
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return Rat(checked_mul(a.num_, b.num_), checked_mul(a.den_, b.den_));
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw domain_error("rational division by zero");
        return Rat(checked_mul(a.num_, b.den_), checked_mul(a.den_, b.num_));
    }
    Rat operator-() const { return Rat(checked_neg(num_), den_); }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return checked_mul(a.num_, b.den_) < checked_mul(b.num_, a.den_);
    }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    // "n" when integral, "n/d" otherwise.
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    std::int64_t num_{0};
    std::int64_t den_{1};
};

}  // namespace segre
