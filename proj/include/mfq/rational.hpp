#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "mfq/errors.hpp"

namespace mfq {

// Exact rational on int64. Orbifold measures stay tiny (denominators are lcms
// of period lists), so 64 bits with overflow checks is plenty.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int64_t n) : num_(n), den_(1) {}
    Rational(int64_t n, int64_t d) : num_(n), den_(d) { normalize(); }

    int64_t num() const { return num_; }
    int64_t den() const { return den_; }

    Rational operator+(const Rational& o) const {
        return Rational(checked_add(checked_mul(num_, o.den_), checked_mul(o.num_, den_)),
                        checked_mul(den_, o.den_));
    }
    Rational operator-(const Rational& o) const {
        return Rational(checked_add(checked_mul(num_, o.den_), -checked_mul(o.num_, den_)),
                        checked_mul(den_, o.den_));
    }
    Rational operator*(const Rational& o) const {
        return Rational(checked_mul(num_, o.num_), checked_mul(den_, o.den_));
    }
    Rational operator*(int64_t k) const { return Rational(checked_mul(num_, k), den_); }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator<(const Rational& o) const {
        return checked_mul(num_, o.den_) < checked_mul(o.num_, den_);
    }

    bool is_integer() const { return den_ == 1; }
    bool positive() const { return num_ > 0; }
    bool negative() const { return num_ < 0; }
    bool zero() const { return num_ == 0; }

    std::string to_string() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    int64_t num_, den_;

    void normalize() {
        if (den_ == 0) throw input_error("Rational: zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }
    static int64_t checked_mul(int64_t a, int64_t b) {
        int64_t r;
        if (__builtin_mul_overflow(a, b, &r)) throw internal_inconsistency("Rational overflow");
        return r;
    }
    static int64_t checked_add(int64_t a, int64_t b) {
        int64_t r;
        if (__builtin_add_overflow(a, b, &r)) throw internal_inconsistency("Rational overflow");
        return r;
    }
};

} // namespace mfq
