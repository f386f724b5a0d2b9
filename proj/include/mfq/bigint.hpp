#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "mfq/errors.hpp"

namespace mfq {

// Unsigned arbitrary-precision integer, base 1e9 limbs.
// Covers exact group orders for every CFSG family (E8(q) overflows even
// unsigned 128-bit, so a fixed-width type does not do).
class BigUint {
public:
    BigUint() = default;
    BigUint(uint64_t v) {
        while (v) { limbs_.push_back(static_cast<uint32_t>(v % kBase)); v /= kBase; }
    }

    static BigUint from_string(const std::string& s) {
        BigUint out;
        std::string digits;
        digits.reserve(s.size());
        for (char c : s) {
            if (c == ',' || c == '_' || c == '.' || c == ' ') continue; // grouping chars
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw input_error("BigUint::from_string: bad digit in '" + s + "'");
            digits.push_back(c);
        }
        if (digits.empty()) throw input_error("BigUint::from_string: empty");
        for (size_t i = digits.size(); i > 0;) {
            size_t lo = i >= 9 ? i - 9 : 0;
            out.limbs_.push_back(static_cast<uint32_t>(std::stoul(digits.substr(lo, i - lo))));
            i = lo;
        }
        out.trim();
        return out;
    }

    bool is_zero() const { return limbs_.empty(); }

    bool fits_u64() const {
        if (limbs_.size() > 3) return false;
        return to_u64_unchecked() >= 0;
    }
    uint64_t to_u64() const {
        if (limbs_.size() > 3) throw input_error("BigUint::to_u64: overflow");
        long double approx = 0;
        for (size_t i = limbs_.size(); i > 0; --i) approx = approx * kBase + limbs_[i - 1];
        if (approx > 1.8e19L) throw input_error("BigUint::to_u64: overflow");
        uint64_t v = 0;
        for (size_t i = limbs_.size(); i > 0; --i) v = v * kBase + limbs_[i - 1];
        return v;
    }

    BigUint& operator+=(const BigUint& o) {
        limbs_.resize(std::max(limbs_.size(), o.limbs_.size()), 0);
        uint32_t carry = 0;
        for (size_t i = 0; i < limbs_.size(); ++i) {
            uint64_t s = uint64_t(limbs_[i]) + (i < o.limbs_.size() ? o.limbs_[i] : 0) + carry;
            limbs_[i] = static_cast<uint32_t>(s % kBase);
            carry = static_cast<uint32_t>(s / kBase);
        }
        if (carry) limbs_.push_back(carry);
        return *this;
    }

    // Requires *this >= o.
    BigUint& operator-=(const BigUint& o) {
        if (*this < o) throw input_error("BigUint: negative subtraction");
        int64_t borrow = 0;
        for (size_t i = 0; i < limbs_.size(); ++i) {
            int64_t d = int64_t(limbs_[i]) - borrow - (i < o.limbs_.size() ? o.limbs_[i] : 0);
            if (d < 0) { d += kBase; borrow = 1; } else borrow = 0;
            limbs_[i] = static_cast<uint32_t>(d);
        }
        trim();
        return *this;
    }

    BigUint operator*(const BigUint& o) const {
        if (is_zero() || o.is_zero()) return BigUint();
        BigUint out;
        out.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
        for (size_t i = 0; i < limbs_.size(); ++i) {
            uint64_t carry = 0;
            for (size_t j = 0; j < o.limbs_.size() || carry; ++j) {
                uint64_t cur = out.limbs_[i + j] + carry;
                if (j < o.limbs_.size()) cur += uint64_t(limbs_[i]) * o.limbs_[j];
                out.limbs_[i + j] = static_cast<uint32_t>(cur % kBase);
                carry = cur / kBase;
            }
        }
        out.trim();
        return out;
    }

    // Exact division by a small divisor; throws if it does not divide.
    BigUint divided_by(uint32_t d) const {
        if (d == 0) throw input_error("BigUint: division by zero");
        BigUint out;
        out.limbs_.assign(limbs_.size(), 0);
        uint64_t rem = 0;
        for (size_t i = limbs_.size(); i > 0; --i) {
            uint64_t cur = rem * kBase + limbs_[i - 1];
            out.limbs_[i - 1] = static_cast<uint32_t>(cur / d);
            rem = cur % d;
        }
        if (rem != 0) throw input_error("BigUint: inexact division");
        out.trim();
        return out;
    }

    uint32_t mod_small(uint32_t d) const {
        uint64_t rem = 0;
        for (size_t i = limbs_.size(); i > 0; --i) rem = (rem * kBase + limbs_[i - 1]) % d;
        return static_cast<uint32_t>(rem);
    }
    bool divisible_by(uint32_t d) const { return mod_small(d) == 0; }

    BigUint operator+(const BigUint& o) const { BigUint t(*this); t += o; return t; }
    BigUint operator-(const BigUint& o) const { BigUint t(*this); t -= o; return t; }

    static BigUint pow(uint64_t base, uint32_t exp) {
        BigUint out(1), b(base);
        while (exp) {
            if (exp & 1) out = out * b;
            b = b * b;
            exp >>= 1;
        }
        return out;
    }

    std::strong_ordering operator<=>(const BigUint& o) const {
        if (limbs_.size() != o.limbs_.size())
            return limbs_.size() <=> o.limbs_.size();
        for (size_t i = limbs_.size(); i > 0; --i)
            if (limbs_[i - 1] != o.limbs_[i - 1]) return limbs_[i - 1] <=> o.limbs_[i - 1];
        return std::strong_ordering::equal;
    }
    bool operator==(const BigUint& o) const = default;

    std::string to_string() const {
        if (limbs_.empty()) return "0";
        std::string s = std::to_string(limbs_.back());
        for (size_t i = limbs_.size() - 1; i > 0; --i) {
            std::string part = std::to_string(limbs_[i - 1]);
            s += std::string(9 - part.size(), '0') + part;
        }
        return s;
    }

private:
    static constexpr uint32_t kBase = 1000000000u;
    std::vector<uint32_t> limbs_; // little-endian, no trailing zeros

    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    }
    int64_t to_u64_unchecked() const {
        long double v = 0;
        for (size_t i = limbs_.size(); i > 0; --i) v = v * kBase + limbs_[i - 1];
        return v <= 1.8e19L ? 1 : -1;
    }
};

} // namespace mfq
