#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "mfq/errors.hpp"

namespace mfq {

enum class ModKind : uint8_t { Prime, PrimePower, Composite, Quadratic };

inline bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; uint64_t(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Z/m for m >= 2 (prime, prime power, or composite), plus the quadratic
// extension GF(p^2) = F_p[t] / (t^2 + b t + c).
class Modulus {
public:
    static Modulus zmod(uint32_t m) {
        if (m < 2) throw input_error("Modulus: need m >= 2");
        Modulus md;
        md.m_ = m;
        uint32_t p = smallest_prime_factor(m);
        uint32_t r = 0, n = m;
        while (n % p == 0) { n /= p; ++r; }
        if (n == 1) {
            md.kind_ = (r == 1) ? ModKind::Prime : ModKind::PrimePower;
            md.p_ = p;
            md.r_ = r;
        } else {
            md.kind_ = ModKind::Composite;
            md.p_ = 0;
            md.r_ = 0;
        }
        return md;
    }

    // GF(p^2) with the canonical polynomial: smallest (b, c) in lexicographic
    // order with t^2 + b t + c irreducible over F_p.
    static Modulus gfp2(uint32_t p) {
        if (!is_prime_u32(p)) throw input_error("Modulus::gfp2: p must be prime");
        for (uint32_t b = 0; b < p; ++b)
            for (uint32_t c = 0; c < p; ++c)
                if (irreducible(p, b, c)) return gfp2(p, b, c);
        throw internal_inconsistency("gfp2: no irreducible found");
    }

    static Modulus gfp2(uint32_t p, uint32_t b, uint32_t c) {
        if (!is_prime_u32(p)) throw input_error("Modulus::gfp2: p must be prime");
        if (!irreducible(p, b, c))
            throw input_error("Modulus::gfp2: t^2+" + std::to_string(b) + "t+" +
                              std::to_string(c) + " is reducible mod " + std::to_string(p));
        Modulus md;
        md.kind_ = ModKind::Quadratic;
        md.m_ = p;
        md.p_ = p;
        md.r_ = 2;
        md.poly_b_ = b;
        md.poly_c_ = c;
        return md;
    }

    // Prime field or Z_m modulus for a general residue ring; for GF(p^2) this
    // is p (entries are coefficient pairs).
    uint32_t m() const { return m_; }
    ModKind kind() const { return kind_; }
    uint32_t p() const { return p_; }
    uint32_t r() const { return r_; }
    uint32_t poly_b() const { return poly_b_; }
    uint32_t poly_c() const { return poly_c_; }
    bool quadratic() const { return kind_ == ModKind::Quadratic; }
    bool field() const { return kind_ == ModKind::Prime || kind_ == ModKind::Quadratic; }

    // Number of ring elements.
    uint64_t cardinality() const { return quadratic() ? uint64_t(m_) * m_ : m_; }

    bool operator==(const Modulus& o) const {
        return kind_ == o.kind_ && m_ == o.m_ && poly_b_ == o.poly_b_ && poly_c_ == o.poly_c_;
    }

    std::string to_string() const {
        if (quadratic())
            return "GF(" + std::to_string(m_) + "^2;t^2+" + std::to_string(poly_b_) + "t+" +
                   std::to_string(poly_c_) + ")";
        return "Z" + std::to_string(m_);
    }

private:
    uint32_t m_ = 2;
    ModKind kind_ = ModKind::Prime;
    uint32_t p_ = 2, r_ = 1;
    uint32_t poly_b_ = 0, poly_c_ = 0;

    static uint32_t smallest_prime_factor(uint32_t n) {
        for (uint32_t d = 2; uint64_t(d) * d <= n; ++d)
            if (n % d == 0) return d;
        return n;
    }
    static bool irreducible(uint32_t p, uint32_t b, uint32_t c) {
        // degree 2: irreducible iff no root in F_p
        for (uint64_t x = 0; x < p; ++x)
            if ((x * x + b * x + c) % p == 0) return false;
        return true;
    }
};

// Canonical residue: a single value in 0..m-1, or a coefficient pair
// a + b t over GF(p^2). Carries its modulus; mixed-modulus arithmetic is
// an input error.
class Residue {
public:
    Residue(uint64_t a, const Modulus& mod) : a_(uint32_t(a % mod.m())), b_(0), mod_(mod) {}
    Residue(uint64_t a, uint64_t b, const Modulus& mod)
        : a_(uint32_t(a % mod.m())), b_(uint32_t(b % mod.m())), mod_(mod) {
        if (b_ != 0 && !mod.quadratic())
            throw input_error("Residue: pair value over non-extension ring");
    }

    static Residue zero(const Modulus& mod) { return Residue(0, mod); }
    static Residue one(const Modulus& mod) { return Residue(1, mod); }
    // The generator t of GF(p^2) over F_p.
    static Residue gen(const Modulus& mod) {
        if (!mod.quadratic()) throw input_error("Residue::gen: not a quadratic extension");
        return Residue(0, 1, mod);
    }

    uint32_t a() const { return a_; }
    uint32_t b() const { return b_; }
    const Modulus& modulus() const { return mod_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_one() const { return a_ == 1 && b_ == 0; }

    // Packed canonical value, unique per element: a + b*p.
    uint32_t packed() const { return a_ + b_ * mod_.m(); }
    static Residue from_packed(uint32_t v, const Modulus& mod) {
        return mod.quadratic() ? Residue(v % mod.m(), v / mod.m(), mod) : Residue(v, mod);
    }

    Residue operator+(const Residue& o) const {
        check(o);
        return Residue((uint64_t(a_) + o.a_) % mod_.m(), (uint64_t(b_) + o.b_) % mod_.m(), mod_);
    }
    Residue operator-(const Residue& o) const {
        check(o);
        uint32_t m = mod_.m();
        return Residue((uint64_t(a_) + m - o.a_) % m, (uint64_t(b_) + m - o.b_) % m, mod_);
    }
    Residue operator-() const {
        uint32_t m = mod_.m();
        return Residue((m - a_) % m, (m - b_) % m, mod_);
    }
    Residue operator*(const Residue& o) const {
        check(o);
        uint64_t m = mod_.m();
        if (!mod_.quadratic()) return Residue((uint64_t(a_) * o.a_) % m, mod_);
        // (a1 + b1 t)(a2 + b2 t) with t^2 = -B t - C
        uint64_t B = mod_.poly_b(), C = mod_.poly_c();
        uint64_t t2 = (uint64_t(b_) * o.b_) % m; // coefficient of t^2
        uint64_t a = (uint64_t(a_) * o.a_ + t2 * (m - C % m)) % m;
        uint64_t b = (uint64_t(a_) * o.b_ + uint64_t(b_) * o.a_ + t2 * (m - B % m)) % m;
        return Residue(a, b, mod_);
    }

    bool is_unit() const {
        if (mod_.quadratic()) return !is_zero();
        return std::gcd(a_, mod_.m()) == 1;
    }

    Residue inverse() const {
        if (mod_.quadratic()) {
            if (is_zero()) throw singular_error("Residue: inverse of zero");
            // x^{-1} = conj(x) / N(x), with N(x) = x * conj(x) in F_p
            Residue conj = frobenius();
            Residue n = (*this) * conj;
            // n lies in the prime subfield
            uint64_t ninv = inv_mod(n.a_, mod_.m());
            return Residue((uint64_t(conj.a_) * ninv) % mod_.m(),
                           (uint64_t(conj.b_) * ninv) % mod_.m(), mod_);
        }
        if (!is_unit()) throw singular_error("Residue: not a unit mod " + std::to_string(mod_.m()));
        return Residue(inv_mod(a_, mod_.m()), mod_);
    }

    Residue pow(uint64_t e) const {
        Residue out = one(mod_), base = *this;
        while (e) {
            if (e & 1) out = out * base;
            base = base * base;
            e >>= 1;
        }
        return out;
    }

    // x -> x^p, the nontrivial field automorphism of GF(p^2).
    Residue frobenius() const {
        if (!mod_.quadratic()) return *this;
        return pow(mod_.p());
    }

    uint64_t multiplicative_order() const {
        if (!is_unit()) throw input_error("Residue: order of a non-unit");
        Residue x = *this;
        uint64_t k = 1;
        while (!x.is_one()) {
            x = x * (*this);
            ++k;
            if (k > mod_.cardinality()) throw internal_inconsistency("Residue: order overflow");
        }
        return k;
    }

    bool operator==(const Residue& o) const { return a_ == o.a_ && b_ == o.b_ && mod_ == o.mod_; }

    std::string to_string() const {
        if (!mod_.quadratic() || b_ == 0) return std::to_string(a_);
        return std::to_string(a_) + "+" + std::to_string(b_) + "t";
    }

private:
    uint32_t a_, b_;
    Modulus mod_;

    void check(const Residue& o) const {
        if (!(mod_ == o.mod_)) throw input_error("Residue: modulus mismatch");
    }
    static uint64_t inv_mod(uint32_t a, uint32_t m) {
        int64_t t = 0, newt = 1, r = m, newr = a % m;
        while (newr != 0) {
            int64_t q = r / newr;
            t = std::exchange(newt, t - q * newt);
            r = std::exchange(newr, r - q * newr);
        }
        if (r != 1) throw singular_error("Residue: not invertible");
        return uint64_t(t < 0 ? t + m : t);
    }
};

} // namespace mfq
