#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "mfq/classical.hpp"

namespace mfq {

// Closed-form element-order spectra for the families the catalog leans on.
// Semisimple orders come from eigenvalue exponents in the maximal tori: an
// element with eigenvalue exponents e_i in Z_N has order N/gcd(N, e_i...) and
// its image modulo the scalars contained in the group has order
// N/gcd(N, e_i - e_j ...). Unipotent and mixed classes are added per family.
// Everything here is cross-validated against brute-force enumeration in the
// test suite before the catalog generator is allowed to use it.

namespace spectra {

inline uint64_t ord_in(uint64_t N, int64_t e) {
    uint64_t r = uint64_t(((e % int64_t(N)) + int64_t(N)) % int64_t(N));
    return N / std::gcd(N, r);
}

// order of the projective image: least k with all eigenvalue exponents equal mod N
inline uint64_t proj_ord(uint64_t N, const std::vector<int64_t>& eigs) {
    uint64_t g = N;
    for (size_t i = 0; i < eigs.size(); ++i)
        for (size_t j = i + 1; j < eigs.size(); ++j) {
            int64_t d = eigs[i] - eigs[j];
            uint64_t r = uint64_t(((d % int64_t(N)) + int64_t(N)) % int64_t(N));
            g = std::gcd(g, r);
        }
    return N / g;
}

inline void divisor_close(std::set<uint64_t>& s) {
    std::set<uint64_t> out;
    for (uint64_t n : s)
        for (uint64_t d = 1; d * d <= n; ++d)
            if (n % d == 0) { out.insert(d); out.insert(n / d); }
    s.swap(out);
}

inline std::vector<uint64_t> to_sorted(std::set<uint64_t>& s) {
    divisor_close(s);
    return std::vector<uint64_t>(s.begin(), s.end());
}

} // namespace spectra

// PSL(2,q): {1, p} + divisors of (q-1)/d and (q+1)/d.
inline std::vector<uint64_t> spectrum_psl2(uint64_t q) {
    PrimePower pp = factor_prime_power(q);
    uint64_t d = std::gcd(uint64_t(2), q - 1);
    std::set<uint64_t> s{1, pp.p, (q - 1) / d, (q + 1) / d};
    return spectra::to_sorted(s);
}

// PSL(3,q) (eps = +1) and PSU(3,q) (eps = -1), handled uniformly.
inline std::vector<uint64_t> spectrum_psl3_psu3(uint64_t q, int eps) {
    using namespace spectra;
    PrimePower pp = factor_prime_power(q);
    uint64_t p = pp.p;
    uint64_t e = eps > 0 ? q - 1 : q + 1; // order of the relevant one-dim torus
    std::set<uint64_t> s{1};

    // split-type torus: eigenvalue exponents (i, j, -i-j) in Z_e
    if (e > 1)
        for (uint64_t i = 0; i < e; ++i)
            for (uint64_t j = 0; j < e; ++j)
                s.insert(proj_ord(e, {int64_t(i), int64_t(j), -int64_t(i) - int64_t(j)}));

    // GL1(q^2)-type torus, cyclic of order q^2-1:
    //   eps=+1: eigenvalues (a, a^q, a^{-(q+1)}); eps=-1: (a, a^{-q}, a^{q-1})
    uint64_t N2 = q * q - 1;
    for (uint64_t m = 0; m < N2; ++m) {
        int64_t mm = int64_t(m);
        std::vector<int64_t> eig =
            eps > 0 ? std::vector<int64_t>{mm, int64_t(q) * mm, -int64_t(q + 1) * mm}
                    : std::vector<int64_t>{mm, -int64_t(q) * mm, int64_t(q - 1) * mm};
        s.insert(proj_ord(N2, eig));
    }

    // Coxeter torus: cyclic of order q^2 + eps q + 1 inside F_{q^3} resp. F_{q^6}
    {
        uint64_t c = eps > 0 ? q * q + q + 1 : q * q - q + 1;
        uint64_t N = eps > 0 ? q * q * q - 1 : q * q * q * q * q * q - 1;
        uint64_t step = N / c;
        uint64_t q2 = eps > 0 ? q : q * q; // Frobenius power permuting the eigenvalues
        for (uint64_t m = 0; m < c; ++m) {
            int64_t t = int64_t((step * m) % N);
            int64_t t1 = int64_t((uint64_t(t) * q2) % N);
            int64_t t2 = int64_t((uint64_t(t1) * q2) % N);
            s.insert(proj_ord(N, {t, t1, t2}));
        }
    }

    // unipotent: regular class has order p for p >= 3, 4 in characteristic 2
    s.insert(p == 2 ? 4 : p);
    if (p == 2) s.insert(2);

    // mixed J2(lambda) + lambda^{-2}: projective order min k with p | k and
    // ord(lambda) | 3k
    for (uint64_t i = 1; i < e; ++i) {
        uint64_t ol = e / std::gcd(e, i);
        for (uint64_t k = p;; k += p)
            if ((3 * k) % ol == 0) { s.insert(k); break; }
    }
    return spectra::to_sorted(s);
}

inline std::vector<uint64_t> spectrum_psl3(uint64_t q) { return spectrum_psl3_psu3(q, +1); }
inline std::vector<uint64_t> spectrum_psu3(uint64_t q) { return spectrum_psl3_psu3(q, -1); }

// PSp(4,q).
inline std::vector<uint64_t> spectrum_psp4(uint64_t q) {
    using namespace spectra;
    PrimePower pp = factor_prime_power(q);
    uint64_t p = pp.p;
    std::set<uint64_t> s{1};

    // (q-1)^2, (q+1)^2 and mixed (q-1)(q+1) tori: exponents (i,-i,j,-j)
    auto pair_torus = [&s](uint64_t Na, uint64_t Nb) {
        uint64_t N = std::lcm(Na, Nb);
        uint64_t sa = N / Na, sb = N / Nb;
        for (uint64_t i = 0; i < Na; ++i)
            for (uint64_t j = 0; j < Nb; ++j) {
                int64_t a = int64_t(sa * i), b = int64_t(sb * j);
                s.insert(proj_ord(N, {a, -a, b, -b}));
            }
    };
    if (q > 2) pair_torus(q - 1, q - 1);
    pair_torus(q + 1, q + 1);
    if (q > 2) pair_torus(q - 1, q + 1);

    // SL2(q^2)-type torus Z_{q^2-1}: exponents (m, qm, -m, -qm)
    uint64_t N2 = q * q - 1;
    for (uint64_t m = 0; m < N2; ++m) {
        int64_t a = int64_t(m), b = int64_t((m * q) % N2);
        s.insert(proj_ord(N2, {a, b, -a, -b}));
    }
    // Z_{q^2+1} torus: exponents (m, qm, -m, -qm) inside mu_{q^2+1}
    uint64_t N4 = q * q + 1;
    for (uint64_t m = 0; m < N4; ++m) {
        int64_t a = int64_t(m), b = int64_t((m * q) % N4);
        s.insert(proj_ord(N4, {a, b, -a, -b}));
    }

    // unipotent classes: transvections and [2,2] have order p; the regular
    // class has order p for p >= 5, 9 for p = 3, 4 for p = 2
    s.insert(p);
    s.insert(p == 2 ? 4 : (p == 3 ? 9 : p));

    // mixed: transvection block + Sp2-torus element: lcm(p, ord)
    for (int sign : {-1, +1}) {
        uint64_t Nb = sign > 0 ? q - 1 : q + 1;
        if (Nb <= 1) continue;
        for (uint64_t j = 1; j < Nb; ++j) {
            uint64_t oj = Nb / std::gcd(Nb, j);
            s.insert(std::lcm(p, oj));
            // GL2-Levi J2(lambda) (and its mu_{q+1} twin): min k with p | k
            // and ord(lambda) | 2k
            for (uint64_t k = p;; k += p)
                if ((2 * k) % oj == 0) { s.insert(k); break; }
        }
    }
    return spectra::to_sorted(s);
}

// Suzuki groups 2B2(q), q = 2^(2m+1): {1,2,4} + divisors of q-1, q±t+1.
inline std::vector<uint64_t> spectrum_suzuki(uint64_t q) {
    PrimePower pp = factor_prime_power(q);
    if (pp.p != 2 || pp.k % 2 == 0) throw input_error("spectrum_suzuki: bad q");
    uint64_t t = 1ull << ((pp.k + 1) / 2);
    std::set<uint64_t> s{1, 2, 4, q - 1, q - t + 1, q + t + 1};
    return spectra::to_sorted(s);
}

// Ree groups 2G2(q), q = 3^(2m+1): divisors of 9, 6, q-1, (q+1)/2, q±t+1.
inline std::vector<uint64_t> spectrum_ree(uint64_t q) {
    PrimePower pp = factor_prime_power(q);
    if (pp.p != 3 || pp.k % 2 == 0) throw input_error("spectrum_ree: bad q");
    uint64_t t = 1;
    for (uint32_t i = 0; i < (pp.k + 1) / 2; ++i) t *= 3;
    std::set<uint64_t> s{1, 9, 6, q - 1, (q + 1) / 2, q - t + 1, q + t + 1};
    return spectra::to_sorted(s);
}

// A_n via cycle types: lcm over even partitions of n.
inline std::vector<uint64_t> spectrum_alt(uint32_t n) {
    std::set<uint64_t> s;
    std::vector<uint32_t> parts;
    auto rec = [&](auto&& self, uint32_t remaining, uint32_t max_part) -> void {
        if (remaining == 0) {
            uint32_t transpositions = 0;
            uint64_t l = 1;
            for (uint32_t p : parts) {
                transpositions += p - 1;
                l = std::lcm(l, uint64_t(p));
            }
            if (transpositions % 2 == 0) s.insert(l);
            return;
        }
        for (uint32_t p = std::min(remaining, max_part); p >= 1; --p) {
            parts.push_back(p);
            self(self, remaining - p, p);
            parts.pop_back();
        }
    };
    rec(rec, n, n);
    return std::vector<uint64_t>(s.begin(), s.end());
}

// Dispatcher: families with an implemented closed form.
inline bool family_spectrum_available(const FamilySpec& s) {
    switch (s.family) {
        case Family::Alt: return true;
        case Family::PSL: return s.n == 2 || s.n == 3;
        case Family::PSU: return s.n == 3;
        case Family::PSp: return s.n == 2;
        case Family::TwB2:
        case Family::TwG2: return true;
        default: return false;
    }
}

inline std::vector<uint64_t> family_spectrum(const FamilySpec& s) {
    switch (s.family) {
        case Family::Alt: return spectrum_alt(s.n);
        case Family::PSL:
            if (s.n == 2) return spectrum_psl2(s.q);
            if (s.n == 3) return spectrum_psl3(s.q);
            break;
        case Family::PSU:
            if (s.n == 3) return spectrum_psu3(s.q);
            break;
        case Family::PSp:
            if (s.n == 2) return spectrum_psp4(s.q);
            break;
        case Family::TwB2: return spectrum_suzuki(s.q);
        case Family::TwG2: return spectrum_ree(s.q);
        default: break;
    }
    throw unsupported("no spectrum formula for this family");
}

} // namespace mfq
