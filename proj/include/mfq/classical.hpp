#pragma once

#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "mfq/bigint.hpp"
#include "mfq/element.hpp"

namespace mfq {

struct PrimePower {
    uint64_t p = 0;
    uint32_t k = 0;
};

inline PrimePower factor_prime_power(uint64_t q) {
    if (q < 2) throw input_error("not a prime power: " + std::to_string(q));
    uint64_t p = q;
    for (uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) { p = d; break; }
    uint64_t n = q;
    uint32_t k = 0;
    while (n % p == 0) { n /= p; ++k; }
    if (n != 1) throw input_error("not a prime power: " + std::to_string(q));
    return {p, k};
}

// ---------------------------------------------------------------------------
// CFSG family orders
// ---------------------------------------------------------------------------

enum class Family {
    Alt, PSL, PSU, PSp, POmegaOdd, POmegaPlus, POmegaMinus,
    G2, F4, E6, E7, E8, TwE6, ThD4, TwB2, TwG2, TwF4, Tits, Sporadic
};

struct FamilySpec {
    Family family;
    uint32_t n = 0;            // A_n; or the n of PSL(n,q), PSp(2n,q), POmega(2n+1,q), ...
    uint64_t q = 0;
    std::string sporadic_name; // for Family::Sporadic
};

inline const std::map<std::string, std::string>& sporadic_orders() {
    static const std::map<std::string, std::string> t = {
        {"M11", "7920"},
        {"M12", "95040"},
        {"J1", "175560"},
        {"M22", "443520"},
        {"J2", "604800"},
        {"M23", "10200960"},
        {"HS", "44352000"},
        {"J3", "50232960"},
        {"M24", "244823040"},
        {"McL", "898128000"},
        {"He", "4030387200"},
        {"Ru", "145926144000"},
        {"Suz", "448345497600"},
        {"ON", "460815505920"},
        {"Co3", "495766656000"},
        {"Co2", "42305421312000"},
        {"Fi22", "64561751654400"},
        {"HN", "273030912000000"},
        {"Ly", "51765179004000000"},
        {"Th", "90745943887872000"},
        {"Fi23", "4089470473293004800"},
        {"Co1", "4157776806543360000"},
        {"J4", "86775571046077562880"},
        {"Fi24'", "1255205709190661721292800"},
        {"B", "4154781481226426191177580544000000"},
        {"M", "808017424794512875886459904961710757005754368000000000"},
    };
    return t;
}

namespace detail {

inline BigUint qpow(uint64_t q, uint32_t e) { return BigUint::pow(q, e); }
inline BigUint qe_minus(uint64_t q, uint32_t e) { return qpow(q, e) - BigUint(1); }
inline BigUint qe_plus(uint64_t q, uint32_t e) { return qpow(q, e) + BigUint(1); }
inline BigUint factorial(uint32_t n) {
    BigUint f(1);
    for (uint32_t i = 2; i <= n; ++i) f = f * BigUint(i);
    return f;
}

} // namespace detail

inline BigUint sl_order(uint32_t n, uint64_t q) {
    using namespace detail;
    BigUint o = qpow(q, n * (n - 1) / 2);
    for (uint32_t i = 2; i <= n; ++i) o = o * qe_minus(q, i);
    return o;
}
inline BigUint su_order(uint32_t n, uint64_t q) {
    using namespace detail;
    BigUint o = qpow(q, n * (n - 1) / 2);
    for (uint32_t i = 2; i <= n; ++i) o = o * (i % 2 ? qe_plus(q, i) : qe_minus(q, i));
    return o;
}
inline BigUint sp_order(uint32_t n, uint64_t q) { // Sp_{2n}(q)
    using namespace detail;
    BigUint o = qpow(q, n * n);
    for (uint32_t i = 1; i <= n; ++i) o = o * qe_minus(q, 2 * i);
    return o;
}

// Exact order of the simple group named by the spec.
inline BigUint classical_order(const FamilySpec& s) {
    using namespace detail;
    const uint32_t n = s.n;
    const uint64_t q = s.q;
    auto check_q = [&] { factor_prime_power(q); };
    switch (s.family) {
        case Family::Alt:
            if (n < 5) throw input_error("A_n simple only for n >= 5");
            return factorial(n).divided_by(2);
        case Family::PSL: {
            if (n < 2) throw input_error("PSL(n,q): n >= 2");
            check_q();
            return sl_order(n, q).divided_by(uint32_t(std::gcd(uint64_t(n), q - 1)));
        }
        case Family::PSU: {
            if (n < 3) throw input_error("PSU(n,q): n >= 3");
            check_q();
            return su_order(n, q).divided_by(uint32_t(std::gcd(uint64_t(n), q + 1)));
        }
        case Family::PSp: {
            if (n < 2) throw input_error("PSp(2n,q): n >= 2");
            check_q();
            return sp_order(n, q).divided_by(uint32_t(std::gcd(uint64_t(2), q - 1)));
        }
        case Family::POmegaOdd: { // B_n(q) = Omega(2n+1, q)
            if (n < 3) throw input_error("POmega(2n+1,q): n >= 3");
            check_q();
            return sp_order(n, q).divided_by(uint32_t(std::gcd(uint64_t(2), q - 1)));
        }
        case Family::POmegaPlus: {
            if (n < 4) throw input_error("POmega+(2n,q): n >= 4");
            check_q();
            BigUint o = qpow(q, n * (n - 1)) * qe_minus(q, n);
            for (uint32_t i = 1; i < n; ++i) o = o * qe_minus(q, 2 * i);
            uint32_t d = std::gcd(4u, qe_minus(q, n).mod_small(4));
            return o.divided_by(d == 0 ? 4 : d);
        }
        case Family::POmegaMinus: {
            if (n < 4) throw input_error("POmega-(2n,q): n >= 4");
            check_q();
            BigUint o = qpow(q, n * (n - 1)) * qe_plus(q, n);
            for (uint32_t i = 1; i < n; ++i) o = o * qe_minus(q, 2 * i);
            uint32_t d = std::gcd(4u, qe_plus(q, n).mod_small(4));
            return o.divided_by(d == 0 ? 4 : d);
        }
        case Family::G2:
            if (q < 3) throw input_error("G2(q) simple needs q >= 3");
            check_q();
            return qpow(q, 6) * qe_minus(q, 6) * qe_minus(q, 2);
        case Family::F4:
            check_q();
            return qpow(q, 24) * qe_minus(q, 12) * qe_minus(q, 8) * qe_minus(q, 6) *
                   qe_minus(q, 2);
        case Family::E6:
            check_q();
            return (qpow(q, 36) * qe_minus(q, 12) * qe_minus(q, 9) * qe_minus(q, 8) *
                    qe_minus(q, 6) * qe_minus(q, 5) * qe_minus(q, 2))
                .divided_by(uint32_t(std::gcd(uint64_t(3), q - 1)));
        case Family::E7:
            check_q();
            return (qpow(q, 63) * qe_minus(q, 18) * qe_minus(q, 14) * qe_minus(q, 12) *
                    qe_minus(q, 10) * qe_minus(q, 8) * qe_minus(q, 6) * qe_minus(q, 2))
                .divided_by(uint32_t(std::gcd(uint64_t(2), q - 1)));
        case Family::E8:
            check_q();
            return qpow(q, 120) * qe_minus(q, 30) * qe_minus(q, 24) * qe_minus(q, 20) *
                   qe_minus(q, 18) * qe_minus(q, 14) * qe_minus(q, 12) * qe_minus(q, 8) *
                   qe_minus(q, 2);
        case Family::TwE6:
            check_q();
            return (qpow(q, 36) * qe_minus(q, 12) * qe_plus(q, 9) * qe_minus(q, 8) *
                    qe_minus(q, 6) * qe_plus(q, 5) * qe_minus(q, 2))
                .divided_by(uint32_t(std::gcd(uint64_t(3), q + 1)));
        case Family::ThD4:
            check_q();
            return qpow(q, 12) * (qpow(q, 8) + qpow(q, 4) + BigUint(1)) * qe_minus(q, 6) *
                   qe_minus(q, 2);
        case Family::TwB2: {
            PrimePower pp = factor_prime_power(q);
            if (pp.p != 2 || pp.k % 2 == 0 || q < 8)
                throw input_error("2B2(q) needs q = 2^(2k+1), q >= 8");
            return qpow(q, 2) * (qpow(q, 2) + BigUint(1)) * BigUint(q - 1);
        }
        case Family::TwG2: {
            PrimePower pp = factor_prime_power(q);
            if (pp.p != 3 || pp.k % 2 == 0 || q < 27)
                throw input_error("2G2(q) needs q = 3^(2k+1), q >= 27");
            return qpow(q, 3) * (qpow(q, 3) + BigUint(1)) * BigUint(q - 1);
        }
        case Family::TwF4: {
            PrimePower pp = factor_prime_power(q);
            if (pp.p != 2 || pp.k % 2 == 0 || q < 8)
                throw input_error("2F4(q) needs q = 2^(2k+1), q >= 8 (see Tits for q = 2)");
            return qpow(q, 12) * (qpow(q, 6) + BigUint(1)) * qe_minus(q, 4) *
                   (qpow(q, 3) + BigUint(1)) * BigUint(q - 1);
        }
        case Family::Tits:
            return BigUint::from_string("17971200");
        case Family::Sporadic: {
            auto it = sporadic_orders().find(s.sporadic_name);
            if (it == sporadic_orders().end())
                throw input_error("unknown sporadic group: " + s.sporadic_name);
            return BigUint::from_string(it->second);
        }
    }
    throw input_error("classical_order: bad family");
}

// ---------------------------------------------------------------------------
// Constructible groups and their generators
// ---------------------------------------------------------------------------

enum class GroupKind { SL, PSL, SU, PSU, Sp, PSp, Alt, Sym, Cyclic, Q8, Dihedral };

struct GroupSpec {
    GroupKind kind;
    uint32_t n = 0;  // matrix dimension (2g for Sp), or the n of A_n / S_n / Z_n / Dih_n
    uint64_t q = 0;  // field size where applicable

    std::string to_string() const {
        switch (kind) {
            case GroupKind::SL: return "sl(" + std::to_string(n) + "," + std::to_string(q) + ")";
            case GroupKind::PSL: return "psl(" + std::to_string(n) + "," + std::to_string(q) + ")";
            case GroupKind::SU: return "su(" + std::to_string(n) + "," + std::to_string(q) + ")";
            case GroupKind::PSU: return "psu(" + std::to_string(n) + "," + std::to_string(q) + ")";
            case GroupKind::Sp: return "sp(" + std::to_string(n) + "," + std::to_string(q) + ")";
            case GroupKind::PSp: return "psp(" + std::to_string(n) + "," + std::to_string(q) + ")";
            case GroupKind::Alt: return "a(" + std::to_string(n) + ")";
            case GroupKind::Sym: return "s(" + std::to_string(n) + ")";
            case GroupKind::Cyclic: return "z(" + std::to_string(n) + ")";
            case GroupKind::Q8: return "q8";
            case GroupKind::Dihedral: return "dih(" + std::to_string(n) + ")";
        }
        return "?";
    }
};

// Order of the group the spec realizes (lift order for SL/SU/Sp).
inline BigUint spec_order(const GroupSpec& s) {
    switch (s.kind) {
        case GroupKind::SL: return sl_order(s.n, s.q);
        case GroupKind::PSL:
            return sl_order(s.n, s.q).divided_by(uint32_t(std::gcd(uint64_t(s.n), s.q - 1)));
        case GroupKind::SU: return su_order(s.n, s.q);
        case GroupKind::PSU:
            return su_order(s.n, s.q).divided_by(uint32_t(std::gcd(uint64_t(s.n), s.q + 1)));
        case GroupKind::Sp: return sp_order(s.n / 2, s.q);
        case GroupKind::PSp:
            return sp_order(s.n / 2, s.q).divided_by(uint32_t(std::gcd(uint64_t(2), s.q - 1)));
        case GroupKind::Alt: return detail::factorial(s.n).divided_by(2);
        case GroupKind::Sym: return detail::factorial(s.n);
        case GroupKind::Cyclic: return BigUint(s.n);
        case GroupKind::Q8: return BigUint(8);
        case GroupKind::Dihedral: return BigUint(2 * uint64_t(s.n));
    }
    throw input_error("spec_order: bad kind");
}

// `sp(6,2)`, `psl(2,49)`, `a(9)`, `z(12)`, `q8`, ... (case-insensitive).
inline GroupSpec parse_group_spec(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s.push_back(char(std::tolower(static_cast<unsigned char>(c))));
    if (s == "q8") return {GroupKind::Q8, 0, 0};
    auto lp = s.find('(');
    if (lp == std::string::npos || s.back() != ')')
        throw input_error("bad group spec: '" + text + "'");
    std::string head = s.substr(0, lp);
    std::string args = s.substr(lp + 1, s.size() - lp - 2);
    std::vector<uint64_t> vals;
    size_t pos = 0;
    while (pos < args.size()) {
        size_t comma = args.find(',', pos);
        std::string tok = args.substr(pos, comma == std::string::npos ? comma : comma - pos);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw input_error("bad group spec argument in '" + text + "'");
        vals.push_back(std::stoull(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    auto two = [&](GroupKind k) -> GroupSpec {
        if (vals.size() != 2) throw input_error("'" + text + "': expected (n,q)");
        return {k, uint32_t(vals[0]), vals[1]};
    };
    auto one = [&](GroupKind k) -> GroupSpec {
        if (vals.size() != 1) throw input_error("'" + text + "': expected (n)");
        return {k, uint32_t(vals[0]), 0};
    };
    if (head == "sl") return two(GroupKind::SL);
    if (head == "psl" || head == "l") return two(GroupKind::PSL);
    if (head == "su") return two(GroupKind::SU);
    if (head == "psu" || head == "u") return two(GroupKind::PSU);
    if (head == "sp") {
        GroupSpec g = two(GroupKind::Sp);
        if (g.n % 2) throw input_error("sp(2g,q): first argument must be even");
        return g;
    }
    if (head == "psp") {
        GroupSpec g = two(GroupKind::PSp);
        if (g.n % 2) throw input_error("psp(2g,q): first argument must be even");
        return g;
    }
    if (head == "a") return one(GroupKind::Alt);
    if (head == "s") return one(GroupKind::Sym);
    if (head == "z") return one(GroupKind::Cyclic);
    if (head == "dih") return one(GroupKind::Dihedral);
    throw input_error("unknown group family: '" + text + "'");
}

namespace detail {

// Field for matrix entries: F_q itself for SL/Sp, F_{q^2} for SU.
inline Modulus entry_field(uint64_t q, bool quadratic_over_q) {
    PrimePower pp = factor_prime_power(q);
    if (quadratic_over_q) {
        if (pp.k != 1) throw unsupported("SU(3,q) constructible only for prime q");
        return Modulus::gfp2(uint32_t(pp.p));
    }
    if (pp.k == 1) return Modulus::zmod(uint32_t(q));
    if (pp.k == 2) return Modulus::gfp2(uint32_t(pp.p));
    throw unsupported("fields beyond F_p and F_{p^2} are not constructible");
}

inline Residue primitive_element(const Modulus& f) {
    uint64_t card = f.cardinality();
    for (uint64_t v = 1; v < card; ++v) {
        Residue x = Residue::from_packed(uint32_t(v), f);
        if (x.is_unit() && x.multiplicative_order() == card - 1) return x;
    }
    throw internal_inconsistency("no primitive element");
}

inline std::vector<Mat> sl_generators(uint32_t n, const Modulus& f) {
    std::vector<Mat> gens;
    Mat u = Mat::identity(n, f);
    u.set(0, 1, Residue::one(f));
    gens.push_back(u);
    if (f.cardinality() > 3) {
        Residue lam = primitive_element(f);
        Mat h = Mat::identity(n, f);
        h.set(0, 0, lam);
        h.set(1, 1, lam.inverse());
        gens.push_back(h);
    }
    // signed n-cycle: e_1 -> e_2 -> ... -> e_n -> (-1)^(n-1) e_1
    Mat w(n, f);
    for (uint32_t i = 0; i + 1 < n; ++i) w.set(i + 1, i, Residue::one(f));
    Residue sign = (n % 2 == 0) ? -Residue::one(f) : Residue::one(f);
    w.set(0, n - 1, sign);
    gens.push_back(w);
    if (n == 2) {
        Mat l = Mat::identity(2, f);
        l.set(1, 0, Residue::one(f));
        gens.push_back(l);
    }
    return gens;
}

// Symplectic transvection x -> x + lambda <x,v> v for the standard form.
inline Mat symplectic_transvection(uint32_t g, const Modulus& f,
                                   const std::vector<Residue>& v, const Residue& lam) {
    uint32_t n = 2 * g;
    Mat j = Mat::standard_symplectic_form(g, f);
    Mat t = Mat::identity(n, f);
    for (uint32_t col = 0; col < n; ++col) {
        // <e_col, v> = sum_k J[col][k] v[k]
        Residue pairing = Residue::zero(f);
        for (uint32_t k = 0; k < n; ++k) pairing = pairing + j.at(col, k) * v[k];
        Residue c = lam * pairing;
        for (uint32_t row = 0; row < n; ++row)
            t.set(row, col, t.at(row, col) + c * v[row]);
    }
    return t;
}

inline std::vector<Mat> sp_generators(uint32_t two_g, uint64_t /*q*/, const Modulus& f) {
    uint32_t g = two_g / 2;
    auto basis_vec = [&](std::initializer_list<uint32_t> idx) {
        std::vector<Residue> v(two_g, Residue::zero(f));
        for (uint32_t i : idx) v[i] = Residue::one(f);
        return v;
    };
    Residue one = Residue::one(f);
    std::vector<Mat> gens;
    gens.push_back(symplectic_transvection(g, f, basis_vec({0}), one));      // along e_1
    gens.push_back(symplectic_transvection(g, f, basis_vec({g}), one));      // along f_1
    if (f.cardinality() > 3) {
        Residue lam = primitive_element(f);
        gens.push_back(symplectic_transvection(g, f, basis_vec({0}), lam));
    }
    if (g >= 2) {
        gens.push_back(symplectic_transvection(g, f, basis_vec({0, 1}), one));     // e_1 + e_2
        gens.push_back(symplectic_transvection(g, f, basis_vec({0, g + 1}), one)); // e_1 + f_2
        // rotate the hyperbolic pairs: e_i -> e_{i+1}, f_i -> f_{i+1}
        Mat c(two_g, f);
        for (uint32_t i = 0; i < g; ++i) {
            c.set((i + 1) % g, i, one);
            c.set(g + (i + 1) % g, g + i, one);
        }
        gens.push_back(c);
    }
    return gens;
}

// Unitary transvections for the anti-diagonal Hermitian form:
// u(a,b) = [[1,a,b],[0,1,-a^q],[0,0,1]] with b + b^q + a^(q+1) = 0.
inline std::vector<Mat> su3_generators(uint64_t q, const Modulus& f2) {
    uint32_t p = f2.p();
    auto bar = [&](const Residue& x) { return x.pow(q); };
    auto solve_b = [&](const Residue& a) {
        Residue target = -(a * bar(a));
        for (uint64_t v = 0; v < f2.cardinality(); ++v) {
            Residue b = Residue::from_packed(uint32_t(v), f2);
            if (b + bar(b) == target) return b;
        }
        throw internal_inconsistency("su3: no trace solution");
    };
    auto unipotent = [&](const Residue& a) {
        Mat u = Mat::identity(3, f2);
        u.set(0, 1, a);
        u.set(0, 2, solve_b(a));
        u.set(1, 2, -bar(a));
        return u;
    };
    Residue t = Residue::gen(f2);
    Residue lam = primitive_element(f2);
    Mat h = Mat::identity(3, f2);
    h.set(0, 0, lam);
    h.set(1, 1, lam.pow(q - 1));
    h.set(2, 2, lam.pow(q).inverse());
    Mat w = Mat::antidiag_form(3, f2);
    if (p != 2) { // fix det: det(antidiag_3) = -1
        for (uint32_t i = 0; i < 3; ++i)
            for (uint32_t j = 0; j < 3; ++j) w.set(i, j, -w.at(i, j));
    }
    std::vector<Mat> gens = {unipotent(Residue::one(f2)), unipotent(t), h, w};
    for (const Mat& m : gens)
        if (!m.hermitian_isometry() || !(m.determinant().is_one()))
            throw internal_inconsistency("su3 generator fails the form or det check");
    return gens;
}

inline std::vector<GroupElement> as_elements(const std::vector<Mat>& mats, bool projective) {
    std::vector<GroupElement> out;
    out.reserve(mats.size());
    for (const Mat& m : mats)
        out.push_back(projective ? GroupElement(ProjMat(m)) : GroupElement(m));
    return out;
}

inline GenSet q8_generators() {
    // regular representation on {1,-1,i,-i,j,-j,k,-k}
    Perm pi = Perm({2, 3, 1, 0, 6, 7, 5, 4});
    Perm pj = Perm({4, 5, 7, 6, 1, 0, 2, 3});
    return GenSet({GroupElement(pi), GroupElement(pj)}, "q8");
}

} // namespace detail

// Generators whose closure realizes the spec exactly (validated against the
// order formulas in the tests).
inline GenSet standard_generators(const GroupSpec& s) {
    using namespace detail;
    switch (s.kind) {
        case GroupKind::SL:
        case GroupKind::PSL: {
            if (s.n < 2) throw input_error("sl/psl: n >= 2");
            Modulus f = entry_field(s.q, false);
            return GenSet(as_elements(sl_generators(s.n, f), s.kind == GroupKind::PSL),
                          s.to_string());
        }
        case GroupKind::Sp:
        case GroupKind::PSp: {
            Modulus f = entry_field(s.q, false);
            return GenSet(as_elements(sp_generators(s.n, s.q, f), s.kind == GroupKind::PSp),
                          s.to_string());
        }
        case GroupKind::SU:
        case GroupKind::PSU: {
            if (s.n != 3) throw unsupported("only SU(3,q)/PSU(3,q) are constructible");
            Modulus f2 = entry_field(s.q, true);
            return GenSet(as_elements(su3_generators(s.q, f2), s.kind == GroupKind::PSU),
                          s.to_string());
        }
        case GroupKind::Alt: {
            if (s.n < 3) throw input_error("a(n): n >= 3");
            std::vector<uint16_t> cyc;
            if (s.n % 2) {
                for (uint32_t i = 0; i < s.n; ++i) cyc.push_back(uint16_t(i));
            } else {
                for (uint32_t i = 1; i < s.n; ++i) cyc.push_back(uint16_t(i));
            }
            Perm rot = Perm::from_cycles(s.n, {cyc});
            Perm tri = Perm::from_cycles(s.n, {{0, 1, 2}});
            return GenSet({GroupElement(tri), GroupElement(rot)}, s.to_string());
        }
        case GroupKind::Sym: {
            if (s.n < 2) throw input_error("s(n): n >= 2");
            std::vector<uint16_t> cyc;
            for (uint32_t i = 0; i < s.n; ++i) cyc.push_back(uint16_t(i));
            return GenSet({GroupElement(Perm::from_cycles(s.n, {{0, 1}})),
                           GroupElement(Perm::from_cycles(s.n, {cyc}))},
                          s.to_string());
        }
        case GroupKind::Cyclic: {
            if (s.n < 1) throw input_error("z(n): n >= 1");
            if (s.n == 1) return GenSet({GroupElement(Perm(1))}, s.to_string());
            std::vector<uint16_t> cyc;
            for (uint32_t i = 0; i < s.n; ++i) cyc.push_back(uint16_t(i));
            return GenSet({GroupElement(Perm::from_cycles(s.n, {cyc}))}, s.to_string());
        }
        case GroupKind::Q8:
            return q8_generators();
        case GroupKind::Dihedral: {
            if (s.n < 3) throw input_error("dih(n): n >= 3");
            std::vector<uint16_t> cyc;
            for (uint32_t i = 0; i < s.n; ++i) cyc.push_back(uint16_t(i));
            std::vector<uint16_t> refl(s.n);
            for (uint32_t i = 0; i < s.n; ++i) refl[i] = uint16_t((s.n - i) % s.n);
            return GenSet({GroupElement(Perm::from_cycles(s.n, {cyc})),
                           GroupElement(Perm(refl))},
                          s.to_string());
        }
    }
    throw input_error("standard_generators: bad kind");
}

} // namespace mfq
