#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "mfq/rational.hpp"

namespace mfq {

// 2-orbifold / Fuchsian signature (genus; n_1,...,n_k). Periods are stored
// expanded and sorted; the exponent shorthand 2^4 is only notation.
struct Signature {
    uint32_t genus = 0;
    std::vector<uint32_t> periods; // each >= 2, ascending

    Signature() = default;
    Signature(uint32_t g, std::vector<uint32_t> ps) : genus(g), periods(std::move(ps)) {
        for (uint32_t m : periods)
            if (m < 2) throw input_error("Signature: periods must be >= 2");
        std::sort(periods.begin(), periods.end());
    }

    static Signature triangle(uint32_t a, uint32_t b, uint32_t c) {
        return Signature(0, {a, b, c});
    }

    bool is_triangle() const { return genus == 0 && periods.size() == 3; }
    bool is_genus1_one_period() const { return genus == 1 && periods.size() == 1; }

    bool operator==(const Signature& o) const {
        return genus == o.genus && periods == o.periods;
    }
    bool operator<(const Signature& o) const {
        if (genus != o.genus) return genus < o.genus;
        return periods < o.periods;
    }

    // normalized hyperbolic area: 2 genus - 2 + sum (1 - 1/m)
    Rational measure() const {
        Rational mu(2 * int64_t(genus) - 2);
        for (uint32_t m : periods) mu = mu + Rational(int64_t(m) - 1, m);
        return mu;
    }
    bool hyperbolic() const { return measure().positive(); }

    std::string to_string() const {
        std::string s = "(" + std::to_string(genus) + ";";
        if (periods.empty()) return s + "-)";
        for (size_t i = 0; i < periods.size();) {
            size_t j = i;
            while (j < periods.size() && periods[j] == periods[i]) ++j;
            s += (i ? "," : "") + std::to_string(periods[i]);
            if (j - i > 1) s += "^" + std::to_string(j - i);
            i = j;
        }
        return s + ")";
    }
};

// Accepts "(g; m1,m2,...)", "(g;-)", triangle shorthand "(a,b,c)" and the
// exponent shorthand "2^4" inside period lists.
inline Signature parse_signature(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.size() < 3 || s.front() != '(' || s.back() != ')')
        throw input_error("bad signature: '" + text + "'");
    s = s.substr(1, s.size() - 2);

    auto parse_periods = [&text](const std::string& body) {
        std::vector<uint32_t> out;
        size_t pos = 0;
        while (pos < body.size()) {
            size_t comma = body.find(',', pos);
            std::string tok =
                body.substr(pos, comma == std::string::npos ? comma : comma - pos);
            size_t caret = tok.find('^');
            std::string base = caret == std::string::npos ? tok : tok.substr(0, caret);
            std::string rep = caret == std::string::npos ? "1" : tok.substr(caret + 1);
            if (base.empty() || base.find_first_not_of("0123456789") != std::string::npos ||
                rep.empty() || rep.find_first_not_of("0123456789") != std::string::npos)
                throw input_error("bad signature period in '" + text + "'");
            uint32_t m = uint32_t(std::stoul(base));
            uint32_t k = uint32_t(std::stoul(rep));
            for (uint32_t i = 0; i < k; ++i) out.push_back(m);
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        return out;
    };

    size_t semi = s.find(';');
    if (semi == std::string::npos) {
        // triangle shorthand (a,b,c)
        std::vector<uint32_t> ps = parse_periods(s);
        if (ps.size() != 3) throw input_error("triangle shorthand needs three periods");
        return Signature(0, std::move(ps));
    }
    std::string ghead = s.substr(0, semi);
    if (ghead.empty() || ghead.find_first_not_of("0123456789") != std::string::npos)
        throw input_error("bad signature genus in '" + text + "'");
    uint32_t g = uint32_t(std::stoul(ghead));
    std::string body = s.substr(semi + 1);
    if (body == "-" || body.empty()) return Signature(g, {});
    return Signature(g, parse_periods(body));
}

// Riemann-Hurwitz: 2 - 2g = -N * mu(sig). Requires a hyperbolic signature and
// integral data describing a closed surface of genus >= 2.
inline uint32_t kernel_genus(const Signature& sig, uint64_t group_order) {
    Rational mu = sig.measure();
    if (!mu.positive()) throw not_surface_kernel("kernel_genus: signature not hyperbolic");
    Rational t = mu * int64_t(group_order);
    if (!t.is_integer()) throw not_surface_kernel("kernel_genus: N*mu not integral");
    int64_t twice = t.num() + 2;
    if (twice % 2 != 0 || twice <= 0) throw not_surface_kernel("kernel_genus: bad parity");
    int64_t g = twice / 2;
    if (g < 2) throw not_surface_kernel("kernel_genus: genus < 2");
    return uint32_t(g);
}

} // namespace mfq
