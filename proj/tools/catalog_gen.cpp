// Builds data/catalog.json: the simple-group knowledge base shipped with the
// artifact. Everything computable is computed and asserted here (Mathieu
// groups from the binary Golay code, marker witness searches, family spectra);
// the remainder is ATLAS-derived reference data tagged as such.

#include <bitset>
#include <cstdio>
#include <deque>
#include <iostream>
#include <map>
#include <set>

#include "mfq/catalog.hpp"
#include "mfq/congruence.hpp"
#include "mfq/epimorphism.hpp"

using namespace mfq;

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) {
        std::cerr << "FATAL: " << what << "\n";
        std::exit(1);
    }
}

std::string vec_to_string(const std::vector<uint64_t>& v) {
    std::string s = "{";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
}

// ---------------------------------------------------------------------------
// Golay code and the Mathieu chain
// ---------------------------------------------------------------------------

struct MathieuChain {
    std::vector<std::vector<uint16_t>> m24, m23, m22, m12, m11;
};

// multiply polynomials over F2 mod x^23 - 1 (bitmask coefficients)
uint32_t polmul23(uint32_t a, uint32_t b) {
    uint64_t acc = 0;
    for (int i = 0; i < 23; ++i)
        if (a >> i & 1) acc ^= uint64_t(b) << i;
    return uint32_t((acc ^ (acc >> 23)) & 0x7fffff);
}

MathieuChain build_mathieu_chain() {
    // the four Conway generators on {0..22} = F_23 and 23 = infinity
    const uint32_t P = 23, INF = 23;
    auto make_perm = [&](auto&& f) {
        std::vector<uint16_t> img(24);
        for (uint32_t t = 0; t < 24; ++t) img[t] = uint16_t(f(t));
        return Perm(img);
    };
    auto inv_mod = [&](uint32_t x) {
        for (uint32_t y = 1; y < P; ++y)
            if (x * y % P == 1) return y;
        return 0u;
    };
    std::set<uint32_t> squares;
    for (uint32_t t = 1; t < P; ++t) squares.insert(t * t % P);

    Perm alpha = make_perm([&](uint32_t t) { return t == INF ? INF : (t + 1) % P; });
    Perm beta = make_perm([&](uint32_t t) { return t == INF ? INF : 2 * t % P; });
    Perm gamma = make_perm([&](uint32_t t) {
        if (t == INF) return 0u;
        if (t == 0) return INF;
        return (P - inv_mod(t)) % P;
    });
    uint32_t inv9 = inv_mod(9);
    Perm delta = make_perm([&](uint32_t t) {
        if (t == INF) return INF;
        if (t == 0) return 0u;
        uint32_t cube = t * t % P * t % P;
        return squares.count(t) ? cube * inv9 % P : cube * 9 % P;
    });

    // binary Golay code as the extended QR code: find a degree-11 factor of
    // (x^23-1)/(x-1) and take its multiples, extended by overall parity
    std::vector<uint32_t> codewords;
    {
        uint32_t gpoly = 0;
        for (uint32_t g = 1u << 11; g < (1u << 12); ++g) {
            // does g divide x^23 - 1? check by long division of x^23+1
            uint64_t rem = (1ull << 23) | 1ull;
            for (int d = 23; d >= 11; --d)
                if (rem >> d & 1) rem ^= uint64_t(g) << (d - 11);
            if (rem == 0) { gpoly = g; break; }
        }
        require(gpoly != 0, "no degree-11 factor of x^23-1 over F2");
        for (uint32_t m = 0; m < (1u << 12); ++m) codewords.push_back(polmul23(m, gpoly));
        // try this factor; if the Conway maps do not preserve it, switch to
        // the reciprocal factor (the other QR code)
        auto build_set = [&](const std::vector<uint32_t>& words) {
            std::set<uint32_t> cs;
            for (uint32_t w : words) {
                uint32_t parity = uint32_t(std::bitset<23>(w).count() & 1);
                cs.insert(w | (parity << 23));
            }
            return cs;
        };
        auto preserves = [&](const std::set<uint32_t>& cs, const Perm& p) {
            for (uint32_t c : cs) {
                uint32_t moved = 0;
                for (uint32_t i = 0; i < 24; ++i)
                    if (c >> i & 1) moved |= 1u << p[i];
                if (!cs.count(moved)) return false;
            }
            return true;
        };
        std::set<uint32_t> cs = build_set(codewords);
        if (!preserves(cs, delta) || !preserves(cs, gamma)) {
            // reciprocal polynomial
            uint32_t rec = 0;
            for (int i = 0; i <= 11; ++i)
                if (gpoly >> i & 1) rec |= 1u << (11 - i);
            codewords.clear();
            for (uint32_t m = 0; m < (1u << 12); ++m) codewords.push_back(polmul23(m, rec));
            cs = build_set(codewords);
        }
        std::map<int, int> weight_dist;
        for (uint32_t c : cs) ++weight_dist[int(std::bitset<24>(c).count())];
        require(weight_dist[0] == 1 && weight_dist[8] == 759 && weight_dist[12] == 2576 &&
                    weight_dist[16] == 759 && weight_dist[24] == 1,
                "extended code is not the Golay code");
        for (const Perm* p : {&alpha, &beta, &gamma, &delta})
            require(preserves(cs, *p), "generator does not preserve the Golay code");
        // keep a dodecad for the M12 step
        codewords.assign(cs.begin(), cs.end());
    }
    uint32_t dodecad = 0;
    for (uint32_t c : codewords)
        if (std::bitset<24>(c).count() == 12) { dodecad = c; break; }

    // 5-transitivity: orbit of (0,1,2,3,4) under the four generators
    {
        std::vector<Perm> gens = {alpha, beta, gamma, delta};
        auto encode = [](const std::array<uint8_t, 5>& t) {
            uint32_t v = 0;
            for (int i = 4; i >= 0; --i) v = v * 24 + t[i];
            return v;
        };
        std::vector<bool> seen(24 * 24 * 24 * 24 * 24, false);
        std::deque<std::array<uint8_t, 5>> frontier;
        std::array<uint8_t, 5> start = {0, 1, 2, 3, 4};
        seen[encode(start)] = true;
        frontier.push_back(start);
        uint64_t count = 1;
        while (!frontier.empty()) {
            auto tup = frontier.front();
            frontier.pop_front();
            for (const Perm& g : gens) {
                std::array<uint8_t, 5> img;
                for (int i = 0; i < 5; ++i) img[i] = uint8_t(g[tup[i]]);
                uint32_t code = encode(img);
                if (!seen[code]) {
                    seen[code] = true;
                    ++count;
                    frontier.push_back(img);
                }
            }
        }
        require(count == 5100480ull, "generators are not 5-transitive on 24 points: orbit " +
                                         std::to_string(count));
    }

    MathieuChain chain;
    std::vector<Perm> m24_gens = {alpha, beta, gamma, delta};
    for (const Perm& g : m24_gens) chain.m24.push_back(g.images());

    // random words in the generators, tracking nothing (elements only)
    SplitMix64 rng(20240517);
    auto random_element = [&]() {
        Perm x(24);
        uint32_t len = 8 + uint32_t(rng.below(20));
        for (uint32_t i = 0; i < len; ++i) x = x * m24_gens[rng.below(m24_gens.size())];
        return x;
    };

    // point stabilizers / setwise stabilizers by filtered random elements
    auto collect = [&](auto&& keep, size_t want) {
        std::vector<Perm> out;
        while (out.size() < want) {
            Perm x = random_element();
            if (keep(x)) out.push_back(x);
        }
        return out;
    };

    // M22: pointwise stabilizer of {22, 23}, acting on the first 22 points
    {
        auto fix2 = [](const Perm& x) { return x[22] == 22 && x[23] == 23; };
        std::vector<Perm> stab;
        uint64_t order = 0;
        while (order != 443520) {
            auto more = collect(fix2, 4);
            stab.insert(stab.end(), more.begin(), more.end());
            std::vector<GroupElement> gens;
            for (const Perm& s : stab) {
                std::vector<uint16_t> img(s.images().begin(), s.images().begin() + 22);
                gens.push_back(GroupElement(Perm(img)));
            }
            EnumeratedGroup g = enumerate_group(GenSet(gens, "M22"), 500000);
            if (g.enumerated()) order = g.order();
            require(stab.size() < 40, "M22 stabilizer search did not converge");
            if (order == 443520) {
                chain.m22.clear();
                for (const auto& e : gens) chain.m22.push_back(e.perm().images());
            }
        }
        std::cout << "M22 realized: order 443520 on 22 points, " << chain.m22.size()
                  << " generators\n";
    }

    // M23: stabilizer of point 23 = M22 generators extended by elements
    // fixing 23 and moving 22 (M22 is maximal in M23, so any such element
    // completes the stabilizer)
    {
        for (const auto& img22 : chain.m22) {
            std::vector<uint16_t> img(img22.begin(), img22.end());
            img.push_back(22);
            chain.m23.push_back(img);
        }
        auto fix_inf_move_22 = [](const Perm& x) { return x[23] == 23 && x[22] != 22; };
        for (const Perm& x : collect(fix_inf_move_22, 2)) {
            std::vector<uint16_t> img(x.images().begin(), x.images().begin() + 23);
            chain.m23.push_back(img);
        }
        // transitivity check on 23 points
        std::vector<bool> orbit(23, false);
        orbit[0] = true;
        std::deque<uint16_t> q{0};
        while (!q.empty()) {
            uint16_t v = q.front();
            q.pop_front();
            for (const auto& img : chain.m23)
                if (!orbit[img[v]]) { orbit[img[v]] = true; q.push_back(img[v]); }
        }
        require(std::all_of(orbit.begin(), orbit.end(), [](bool b) { return b; }),
                "M23 generators not transitive");
        std::cout << "M23 realized on 23 points, " << chain.m23.size() << " generators\n";
    }

    // M12: setwise stabilizer of a dodecad, acting on its 12 points
    {
        std::vector<uint16_t> dpoints;
        for (uint32_t i = 0; i < 24; ++i)
            if (dodecad >> i & 1) dpoints.push_back(uint16_t(i));
        require(dpoints.size() == 12, "bad dodecad");
        auto keeps = [&](const Perm& x) {
            uint32_t img = 0;
            for (uint16_t p : dpoints) img |= 1u << x[p];
            return img == dodecad;
        };
        std::vector<Perm> stab;
        uint64_t order = 0;
        std::vector<std::vector<uint16_t>> gens12;
        while (order != 95040) {
            auto more = collect(keeps, 4);
            stab.insert(stab.end(), more.begin(), more.end());
            gens12.clear();
            for (const Perm& s : stab) {
                std::vector<uint16_t> img(12);
                for (size_t i = 0; i < 12; ++i) {
                    uint16_t target = s[dpoints[i]];
                    img[i] = uint16_t(std::lower_bound(dpoints.begin(), dpoints.end(), target) -
                                      dpoints.begin());
                }
                gens12.push_back(img);
            }
            std::vector<GroupElement> ge;
            for (const auto& img : gens12) ge.push_back(GroupElement(Perm(img)));
            EnumeratedGroup g = enumerate_group(GenSet(ge, "M12"), 100000);
            if (g.enumerated()) order = g.order();
            require(stab.size() < 40, "M12 stabilizer search did not converge");
        }
        chain.m12 = gens12;
        std::cout << "M12 realized: order 95040 on 12 points\n";
    }

    // M11: point stabilizer inside M12, classical degree-11 action
    {
        std::vector<GroupElement> m12_ge;
        for (const auto& img : chain.m12) m12_ge.push_back(GroupElement(Perm(img)));
        GenSet m12_gens(m12_ge, "M12");
        SplitMix64 rng11(7);
        RandomWalk walk(m12_gens, 11);
        std::vector<Perm> stab;
        uint64_t order = 0;
        std::vector<std::vector<uint16_t>> gens11;
        while (order != 7920) {
            while (stab.size() < 40) {
                GroupElement x = walk.next();
                if (x.perm()[0] == 0) { stab.push_back(x.perm()); if (stab.size() % 4 == 0) break; }
            }
            gens11.clear();
            for (const Perm& s : stab) {
                std::vector<uint16_t> img(11);
                for (size_t i = 1; i < 12; ++i) img[i - 1] = uint16_t(s[i] - 1);
                gens11.push_back(img);
            }
            std::vector<GroupElement> ge;
            for (const auto& img : gens11) ge.push_back(GroupElement(Perm(img)));
            EnumeratedGroup g = enumerate_group(GenSet(ge, "M11"), 10000);
            if (g.enumerated()) order = g.order();
            require(stab.size() < 40, "M11 stabilizer search did not converge");
        }
        chain.m11 = gens11;
        std::cout << "M11 realized: order 7920 on 11 points\n";
    }
    return chain;
}

// ---------------------------------------------------------------------------
// U3(17): permutation action on the 4914 isotropic points, witness words
// ---------------------------------------------------------------------------

struct U317Data {
    std::vector<std::vector<uint16_t>> gens;
    std::vector<std::vector<uint32_t>> psl27_witness; // two words
    std::vector<uint64_t> sampled_spectrum;
};

U317Data build_u317() {
    const uint64_t q = 17;
    GenSet mat_gens = standard_generators(parse_group_spec("su(3,17)"));
    Modulus f2 = mat_gens.generators.front().mat().modulus();

    // enumerate isotropic projective points of the anti-diagonal Hermitian form
    auto conj = [&](const Residue& x) { return x.pow(q); };
    auto norm_val = [&](const std::array<Residue, 3>& v) {
        // v^dagger J v with J anti-diagonal: conj(x) z + conj(y) y + conj(z) x
        return conj(v[0]) * v[2] + conj(v[1]) * v[1] + conj(v[2]) * v[0];
    };
    std::vector<std::array<Residue, 3>> points;
    std::map<std::array<uint32_t, 3>, uint32_t> index;
    auto add_if_isotropic = [&](std::array<Residue, 3> v) {
        if (!norm_val(v).is_zero()) return;
        index[{v[0].packed(), v[1].packed(), v[2].packed()}] = uint32_t(points.size());
        points.push_back(v);
    };
    uint64_t card = f2.cardinality();
    for (uint64_t y = 0; y < card; ++y)
        for (uint64_t z = 0; z < card; ++z)
            add_if_isotropic({Residue::one(f2), Residue::from_packed(uint32_t(y), f2),
                              Residue::from_packed(uint32_t(z), f2)});
    for (uint64_t z = 0; z < card; ++z)
        add_if_isotropic({Residue::zero(f2), Residue::one(f2),
                          Residue::from_packed(uint32_t(z), f2)});
    add_if_isotropic({Residue::zero(f2), Residue::zero(f2), Residue::one(f2)});
    require(points.size() == 4914, "U3(17): isotropic point count " +
                                       std::to_string(points.size()) + " != 4914");

    auto act = [&](const Mat& g, uint32_t pt) {
        std::array<Residue, 3> w = {Residue::zero(f2), Residue::zero(f2), Residue::zero(f2)};
        for (uint32_t i = 0; i < 3; ++i)
            for (uint32_t j = 0; j < 3; ++j) w[i] = w[i] + g.at(i, j) * points[pt][j];
        // normalize first nonzero coordinate to 1
        for (auto& c : w)
            if (!c.is_zero()) {
                Residue s = c.inverse();
                for (auto& d : w) d = d * s;
                break;
            }
        auto it = index.find({w[0].packed(), w[1].packed(), w[2].packed()});
        require(it != index.end(), "U3(17): action escaped the isotropic points");
        return it->second;
    };

    U317Data data;
    std::vector<Perm> perm_gens;
    for (const GroupElement& g : mat_gens.generators) {
        std::vector<uint16_t> img(points.size());
        for (uint32_t ptd = 0; ptd < points.size(); ++ptd)
            img[ptd] = uint16_t(act(g.mat(), ptd));
        perm_gens.push_back(Perm(img));
        data.gens.push_back(perm_gens.back().images());
    }

    // sampled spectrum via bounded random words (deterministic seed)
    SplitMix64 rng(1729);
    auto random_word = [&](uint32_t len) {
        std::vector<uint32_t> w(len);
        for (auto& i : w) i = uint32_t(rng.below(perm_gens.size()));
        return w;
    };
    auto eval_word = [&](const std::vector<uint32_t>& w) {
        Perm x(uint32_t(points.size()));
        for (uint32_t i : w) x = x * perm_gens[i];
        return x;
    };
    std::set<uint64_t> orders;
    std::vector<std::pair<Perm, std::vector<uint32_t>>> invols, triples;
    for (int i = 0; i < 30000; ++i) {
        std::vector<uint32_t> w = random_word(6 + uint32_t(rng.below(26)));
        Perm x = eval_word(w);
        uint64_t o = x.order();
        orders.insert(o);
        auto power_word = [&](uint64_t e) {
            std::vector<uint32_t> out;
            for (uint64_t k = 0; k < e; ++k) out.insert(out.end(), w.begin(), w.end());
            return out;
        };
        if (o % 2 == 0 && invols.size() < 60) {
            Perm y = x;
            for (uint64_t k = 1; k < o / 2; ++k) y = y * x;
            invols.push_back({y, power_word(o / 2)});
        }
        if (o % 3 == 0 && triples.size() < 60) {
            Perm y = x;
            for (uint64_t k = 1; k < o / 3; ++k) y = y * x;
            triples.push_back({y, power_word(o / 3)});
        }
    }
    data.sampled_spectrum.assign(orders.begin(), orders.end());
    std::cout << "U3(17): sampled spectrum " << vec_to_string(data.sampled_spectrum) << "\n";

    // PSL(2,7) witness: involution x order-3 with product of order 7
    // generating a subgroup of order 168
    for (const auto& [a, wa] : invols) {
        for (const auto& [b, wb] : triples) {
            Perm ab = a * b;
            if (ab.order() != 7) continue;
            EnumeratedGroup h =
                enumerate_group(GenSet({GroupElement(a), GroupElement(b)}, "w"), 200);
            if (h.enumerated() && h.order() == 168) {
                data.psl27_witness = {wa, wb};
                std::cout << "U3(17): PSL(2,7) witness found (words of length "
                          << wa.size() << ", " << wb.size() << ")\n";
                return data;
            }
        }
    }
    require(false, "U3(17): no PSL(2,7) witness found");
    return data;
}

// ---------------------------------------------------------------------------
// record assembly
// ---------------------------------------------------------------------------

struct CuratedEntry {
    std::vector<uint64_t> spectrum;
    std::string psl27 = "unknown";       // marker value
    std::string psl27_prov = "atlas-data";
    uint32_t degree = 0;
};

const std::map<std::string, CuratedEntry>& curated() {
    static const std::map<std::string, CuratedEntry> t = {
        {"L4(3)", {{1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 13, 20}, "no", "formula", 40}},
        {"L4(4)", {{1, 2, 3, 4, 5, 6, 7, 9, 10, 12, 15, 17, 21, 30, 63, 85}, "yes", "atlas-data", 85}},
        {"L4(5)", {{1, 2, 3, 4, 5, 6, 8, 10, 12, 13, 15, 20, 24, 31, 39}, "unknown", "atlas-data", 156}},
        {"L5(2)", {{1, 2, 3, 4, 5, 6, 7, 8, 12, 14, 15, 21, 31}, "yes", "atlas-data", 31}},
        {"L6(2)", {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 14, 15, 21, 28, 30, 31, 63}, "yes", "atlas-data", 63}},
        {"U4(3)", {{1, 2, 3, 4, 5, 6, 7, 8, 9, 12}, "yes", "atlas-data", 112}},
        {"U4(4)", {{1, 2, 3, 4, 5, 6, 10, 13, 15, 17, 30, 51, 65}, "no", "formula", 325}},
        {"U4(5)", {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 15, 20, 21, 24, 40, 63}, "unknown", "atlas-data", 756}},
        {"U5(2)", {{1, 2, 3, 4, 5, 6, 8, 9, 11, 12, 15, 18}, "no", "formula", 165}},
        {"U6(2)", {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 15, 18}, "yes", "atlas-data", 672}},
        {"S6(3)", {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 14, 15, 18, 20, 24, 30}, "unknown", "atlas-data", 364}},
        {"O7(3)", {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 14, 15, 18, 20}, "yes", "atlas-data", 351}},
        {"O8+(2)", {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15}, "yes", "atlas-data", 120}},
        {"O8-(2)", {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 17, 21}, "yes", "atlas-data", 119}},
        {"G2(3)", {{1, 2, 3, 4, 6, 7, 8, 9, 12, 13}, "yes", "atlas-data", 351}},
        {"G2(4)", {{1, 2, 3, 4, 5, 6, 7, 8, 10, 12, 13, 15, 21}, "yes", "atlas-data", 416}},
        {"G2(5)", {{1, 2, 3, 4, 5, 6, 7, 8, 10, 12, 15, 20, 21, 24, 25, 30, 31}, "unknown", "atlas-data", 3906}},
        {"3D4(2)", {{1, 2, 3, 4, 6, 7, 8, 9, 12, 13, 14, 18, 21, 28}, "yes", "atlas-data", 819}},
        {"2F4(2)'", {{1, 2, 3, 4, 5, 6, 8, 10, 12, 13, 16}, "no", "formula", 1600}},
        {"M23", {{1, 2, 3, 4, 5, 6, 7, 8, 11, 14, 15, 23}, "yes", "atlas-data", 23}},
        {"M24", {{1, 2, 3, 4, 5, 6, 7, 8, 10, 11, 12, 14, 15, 21, 23}, "yes", "atlas-data", 24}},
        {"J1", {{1, 2, 3, 5, 6, 7, 10, 11, 15, 19}, "no", "atlas-data", 266}},
        {"J2", {{1, 2, 3, 4, 5, 6, 7, 8, 10, 12, 15}, "yes", "atlas-data", 100}},
        {"J3", {{1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 15, 17, 19}, "no", "formula", 6156}},
        {"HS", {{1, 2, 3, 4, 5, 6, 7, 8, 10, 11, 12, 15, 20}, "yes", "atlas-data", 100}},
        {"McL", {{1, 2, 3, 4, 5, 6, 7, 8, 9, 11, 12, 14, 15, 30}, "yes", "atlas-data", 275}},
        {"He", {{1, 2, 3, 4, 5, 6, 7, 8, 10, 12, 14, 15, 17, 21, 28}, "yes", "atlas-data", 2058}},
    };
    return t;
}

// Dickson: PSL(2, p^r) contains PSL(2,7) iff p = 7; contains S5 = PGL(2,5)
// iff q is an even power of 5.
std::string l2_psl27(uint64_t q) { return factor_prime_power(q).p == 7 ? "yes" : "no"; }
std::string l2_s5(uint64_t q) {
    PrimePower pp = factor_prime_power(q);
    return (pp.p == 5 && pp.k % 2 == 0) ? "yes" : "no";
}

uint32_t min_degree(const FamilySpec& s) {
    switch (s.family) {
        case Family::Alt: return s.n;
        case Family::PSL:
            if (s.n == 2) return s.q == 7 ? 7 : (s.q == 11 ? 11 : uint32_t(s.q + 1));
            return uint32_t((BigUint::pow(s.q, s.n) - BigUint(1)).divided_by(uint32_t(s.q - 1)).to_u64());
        case Family::PSU:
            if (s.n == 3) return s.q == 5 ? 50 : uint32_t(s.q * s.q * s.q + 1);
            if (s.n == 4) return uint32_t((s.q + 1) * (s.q * s.q * s.q + 1));
            if (s.n == 5 && s.q == 2) return 165;
            if (s.n == 6 && s.q == 2) return 672;
            return 0;
        case Family::PSp:
            if (s.n == 2) return uint32_t((s.q * s.q * s.q * s.q - 1) / (s.q - 1));
            if (s.n == 3 && s.q == 2) return 28;
            if (s.n == 3 && s.q == 3) return 364;
            return 0;
        case Family::POmegaOdd: return (s.n == 3 && s.q == 3) ? 351 : 0;
        case Family::POmegaPlus: return (s.n == 4 && s.q == 2) ? 120 : 0;
        case Family::POmegaMinus: return (s.n == 4 && s.q == 2) ? 119 : 0;
        case Family::TwB2: return uint32_t(s.q * s.q + 1);
        case Family::TwG2: return uint32_t(s.q * s.q * s.q + 1);
        default: break;
    }
    auto it = curated().find(canonical_name(s));
    return it == curated().end() ? 0 : it->second.degree;
}

SimpleGroupRecord base_record(const FamilySpec& s) {
    SimpleGroupRecord r;
    r.spec = s;
    r.name = canonical_name(s);
    r.order = classical_order(s);
    if (s.family == Family::Alt && s.n == 5) r.aliases = {"L2(4)", "L2(5)"};
    if (s.family == Family::Alt && s.n == 6) r.aliases = {"L2(9)"};
    if (s.family == Family::Alt && s.n == 8) r.aliases = {"L4(2)"};
    if (s.family == Family::PSL && s.n == 2 && s.q == 7) r.aliases = {"L3(2)"};
    if (s.family == Family::PSU && s.n == 4 && s.q == 2) r.aliases = {"S4(3)"};
    r.provenance["order"] = "formula";
    uint32_t deg = min_degree(s);
    if (deg) {
        r.min_transitive_degree = deg;
        r.provenance["min_transitive_degree"] =
            (curated().count(r.name) || s.family == Family::Sporadic) ? "atlas-data" : "formula";
    }
    return r;
}

} // namespace

int main(int argc, char** argv) {
    std::string out_path = argc > 1 ? argv[1] : "data/catalog.json";
    const BigUint g4_bound = BigUint::from_string("47377612800");

    std::cout << "== Mathieu chain ==\n";
    MathieuChain chain = build_mathieu_chain();

    std::cout << "== U3(17) ==\n";
    U317Data u317 = build_u317();

    std::cout << "== assembling records ==\n";
    std::vector<SimpleGroupRecord> records;
    std::vector<FamilySpec> specs = enumerate_simple_specs(g4_bound);

    // marker search on an enumerable group; `expect` is "yes", "no" or
    // "unknown" (no prior claim). A disagreement with a prior claim is fatal.
    auto computed_marker = [&](EnumeratedGroup& g, TargetSpec t, const std::string& expect,
                               const std::string& what) {
        SearchVerdict v = find_subgroup_by_type(g, t).verdict;
        require(v != SearchVerdict::Indeterminate, what + ": search indeterminate");
        std::string found = (v == SearchVerdict::Found) ? "yes" : "no";
        if (expect != "unknown")
            require(found == expect, what + ": search disagrees with prior claim");
        return found;
    };

    for (const FamilySpec& s : specs) {
        SimpleGroupRecord r = base_record(s);
        const std::string& name = r.name;

        // --- spectra -----------------------------------------------------
        if (name == "U3(17)") {
            r.spectrum = u317.sampled_spectrum;
            r.provenance["spectrum"] = "sampled";
            PermRep rep;
            rep.degree = 4914;
            rep.gens = u317.gens;
            rep.witnesses["contains_psl27"] = u317.psl27_witness;
            r.generators = rep;
            r.markers.psl27 = "yes";
            r.provenance["contains_psl27"] = "computed";
        } else if (name == "M11" || name == "M12" || name == "M22" || name == "M23" ||
                   name == "M24") {
            const std::vector<std::vector<uint16_t>>& gens =
                name == "M11"   ? chain.m11
                : name == "M12" ? chain.m12
                : name == "M22" ? chain.m22
                : name == "M23" ? chain.m23
                                : chain.m24;
            PermRep rep;
            rep.degree = uint32_t(gens.front().size());
            rep.gens = gens;
            r.generators = rep;
            if (name == "M23" || name == "M24") {
                r.spectrum = curated().at(name).spectrum;
                r.provenance["spectrum"] = "atlas-data";
                r.markers.psl27 = curated().at(name).psl27;
                r.provenance["contains_psl27"] = curated().at(name).psl27_prov;
            } else {
                std::vector<GroupElement> ge;
                for (const auto& img : gens) ge.push_back(GroupElement(Perm(img)));
                EnumeratedGroup g = enumerate_group(GenSet(ge, name));
                require(BigUint(g.order()) == r.order, name + ": order mismatch");
                r.spectrum = order_spectrum(g).orders;
                r.provenance["spectrum"] = "computed";
                std::string has_psl27 = (name == "M22") ? "yes" : "no";
                r.markers.psl27 =
                    computed_marker(g, target_psl27(), has_psl27, name + " psl27");
                r.provenance["contains_psl27"] = "computed";
            }
        } else if (name == "S6(2)") {
            EnumeratedGroup g =
                enumerate_group(standard_generators(parse_group_spec("sp(6,2)")));
            require(BigUint(g.order()) == r.order, "S6(2): order mismatch");
            r.spectrum = order_spectrum(g).orders;
            r.provenance["spectrum"] = "computed";
            r.markers.psl27 = computed_marker(g, target_psl27(), "yes", "S6(2) psl27");
            r.provenance["contains_psl27"] = "computed";
            std::cout << "S6(2) spectrum " << vec_to_string(r.spectrum) << "\n";
        } else if (s.family == Family::Alt) {
            r.spectrum = spectrum_alt(s.n);
            r.provenance["spectrum"] = "formula";
        } else if (s.family == Family::PSL && s.n == 2) {
            r.spectrum = spectrum_psl2(s.q);
            r.provenance["spectrum"] = "formula";
        } else if (s.family == Family::PSL && s.n == 3) {
            r.spectrum = spectrum_psl3(s.q);
            r.provenance["spectrum"] = "formula";
        } else if (s.family == Family::PSU && s.n == 3) {
            r.spectrum = spectrum_psu3(s.q);
            r.provenance["spectrum"] = "formula";
        } else if (s.family == Family::PSU && s.n == 4 && s.q == 2) {
            r.spectrum = spectrum_psp4(3); // U4(2) = S4(3)
            r.provenance["spectrum"] = "formula";
        } else if (s.family == Family::PSp && s.n == 2) {
            r.spectrum = spectrum_psp4(s.q);
            r.provenance["spectrum"] = "formula";
        } else if (s.family == Family::TwB2) {
            r.spectrum = spectrum_suzuki(s.q);
            r.provenance["spectrum"] = "formula";
        } else if (s.family == Family::TwG2) {
            r.spectrum = spectrum_ree(s.q);
            r.provenance["spectrum"] = "formula";
        } else if (curated().count(name)) {
            r.spectrum = curated().at(name).spectrum;
            r.provenance["spectrum"] = "atlas-data";
        } else {
            require(false, "no spectrum source for " + name);
        }

        // --- markers -------------------------------------------------------
        if (r.markers.psl27 == "unknown") {
            if (!r.order.divisible_by(168)) {
                r.markers.psl27 = "no";
                r.provenance["contains_psl27"] = "formula"; // Lagrange
            } else if (s.family == Family::PSL && s.n == 2) {
                r.markers.psl27 = l2_psl27(s.q);
                r.provenance["contains_psl27"] = "formula"; // Dickson
            } else if (s.family == Family::Alt) {
                r.markers.psl27 = "yes"; // n >= 7 here since 168 | n!/2
                r.provenance["contains_psl27"] =
                    s.n <= 9 ? "computed" : "atlas-data"; // small ones re-searched below
            } else if (s.family == Family::PSL && s.n == 3 &&
                       (s.q == 4 || s.q == 8 || s.q == 16)) {
                r.markers.psl27 = "yes"; // subfield L3(2)
                r.provenance["contains_psl27"] = "atlas-data";
            } else if (s.family == Family::PSL && s.n == 3 && s.q == 7) {
                r.markers.psl27 = "yes"; // Omega3(7) = L2(7)
                r.provenance["contains_psl27"] = "atlas-data";
            } else if (s.family == Family::PSU && s.n == 3 &&
                       (s.q == 7 || s.q % 7 == 3 || s.q % 7 == 5 || s.q % 7 == 6) &&
                       factor_prime_power(s.q).k == 1 && s.q % 2 == 1) {
                r.markers.psl27 = "yes"; // 3-dim unitary representation
                r.provenance["contains_psl27"] = "atlas-data";
            } else if (s.family == Family::PSp && s.n == 2 && s.q == 7) {
                r.markers.psl27 = "yes"; // symmetric-cube embedding
                r.provenance["contains_psl27"] = "atlas-data";
            } else if (curated().count(name)) {
                r.markers.psl27 = curated().at(name).psl27;
                r.provenance["contains_psl27"] = curated().at(name).psl27_prov;
            }
        }
        if (s.family == Family::PSL && s.n == 2) {
            r.markers.s5 = l2_s5(s.q);
            r.provenance["contains_s5"] = "formula";
        }

        records.push_back(std::move(r));
    }

    // re-search the computable yes/no markers on the g=3 window candidates
    std::cout << "== marker searches ==\n";
    for (SimpleGroupRecord& r : records) {
        bool in_g3_window = r.order < BigUint(1451520);
        if (!in_g3_window || !r.order.divisible_by(168)) continue;
        std::optional<GenSet> gens = record_genset(r);
        if (!gens || r.name == "J1" || r.name == "J2") continue; // not constructible
        if (r.provenance["contains_psl27"] == "formula" && r.markers.psl27 == "no")
            continue; // Dickson cases; skip the expensive confirmation
        EnumeratedGroup g = enumerate_group(*gens);
        require(g.enumerated() && BigUint(g.order()) == r.order,
                r.name + ": enumeration failed during marker search");
        r.markers.psl27 =
            computed_marker(g, target_psl27(), r.markers.psl27, r.name + " psl27");
        r.provenance["contains_psl27"] = "computed";
        if (r.name == "U3(3)") {
            // decided by the exhaustive search, no prior claim
            r.markers.q8 = computed_marker(g, target_q8(), "unknown", "U3(3) q8");
            r.provenance["contains_q8"] = "computed";
            std::cout << "U3(3): contains_q8 = " << r.markers.q8 << " (searched)\n";
        }
        std::cout << r.name << ": contains_psl27 = " << r.markers.psl27 << " (searched)\n";
    }

    // cross-checks against ATLAS constants
    auto spectrum_of = [&](const std::string& n) {
        for (const auto& r : records)
            if (r.name == n) return r.spectrum;
        require(false, "missing record " + n);
        return std::vector<uint64_t>{};
    };
    require(spectrum_of("M11") == std::vector<uint64_t>{1, 2, 3, 4, 5, 6, 8, 11},
            "M11 spectrum mismatch vs ATLAS");
    require(spectrum_of("M12") == std::vector<uint64_t>{1, 2, 3, 4, 5, 6, 8, 10, 11},
            "M12 spectrum mismatch vs ATLAS");
    require(spectrum_of("M22") == std::vector<uint64_t>{1, 2, 3, 4, 5, 6, 7, 8, 11},
            "M22 spectrum mismatch vs ATLAS");
    require(spectrum_of("S6(2)") ==
                std::vector<uint64_t>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15},
            "S6(2) spectrum mismatch vs ATLAS");

    // every marker the g3 replay relies on
    std::map<std::string, std::string> psl27;
    for (const auto& r : records) psl27[r.name] = r.markers.psl27;
    std::set<std::string> g3_candidates;
    for (const auto& r : records)
        if (r.order < BigUint(1451520) && r.markers.psl27 == "yes")
            g3_candidates.insert(r.name);
    std::set<std::string> expected = {"L2(7)", "A7", "U3(3)", "A8",  "L3(4)",
                                      "L2(49)", "U3(5)", "A9", "M22", "J2"};
    require(g3_candidates == expected, "g3 candidate set mismatch");
    std::cout << "g3 candidate set verified: 10 groups\n";

    save_catalog(records, out_path);
    std::cout << "wrote " << records.size() << " records to " << out_path << "\n";
    return 0;
}
