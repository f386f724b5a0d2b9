#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mfq/classical.hpp"
#include "mfq/families.hpp"
#include "mfq/group.hpp"
#include "mfq/subgroups.hpp"

namespace mfq {

// ---------------------------------------------------------------------------
// canonical naming
// ---------------------------------------------------------------------------

inline std::string family_token(Family f) {
    switch (f) {
        case Family::Alt: return "A";
        case Family::PSL: return "L";
        case Family::PSU: return "U";
        case Family::PSp: return "S";
        case Family::POmegaOdd: return "O";
        case Family::POmegaPlus: return "O+";
        case Family::POmegaMinus: return "O-";
        case Family::G2: return "G2";
        case Family::F4: return "F4";
        case Family::E6: return "E6";
        case Family::E7: return "E7";
        case Family::E8: return "E8";
        case Family::TwE6: return "2E6";
        case Family::ThD4: return "3D4";
        case Family::TwB2: return "2B2";
        case Family::TwG2: return "2G2";
        case Family::TwF4: return "2F4";
        case Family::Tits: return "2F4'";
        case Family::Sporadic: return "sporadic";
    }
    return "?";
}

inline Family family_from_token(const std::string& t) {
    static const std::map<std::string, Family> m = {
        {"A", Family::Alt},          {"L", Family::PSL},     {"U", Family::PSU},
        {"S", Family::PSp},          {"O", Family::POmegaOdd},
        {"O+", Family::POmegaPlus},  {"O-", Family::POmegaMinus},
        {"G2", Family::G2},          {"F4", Family::F4},     {"E6", Family::E6},
        {"E7", Family::E7},          {"E8", Family::E8},     {"2E6", Family::TwE6},
        {"3D4", Family::ThD4},       {"2B2", Family::TwB2},  {"2G2", Family::TwG2},
        {"2F4", Family::TwF4},       {"2F4'", Family::Tits}, {"sporadic", Family::Sporadic}};
    auto it = m.find(t);
    if (it == m.end()) throw load_error("unknown family token '" + t + "'");
    return it->second;
}

// ATLAS-style display name ("S6(2)" is PSp(6,2), "O7(3)" is Omega(7,3), ...).
inline std::string canonical_name(const FamilySpec& s) {
    auto nq = [&](const std::string& head, uint32_t dim) {
        return head + std::to_string(dim) + "(" + std::to_string(s.q) + ")";
    };
    switch (s.family) {
        case Family::Alt: return "A" + std::to_string(s.n);
        case Family::PSL: return nq("L", s.n);
        case Family::PSU: return nq("U", s.n);
        case Family::PSp: return nq("S", 2 * s.n);
        case Family::POmegaOdd: return nq("O", 2 * s.n + 1);
        case Family::POmegaPlus:
            return "O" + std::to_string(2 * s.n) + "+(" + std::to_string(s.q) + ")";
        case Family::POmegaMinus:
            return "O" + std::to_string(2 * s.n) + "-(" + std::to_string(s.q) + ")";
        case Family::G2:
        case Family::F4:
        case Family::E6:
        case Family::E7:
        case Family::E8:
        case Family::TwE6:
        case Family::ThD4:
        case Family::TwF4:
            return family_token(s.family) + "(" + std::to_string(s.q) + ")";
        case Family::TwB2: return "Sz(" + std::to_string(s.q) + ")";
        case Family::TwG2: return "2G2(" + std::to_string(s.q) + ")";
        case Family::Tits: return "2F4(2)'";
        case Family::Sporadic: return s.sporadic_name;
    }
    return "?";
}

// Exceptional isomorphisms among the scanned families: parameter tuples
// that duplicate a canonical record elsewhere.
inline std::optional<std::string> redundant_parameterization(const FamilySpec& s) {
    if (s.family == Family::PSL) {
        if (s.n == 2 && (s.q == 4 || s.q == 5)) return "A5";
        if (s.n == 2 && s.q == 9) return "A6";
        if (s.n == 3 && s.q == 2) return "L2(7)";
        if (s.n == 4 && s.q == 2) return "A8";
    }
    if (s.family == Family::PSp && s.n == 2 && s.q == 3) return "U4(2)";
    return std::nullopt;
}

// Distinct simple groups genuinely sharing an order (Artin's theorem: only
// A8/L3(4) and the B_n/C_n pairs for odd q); anything else is a catalog bug.
inline bool known_order_coincidence(const std::string& a, const std::string& b) {
    auto is_bc_pair = [](const std::string& x, const std::string& y) {
        return x.size() > 1 && y.size() > 1 && x[0] == 'O' && y[0] == 'S' &&
               std::isdigit(static_cast<unsigned char>(x[1]));
    };
    if ((a == "A8" && b == "L3(4)") || (a == "L3(4)" && b == "A8")) return true;
    return is_bc_pair(a, b) || is_bc_pair(b, a);
}

// ---------------------------------------------------------------------------
// CFSG scan below a bound
// ---------------------------------------------------------------------------

inline bool is_prime_power_u64(uint64_t q) {
    if (q < 2) return false;
    try {
        factor_prime_power(q);
        return true;
    } catch (const input_error&) {
        return false;
    }
}

inline uint64_t next_prime_power(uint64_t q) {
    do { ++q; } while (!is_prime_power_u64(q));
    return q;
}

// Every FamilySpec of a nonabelian simple group with order < bound.
inline std::vector<FamilySpec> enumerate_simple_specs(const BigUint& bound) {
    std::vector<FamilySpec> out;
    auto emit = [&](const FamilySpec& s) {
        if (!redundant_parameterization(s)) out.push_back(s);
    };
    auto below = [&](const FamilySpec& s) { return classical_order(s) < bound; };

    for (uint32_t n = 5; below({Family::Alt, n, 0}); ++n) emit({Family::Alt, n, 0});

    // dimension-by-dimension walks over ascending prime powers
    struct Walk {
        Family f;
        uint32_t n;
        uint64_t q_start;
        bool (*admit)(uint32_t n, uint64_t q);
    };
    auto walk_family = [&](Family f, uint32_t n_start, uint64_t (*first_q)(uint32_t),
                           bool (*admit)(uint32_t, uint64_t)) {
        for (uint32_t n = n_start;; ++n) {
            uint64_t q0 = first_q(n);
            bool any_possible = below({f, n, q0});
            for (uint64_t q = q0; below({f, n, q}); q = next_prime_power(q))
                if (admit(n, q)) emit({f, n, q});
            if (!any_possible) break;
            if (n > 16) break;
        }
    };
    walk_family(
        Family::PSL, 2, [](uint32_t n) { return uint64_t(n == 2 ? 4 : 2); },
        [](uint32_t, uint64_t) { return true; });
    walk_family(
        Family::PSU, 3, [](uint32_t n) { return uint64_t(n == 3 ? 3 : 2); },
        [](uint32_t, uint64_t) { return true; });
    walk_family(
        Family::PSp, 2, [](uint32_t) { return uint64_t(2); },
        [](uint32_t n, uint64_t q) { return !(n == 2 && q == 2); }); // S4(2) = Sym(6)
    walk_family(
        Family::POmegaOdd, 3, [](uint32_t) { return uint64_t(3); },
        [](uint32_t, uint64_t q) { return q % 2 == 1; }); // even q duplicates S_{2n}(q)
    walk_family(
        Family::POmegaPlus, 4, [](uint32_t) { return uint64_t(2); },
        [](uint32_t, uint64_t) { return true; });
    walk_family(
        Family::POmegaMinus, 4, [](uint32_t) { return uint64_t(2); },
        [](uint32_t, uint64_t) { return true; });

    for (uint64_t q = 3; below({Family::G2, 0, q}); q = next_prime_power(q))
        emit({Family::G2, 0, q});
    for (Family f : {Family::F4, Family::E6, Family::E7, Family::E8, Family::TwE6,
                     Family::ThD4})
        for (uint64_t q = 2; below({f, 0, q}); q = next_prime_power(q)) emit({f, 0, q});
    for (uint64_t q = 8; below({Family::TwB2, 0, q}); q *= 4) emit({Family::TwB2, 0, q});
    for (uint64_t q = 27; below({Family::TwG2, 0, q}); q *= 9) emit({Family::TwG2, 0, q});
    for (uint64_t q = 8; below({Family::TwF4, 0, q}); q *= 4) emit({Family::TwF4, 0, q});
    if (below({Family::Tits, 0, 0})) emit({Family::Tits, 0, 0});
    for (const auto& [name, ord] : sporadic_orders())
        if (BigUint::from_string(ord) < bound) emit({Family::Sporadic, 0, 0, name});
    return out;
}

// All nonabelian finite simple groups of order < bound, deduplicated under
// the exceptional isomorphisms and sorted by order.
inline std::vector<std::pair<std::string, BigUint>> enumerate_simple_orders(
    const BigUint& bound) {
    if (BigUint::from_string("100000000001") < bound)
        throw unsupported("enumerate_simple_orders: bound above 10^11");
    std::vector<std::pair<std::string, BigUint>> out;
    for (const FamilySpec& s : enumerate_simple_specs(bound))
        out.emplace_back(canonical_name(s), classical_order(s));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (!(a.second == b.second)) return a.second < b.second;
        return a.first < b.first;
    });
    return out;
}

// ---------------------------------------------------------------------------
// records
// ---------------------------------------------------------------------------

struct Markers {
    std::string psl27 = "unknown";
    std::string s5 = "unknown";
    std::string q8 = "unknown";
};

// An embedded faithful permutation representation; witnesses are words in the
// generators (0-based indices), so membership holds by construction.
struct PermRep {
    uint32_t degree = 0;
    std::vector<std::vector<uint16_t>> gens;
    std::map<std::string, std::vector<std::vector<uint32_t>>> witnesses;
};

struct SimpleGroupRecord {
    std::string name;
    std::vector<std::string> aliases;
    FamilySpec spec;
    BigUint order;
    std::vector<uint64_t> spectrum;
    Markers markers;
    uint32_t min_transitive_degree = 0; // 0 = unknown
    std::optional<PermRep> generators;
    std::map<std::string, std::string> provenance;

    bool spectrum_exact() const {
        auto it = provenance.find("spectrum");
        return it != provenance.end() && it->second != "sampled";
    }
    std::string provenance_of(const std::string& field) const {
        auto it = provenance.find(field);
        return it == provenance.end() ? "unknown" : it->second;
    }
    bool spectrum_contains(uint64_t k) const {
        return std::binary_search(spectrum.begin(), spectrum.end(), k);
    }
    // Certified absence: an exact spectrum that misses k, or k not dividing
    // the group order at all (Lagrange). A sampled spectrum can prove
    // presence, never absence.
    bool certified_missing(uint64_t k) const {
        if (k != 0 && !order.divisible_by(uint32_t(k))) return true;
        return spectrum_exact() && !spectrum_contains(k);
    }
};

struct Catalog {
    std::vector<SimpleGroupRecord> records; // sorted by (order, name)
    uint64_t content_hash = 0;              // FNV-1a of the file bytes

    const SimpleGroupRecord* find(const std::string& name) const {
        for (const auto& r : records)
            if (r.name == name) return &r;
        return nullptr;
    }
};

// ---------------------------------------------------------------------------
// JSON (schema: one top-level array; orders as decimal strings)
// ---------------------------------------------------------------------------

inline nlohmann::json record_to_json(const SimpleGroupRecord& r) {
    nlohmann::json j;
    j["name"] = r.name;
    j["aliases"] = r.aliases;
    j["family"] = family_token(r.spec.family);
    if (r.spec.family == Family::Sporadic)
        j["params"] = nlohmann::json::array();
    else if (r.spec.family == Family::Alt)
        j["params"] = {r.spec.n};
    else if (r.spec.n)
        j["params"] = {r.spec.n, r.spec.q};
    else
        j["params"] = {r.spec.q};
    j["order"] = r.order.to_string();
    j["spectrum"] = r.spectrum;
    j["markers"] = {{"contains_psl27", r.markers.psl27},
                    {"contains_s5", r.markers.s5},
                    {"contains_q8", r.markers.q8}};
    if (r.min_transitive_degree)
        j["min_transitive_degree"] = r.min_transitive_degree;
    else
        j["min_transitive_degree"] = nullptr;
    if (r.generators) {
        nlohmann::json g;
        g["type"] = "perm";
        g["degree"] = r.generators->degree;
        g["gens"] = r.generators->gens;
        g["witnesses"] = r.generators->witnesses;
        j["generators"] = g;
    } else {
        j["generators"] = nullptr;
    }
    j["provenance"] = r.provenance;
    return j;
}

inline FamilySpec spec_from_json(const std::string& name, const std::string& family,
                                 const nlohmann::json& params) {
    FamilySpec s;
    s.family = family_from_token(family);
    if (s.family == Family::Sporadic) {
        s.sporadic_name = name;
    } else if (s.family == Family::Alt) {
        s.n = params.at(0).get<uint32_t>();
    } else if (params.size() == 2) {
        s.n = params.at(0).get<uint32_t>();
        s.q = params.at(1).get<uint64_t>();
    } else if (params.size() == 1) {
        s.q = params.at(0).get<uint64_t>();
    } else {
        throw load_error(name + ": bad params");
    }
    return s;
}

inline SimpleGroupRecord record_from_json(const nlohmann::json& j) {
    SimpleGroupRecord r;
    try {
        r.name = j.at("name").get<std::string>();
        r.aliases = j.at("aliases").get<std::vector<std::string>>();
        r.spec = spec_from_json(r.name, j.at("family").get<std::string>(), j.at("params"));
        r.order = BigUint::from_string(j.at("order").get<std::string>());
        r.spectrum = j.at("spectrum").get<std::vector<uint64_t>>();
        const auto& m = j.at("markers");
        r.markers.psl27 = m.at("contains_psl27").get<std::string>();
        r.markers.s5 = m.at("contains_s5").get<std::string>();
        r.markers.q8 = m.at("contains_q8").get<std::string>();
        if (!j.at("min_transitive_degree").is_null())
            r.min_transitive_degree = j.at("min_transitive_degree").get<uint32_t>();
        if (!j.at("generators").is_null()) {
            PermRep rep;
            rep.degree = j.at("generators").at("degree").get<uint32_t>();
            rep.gens = j.at("generators").at("gens").get<std::vector<std::vector<uint16_t>>>();
            if (j.at("generators").contains("witnesses"))
                rep.witnesses =
                    j.at("generators")
                        .at("witnesses")
                        .get<std::map<std::string, std::vector<std::vector<uint32_t>>>>();
            r.generators = std::move(rep);
        }
        r.provenance = j.at("provenance").get<std::map<std::string, std::string>>();
    } catch (const nlohmann::json::exception& e) {
        throw load_error("record '" + (j.contains("name") ? j["name"].dump() : "?") +
                         "': " + e.what());
    }
    for (const std::string& field : {"order", "spectrum"})
        if (!r.provenance.count(field))
            throw load_error(r.name + ": missing provenance for " + field);
    static const std::set<std::string> tags = {"computed", "formula", "atlas-data", "sampled"};
    for (const auto& [field, tag] : r.provenance)
        if (!tags.count(tag))
            throw load_error(r.name + ": unknown provenance tag '" + tag + "' on " + field);
    return r;
}

// Schema checks plus cross-validation: orders must match the
// family formulas, spectra are plausible, names unique.
inline Catalog load_catalog(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw load_error("cannot open catalog file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    std::string bytes = buf.str();

    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }

    nlohmann::json j;
    try {
        j = nlohmann::json::parse(bytes);
    } catch (const nlohmann::json::exception& e) {
        throw load_error(std::string("catalog is not valid JSON: ") + e.what());
    }
    if (!j.is_array()) throw load_error("catalog: top level must be an array");

    Catalog cat;
    cat.content_hash = h;
    std::set<std::string> names;
    for (const auto& item : j) {
        SimpleGroupRecord r = record_from_json(item);
        if (!names.insert(r.name).second) throw load_error("duplicate record name " + r.name);
        if (!(classical_order(r.spec) == r.order))
            throw load_error(r.name + ": order does not match the family formula (order)");
        if (r.spectrum.empty() || r.spectrum.front() != 1)
            throw load_error(r.name + ": spectrum must contain 1 (spectrum)");
        if (!std::is_sorted(r.spectrum.begin(), r.spectrum.end()))
            throw load_error(r.name + ": spectrum must be sorted (spectrum)");
        for (uint64_t k : r.spectrum)
            if (k == 0 || !r.order.divisible_by(uint32_t(std::min<uint64_t>(k, UINT32_MAX))))
                throw load_error(r.name + ": spectrum entry " + std::to_string(k) +
                                 " does not divide the group order (spectrum)");
        if (r.generators)
            for (const auto& img : r.generators->gens)
                if (img.size() != r.generators->degree)
                    throw load_error(r.name + ": generator degree mismatch (generators)");
        cat.records.push_back(std::move(r));
    }
    std::sort(cat.records.begin(), cat.records.end(),
              [](const SimpleGroupRecord& a, const SimpleGroupRecord& b) {
                  if (!(a.order == b.order)) return a.order < b.order;
                  return a.name < b.name;
              });
    return cat;
}

inline void save_catalog(const std::vector<SimpleGroupRecord>& records,
                         const std::string& path) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : records) j.push_back(record_to_json(r));
    std::ofstream out(path, std::ios::binary);
    if (!out) throw load_error("cannot write catalog file '" + path + "'");
    out << j.dump(1) << "\n";
}

// ---------------------------------------------------------------------------
// realizing records as concrete groups
// ---------------------------------------------------------------------------

inline std::optional<GroupSpec> constructible_spec(const FamilySpec& s) {
    auto field_ok = [](uint64_t q) {
        PrimePower pp = factor_prime_power(q);
        return pp.k <= 2;
    };
    switch (s.family) {
        case Family::Alt:
            return GroupSpec{GroupKind::Alt, s.n, 0};
        case Family::PSL:
            if (field_ok(s.q)) return GroupSpec{GroupKind::PSL, s.n, s.q};
            return std::nullopt;
        case Family::PSU:
            if (s.n == 3 && factor_prime_power(s.q).k == 1)
                return GroupSpec{GroupKind::PSU, 3, s.q};
            return std::nullopt;
        case Family::PSp:
            if (field_ok(s.q)) return GroupSpec{GroupKind::PSp, 2 * s.n, s.q};
            return std::nullopt;
        default:
            return std::nullopt;
    }
}

inline std::optional<GenSet> record_genset(const SimpleGroupRecord& r) {
    if (r.generators) {
        std::vector<GroupElement> gens;
        for (const auto& img : r.generators->gens) gens.push_back(GroupElement(Perm(img)));
        return GenSet(std::move(gens), r.name);
    }
    if (auto gs = constructible_spec(r.spec)) return standard_generators(*gs);
    return std::nullopt;
}

inline GroupElement evaluate_word(const GenSet& gens, const std::vector<uint32_t>& word) {
    GroupElement x = gens.generators.front().identity_like();
    for (uint32_t idx : word) {
        if (idx >= gens.generators.size()) throw load_error("witness word index out of range");
        x = x * gens.generators[idx];
    }
    return x;
}

// Check an embedded witness: the words must realize the defining data of the
// claimed subgroup type.
inline bool verify_witness(const GenSet& gens, const std::string& marker,
                           const std::vector<std::vector<uint32_t>>& words) {
    std::vector<GroupElement> xs;
    for (const auto& w : words) xs.push_back(evaluate_word(gens, w));
    try {
        if (marker == "contains_psl27") {
            if (xs.size() != 2) return false;
            return element_order(xs[0], 3) == 2 && element_order(xs[1], 4) == 3 &&
                   element_order(xs[0] * xs[1], 8) == 7 &&
                   enumerate_group(GenSet(xs), 169).order() == 168;
        }
        if (marker == "contains_s5") {
            if (xs.size() != 2) return false;
            return element_order(xs[0], 3) == 2 && element_order(xs[1], 5) == 4 &&
                   element_order(xs[0] * xs[1], 6) == 5 &&
                   enumerate_group(GenSet(xs), 121).order() == 120;
        }
        if (marker == "contains_q8") {
            if (xs.size() != 2) return false;
            return element_order(xs[0], 5) == 4 && element_order(xs[1], 5) == 4 &&
                   xs[0] * xs[0] == xs[1] * xs[1] &&
                   xs[1] * xs[0] * xs[1].inverse() == xs[0].inverse() &&
                   enumerate_group(GenSet(xs), 9).order() == 8;
        }
    } catch (const cap_exceeded&) {
        return false;
    }
    return false;
}

// ---------------------------------------------------------------------------
// record verification
// ---------------------------------------------------------------------------

struct VerificationReport {
    std::string name;
    char tier = 'c'; // a: full recompute, b: sampled, c: formula-only
    bool order_ok = false;
    bool spectrum_ok = false;     // tier a: equality; tier b: sample subset
    bool markers_ok = true;       // witnesses / searches where applicable
    std::vector<std::string> notes;

    bool passed() const { return order_ok && spectrum_ok && markers_ok; }
};

// Tiered verification. (a) enumerable: recompute order and exact spectrum,
// check yes-markers by witness or search; (b) embedded generators but too
// large: sampled orders must land inside the stored spectrum; (c) otherwise:
// order formula only, spectrum trusted external.
inline VerificationReport verify_record(const SimpleGroupRecord& r,
                                        uint64_t cap = kDefaultEnumerationCap,
                                        uint64_t sample_budget = 2000, uint64_t seed = 1) {
    VerificationReport rep;
    rep.name = r.name;
    rep.order_ok = (classical_order(r.spec) == r.order);
    if (!rep.order_ok) rep.notes.push_back("order mismatch vs formula");

    std::optional<GenSet> gens = record_genset(r);
    bool small_enough = r.order < BigUint(cap);

    if (gens && small_enough) {
        rep.tier = 'a';
        EnumeratedGroup g = enumerate_group(*gens, cap);
        if (!g.enumerated()) {
            rep.tier = 'b';
        } else {
            if (BigUint(g.order()) != r.order) {
                rep.order_ok = false;
                rep.notes.push_back("enumerated order " + std::to_string(g.order()) +
                                    " != stored order");
            }
            Spectrum sp = order_spectrum(g);
            rep.spectrum_ok = (sp.orders == r.spectrum);
            if (!rep.spectrum_ok) rep.notes.push_back("exact spectrum differs");
            // markers: witnesses first, full search as fallback for yes/no
            auto check_marker = [&](const std::string& key, const std::string& value,
                                    TargetSpec target) {
                if (value == "unknown") return;
                if (r.generators && r.generators->witnesses.count(key)) {
                    if (value == "yes" &&
                        verify_witness(*gens, key, r.generators->witnesses.at(key)))
                        return;
                }
                SearchVerdict v = find_subgroup_by_type(g, target).verdict;
                bool want_found = (value == "yes");
                if ((v == SearchVerdict::Found) != want_found) {
                    rep.markers_ok = false;
                    rep.notes.push_back(key + " marker contradicted by search");
                }
            };
            check_marker("contains_psl27", r.markers.psl27, target_psl27());
            check_marker("contains_s5", r.markers.s5, target_s5());
            check_marker("contains_q8", r.markers.q8, target_q8());
            return rep;
        }
    }

    if (gens && r.generators) {
        rep.tier = 'b';
        RandomWalk walk(*gens, seed);
        rep.spectrum_ok = true;
        for (uint64_t i = 0; i < sample_budget; ++i) {
            uint64_t o = element_order(walk.next(), 1'000'000);
            if (!r.spectrum_contains(o)) {
                rep.spectrum_ok = false;
                rep.notes.push_back("sampled order " + std::to_string(o) +
                                    " outside stored spectrum");
                break;
            }
        }
        for (const auto& [key, words] : r.generators->witnesses)
            if (!verify_witness(*gens, key, words)) {
                rep.markers_ok = false;
                rep.notes.push_back(key + " witness failed");
            }
        return rep;
    }

    rep.tier = 'c';
    rep.spectrum_ok = true; // trusted external at this tier
    rep.notes.push_back("spectrum trusted external (" + r.provenance_of("spectrum") + ")");
    return rep;
}

} // namespace mfq
