#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "mfq/catalog.hpp"
#include "mfq/epimorphism.hpp"
#include "mfq/report.hpp"

namespace mfq {

// ---------------------------------------------------------------------------
// injected-subgroup ledger
// ---------------------------------------------------------------------------

// One finite subgroup of the mapping class group the proof injects, with the
// preimage signatures it relies on. Everything here is recomputed at report
// time; a mismatch fails the pipeline by name.
struct InjectedSubgroupEntry {
    uint32_t genus;
    std::string subgroup;       // group spec text, e.g. "z(8)"
    std::string signature;      // defining signature, e.g. "(4,8,8)"
    std::vector<std::pair<uint64_t, std::string>> preimages; // subgroup order -> signature
    std::string justification;  // which normal-generation fact carries it
};

inline std::vector<InjectedSubgroupEntry> injected_subgroup_ledger(uint32_t genus) {
    if (genus == 3)
        return {
            {3, "psl(2,7)", "(2,3,7)",
             {{2, "(1;2^4)"}, {3, "(1;3,3)"}, {7, "(0;7,7,7)"}},
             "simple image; the (1;2^4)-involution inside normally generates"},
            {3, "z(8)", "(4,8,8)", {{2, "(1;2^4)"}},
             "the (1;2^4)-involution below it normally generates"},
            {3, "z(9)", "(3,9,9)", {{3, "(0;3^5)"}},
             "order-3 piece of type (0;3^5); carried by the binary-tetrahedral argument"},
            {3, "sl(2,3)", "(3,3,6)", {{3, "(0;3^5)"}},
             "ties the (0;3^5) order-3 piece to the central involution of type (1;2^4)"},
            {3, "z(12)", "(3,4,12)", {{2, "(1;2^4)"}, {3, "(0;3^5)"}},
             "both pieces inject: (1;2^4)-involution or the (0;3^5) route"},
            {3, "q8", "(1;2)", {{2, "(1;2^4)"}},
             "central involution of type (1;2^4) normally generates; every nontrivial "
             "normal subgroup of Q8 meets the center"},
            {3, "z(14)", "(2,7,14)", {{2, "(0;2^8)"}},
             "maximal-order cyclic subgroup; its involution is the hyperelliptic one"},
        };
    if (genus == 4)
        return {
            {4, "a(5)", "(2,5,5)", {{2, "(2;2,2)"}, {5, "(0;5^4)"}},
             "the (2;2,2)-involution normally generates at even genus"},
            {4, "s(5)", "(2,4,5)", {},
             "contains the injected A5; forces S5 inside every simple quotient"},
            {4, "z(10)", "(5,10,10)", {{2, "(2;2,2)"}, {5, "(0;5^4)"}},
             "both pieces of types (2;2,2) and (0;5^4) inject"},
            {4, "z(16)", "(2,16,16)", {{2, "(0;2^10)"}},
             "its involution is the hyperelliptic one; carried by the maximal-cyclic facts"},
            {4, "z(18)", "(2,9,18)", {},
             "maximal-order cyclic subgroup of order 4g+2 = 18"},
        };
    throw input_error("injected_subgroup_ledger: genus must be 3 or 4");
}

// Re-verify one ledger entry: find a surface-kernel epimorphism, place the
// action in the right genus, recompute every stated preimage signature.
inline std::vector<std::string> verify_ledger_entry(const InjectedSubgroupEntry& e) {
    std::vector<std::string> lines;
    GroupSpec gs = parse_group_spec(e.subgroup);
    EnumeratedGroup g = enumerate_group(standard_generators(gs));
    Signature sig = parse_signature(e.signature);

    uint32_t placed = kernel_genus(sig, g.order());
    if (placed != e.genus)
        throw internal_inconsistency("ledger entry " + e.subgroup + " " + e.signature +
                                     ": kernel genus " + std::to_string(placed) + " != " +
                                     std::to_string(e.genus));
    lines.push_back(e.subgroup + " of type " + e.signature + " acts in genus " +
                    std::to_string(placed));

    auto epis = find_epimorphisms(sig, g, true, true);
    if (epis.empty())
        throw internal_inconsistency("ledger entry " + e.subgroup + " " + e.signature +
                                     ": no surface-kernel epimorphism found");
    const Epimorphism& epi = epis.front();

    for (const auto& [sub_order, expect] : e.preimages) {
        GroupElement x = g.identity();
        bool found = false;
        for (const GroupElement& cand : g.elements())
            if (element_order(cand) == sub_order) { x = cand; found = true; break; }
        if (!found)
            throw internal_inconsistency("ledger entry " + e.subgroup +
                                         ": no subgroup of order " + std::to_string(sub_order));
        Signature pre = preimage_signature(epi, GenSet({x}));
        Signature want = parse_signature(expect);
        if (!(pre == want))
            throw internal_inconsistency("ledger entry " + e.subgroup + " " + e.signature +
                                         "/Z" + std::to_string(sub_order) + ": recomputed " +
                                         pre.to_string() + " != expected " + expect);
        lines.push_back("  preimage of Z" + std::to_string(sub_order) + " has signature " +
                        pre.to_string());
    }
    return lines;
}

// ---------------------------------------------------------------------------
// Wiman-bound order filter
// ---------------------------------------------------------------------------

// not-excluded iff the record is a PSp_{2g} group or has an element of order
// 4g+2. With `certified` the absence must be provable (exact spectrum or
// Lagrange); a sampled spectrum then blocks the exclusion.
inline ExclusionVerdict wiman_order_filter(uint32_t genus, const SimpleGroupRecord& r,
                                        bool certified = false) {
    ExclusionVerdict v;
    v.name = r.name;
    uint64_t want = 4 * genus + 2;
    if (r.spec.family == Family::PSp && r.spec.n == genus) {
        v.rule = "not-excluded";
        v.evidence.push_back("symplectic family PSp_" + std::to_string(2 * genus));
        return v;
    }
    bool has = r.spectrum_contains(want);
    bool excludable = certified ? r.certified_missing(want) : !has;
    if (excludable) {
        v.rule = "missing-order";
        v.missing_orders = {want};
        v.evidence.push_back("spectrum[" + r.provenance_of("spectrum") + "]");
    } else {
        v.rule = "not-excluded";
        v.evidence.push_back(has ? "order " + std::to_string(want) + " present in spectrum[" +
                                       r.provenance_of("spectrum") + "]"
                                 : "absence of order " + std::to_string(want) +
                                       " not certifiable from a sampled spectrum");
    }
    return v;
}

// ---------------------------------------------------------------------------
// replay pipelines
// ---------------------------------------------------------------------------

namespace detail {

inline std::string order_fact(const SimpleGroupRecord& r) {
    return r.name + " (order " + r.order.to_string() + ")";
}

inline void note_trusted(const SimpleGroupRecord& r, const std::string& field,
                         std::set<std::string>& out) {
    if (r.provenance_of(field) == "atlas-data")
        out.insert(r.name + ": " + field + " from reference tables");
}

} // namespace detail

// Genus-3 minimality replay: candidate list below |PSp6(2)|, exclusion by the
// injected orders {8,9,12}, full tier-(a) re-verification of every
// constructible candidate.
inline Report replay_g3(const Catalog& cat, bool verify_candidates = true) {
    Report rep;
    rep.pipeline = "replay-g3";
    const BigUint bound = classical_order({Family::PSp, 3, 2});
    rep.inputs["bound"] = bound.to_string() + " = |PSp6(Z2)|";
    rep.inputs["catalog_hash"] = std::to_string(cat.content_hash);
    rep.inputs["reading"] = "the injected-order criterion excludes a candidate when its "
                            "spectrum misses at least one of 8, 9, 12";
    rep.inputs["seeds"] = "none consumed at replay time; sampled catalog data carries its "
                          "generation seed";
    rep.assumptions = standard_assumptions(3);

    // ledger precondition
    for (const auto& entry : injected_subgroup_ledger(3))
        for (const std::string& line : verify_ledger_entry(entry)) rep.checks.push_back(line);

    // count the defining surjections up to inner conjugacy; the sharper
    // uniqueness claim (up to the full projective conjugation) needs the
    // outer action and is recorded, not adjudicated
    {
        EnumeratedGroup psl27 =
            enumerate_group(standard_generators(parse_group_spec("psl(2,7)")));
        auto epis = find_epimorphisms(Signature::triangle(2, 3, 7), psl27, true, true);
        rep.checks.push_back(
            "(2,3,7) -> PSL(2,7): " + std::to_string(epis.size()) +
            " surface-kernel surjections with the involution image fixed to a class "
            "representative; uniqueness up to outer conjugation recorded, not adjudicated");
    }

    // candidate list
    std::vector<const SimpleGroupRecord*> candidates;
    for (const auto& r : cat.records)
        if (r.order < bound && r.markers.psl27 == "yes") candidates.push_back(&r);
    const std::set<std::string> expected = {"L2(7)", "A7",    "U3(3)", "A8",  "L3(4)",
                                            "L2(49)", "U3(5)", "A9",    "M22", "J2"};
    std::set<std::string> got;
    for (const auto* r : candidates) got.insert(r->name);
    if (got != expected) {
        rep.conclusion = "candidate-set mismatch: the simple groups below the bound with a "
                         "PSL(2,7) subgroup are not the expected ten";
        for (const auto* r : candidates) rep.survivors.push_back(r->name);
        rep.exit_code = 1;
        return rep;
    }
    rep.checks.push_back("candidate set below |PSp6(Z2)| with a PSL(2,7) subgroup is "
                         "exactly the expected ten groups");

    std::set<std::string> trusted;
    bool all_excluded = true;
    for (const auto* r : candidates) {
        ExclusionVerdict v;
        v.name = r->name;
        std::vector<uint64_t> missing;
        for (uint64_t k : {8, 9, 12})
            if (!r->spectrum_contains(k)) missing.push_back(k);
        v.evidence.push_back("contains_psl27[" + r->provenance_of("contains_psl27") + "]");
        v.evidence.push_back("spectrum[" + r->provenance_of("spectrum") + "]");
        detail::note_trusted(*r, "spectrum", trusted);
        detail::note_trusted(*r, "contains_psl27", trusted);
        if (missing.empty()) {
            v.rule = "not-excluded";
            rep.survivors.push_back(r->name);
            all_excluded = false;
        } else {
            v.rule = "missing-order";
            v.missing_orders = missing;
        }
        rep.verdicts.push_back(v);

        if (verify_candidates && r->order < BigUint(kDefaultEnumerationCap)) {
            std::optional<GenSet> gens = record_genset(*r);
            if (gens) {
                EnumeratedGroup g = enumerate_group(*gens);
                if (!g.enumerated() || !(BigUint(g.order()) == r->order))
                    throw internal_inconsistency(r->name + ": enumeration order mismatch");
                Spectrum sp = order_spectrum(g);
                if (sp.orders != r->spectrum)
                    throw internal_inconsistency(r->name + ": exact spectrum mismatch");
                SearchVerdict sv = find_subgroup_by_type(g, target_psl27()).verdict;
                if (sv != SearchVerdict::Found)
                    throw internal_inconsistency(r->name + ": PSL(2,7) witness not found");
                rep.checks.push_back(r->name + ": enumerated to " +
                                     std::to_string(g.order()) +
                                     ", exact spectrum and PSL(2,7) subgroup confirmed");
                if (r->name == "U3(3)") {
                    SearchVerdict q8 = find_subgroup_by_type(g, target_q8()).verdict;
                    if (q8 == SearchVerdict::Found)
                        rep.findings.push_back(
                            "U3(3) DOES contain Q8 (exhaustive search witness); the "
                            "alternative exclusion via a missing Q8 subgroup does not "
                            "stand, its exclusion rests on the missing order 9 alone");
                    else
                        rep.checks.push_back(
                            "U3(3): certified absence of Q8 (alternative exclusion)");
                }
            } else {
                trusted.insert(r->name + ": not constructible here, catalog facts used");
            }
        }
    }
    rep.trusted_facts.assign(trusted.begin(), trusted.end());

    if (all_excluded) {
        rep.conclusion =
            "replayed: every nonabelian simple group below |PSp6(Z2)| = 1451520 with a "
            "PSL(2,7) subgroup misses one of the injected orders 8, 9, 12; contingent on "
            "the assumption ledger, the minimal nontrivial finite quotient of the genus-3 "
            "mapping class group is PSp6(Z2)";
        rep.exit_code = 0;
    } else {
        rep.conclusion = "FAILURE: surviving candidate(s) found";
        rep.exit_code = 1;
    }
    return rep;
}

// Genus-4 replay: three-rule exclusion cascade over every simple group below
// |PSp8(2)|.
inline Report replay_g4(const Catalog& cat) {
    Report rep;
    rep.pipeline = "replay-g4";
    const BigUint bound = classical_order({Family::PSp, 4, 2});
    rep.inputs["bound"] = bound.to_string() + " = |PSp8(Z2)|";
    rep.inputs["catalog_hash"] = std::to_string(cat.content_hash);
    rep.inputs["cascade"] = "small-index, then no-S5 on the L2 family, then missing orders "
                            "among {10,16,18}";
    rep.inputs["seeds"] = "none consumed at replay time";
    rep.assumptions = standard_assumptions(4);

    for (const auto& entry : injected_subgroup_ledger(4))
        for (const std::string& line : verify_ledger_entry(entry)) rep.checks.push_back(line);

    // catalog coverage: the scan below the bound must be fully present
    {
        auto want = enumerate_simple_orders(bound);
        std::set<std::string> have;
        for (const auto& r : cat.records) have.insert(r.name);
        for (const auto& [name, ord] : want)
            if (!have.count(name))
                throw internal_inconsistency("catalog is missing " + name +
                                             " below the g=4 bound");
        rep.checks.push_back("catalog covers all " + std::to_string(want.size()) +
                             " simple groups below |PSp8(Z2)| (CFSG scan)");
    }

    std::set<std::string> trusted;
    for (const auto& r : cat.records) {
        if (!(r.order < bound)) continue;
        ExclusionVerdict v;
        v.name = r.name;
        if (r.min_transitive_degree && r.min_transitive_degree <= 20) {
            v.rule = "small-index";
            v.evidence.push_back("min_transitive_degree " +
                                 std::to_string(r.min_transitive_degree) + " <= 20 [" +
                                 r.provenance_of("min_transitive_degree") + "]");
        } else if (r.spec.family == Family::PSL && r.spec.n == 2 && r.markers.s5 == "no") {
            v.rule = "no-S5";
            v.evidence.push_back("L2-family without an S5 = PGL2(5) subgroup [" +
                                 r.provenance_of("contains_s5") + "]");
        } else {
            std::vector<uint64_t> missing;
            for (uint64_t k : {10, 16, 18})
                if (r.certified_missing(k)) missing.push_back(k);
            if (!missing.empty()) {
                v.rule = "missing-order";
                v.missing_orders = missing;
                v.evidence.push_back("spectrum[" + r.provenance_of("spectrum") + "]");
                detail::note_trusted(r, "spectrum", trusted);
            } else {
                v.rule = "not-excluded";
                rep.survivors.push_back(r.name);
            }
        }
        rep.verdicts.push_back(v);
    }
    rep.trusted_facts.assign(trusted.begin(), trusted.end());

    if (rep.survivors.empty()) {
        rep.conclusion =
            "replayed: zero survivors under the three-rule cascade below |PSp8(Z2)| = "
            "47377612800; contingent on the assumption ledger, the minimal nontrivial "
            "finite quotient of the genus-4 mapping class group is PSp8(Z2)";
        rep.exit_code = 0;
    } else {
        rep.conclusion = "FAILURE: survivors under the cascade";
        rep.exit_code = 1;
    }
    return rep;
}

// Frontier scan between |PSp6(2)| and |PSp6(3)|: which groups resist the
// genus-3 toolkit? Exclusions here demand certainty: a sampled spectrum can
// prove presence but never absence.
inline Report frontier_g3(const Catalog& cat) {
    Report rep;
    rep.pipeline = "frontier-g3";
    const BigUint lo = classical_order({Family::PSp, 3, 2});
    const BigUint hi = classical_order({Family::PSp, 3, 3});
    rep.inputs["window"] = "(" + lo.to_string() + ", " + hi.to_string() +
                           ") = (|PSp6(Z2)|, |PSp6(Z3)|)";
    rep.inputs["catalog_hash"] = std::to_string(cat.content_hash);
    rep.inputs["criteria"] = "requires: PSL(2,7) subgroup; orders 8,9,12; order 14; minimal "
                             "transitive degree > 16; exclusions only on certified facts";
    rep.inputs["seeds"] = "none consumed at replay time; sampled catalog data carries its "
                          "generation seed";
    rep.assumptions = standard_assumptions(3);

    std::set<std::string> trusted;
    for (const auto& r : cat.records) {
        if (!(lo < r.order && r.order < hi)) continue;
        if (r.spec.family == Family::PSp && r.spec.n == 3) {
            ExclusionVerdict v;
            v.name = r.name;
            v.rule = "not-excluded";
            v.evidence.push_back("symplectic target family, outside the scan");
            rep.verdicts.push_back(v);
            continue;
        }
        ExclusionVerdict v;
        v.name = r.name;
        if (r.markers.psl27 == "no") {
            v.rule = "no-PSL27";
            v.evidence.push_back("contains_psl27 = no [" +
                                 r.provenance_of("contains_psl27") + "]");
            detail::note_trusted(r, "contains_psl27", trusted);
        } else {
            std::vector<uint64_t> missing;
            for (uint64_t k : {8, 9, 12})
                if (r.certified_missing(k)) missing.push_back(k);
            if (missing.empty()) {
                ExclusionVerdict t3 = wiman_order_filter(3, r, /*certified=*/true);
                if (t3.rule == "missing-order") missing.push_back(14);
            }
            if (!missing.empty()) {
                v.rule = "missing-order";
                v.missing_orders = missing;
                v.evidence.push_back("spectrum[" + r.provenance_of("spectrum") + "]");
                detail::note_trusted(r, "spectrum", trusted);
            } else if (r.min_transitive_degree && r.min_transitive_degree <= 16) {
                v.rule = "small-index";
                v.evidence.push_back("min_transitive_degree " +
                                     std::to_string(r.min_transitive_degree) + " <= 16 [" +
                                     r.provenance_of("min_transitive_degree") + "]");
            } else {
                v.rule = "not-excluded";
                if (r.markers.psl27 == "yes")
                    v.evidence.push_back("contains_psl27 = yes [" +
                                         r.provenance_of("contains_psl27") + "]");
                if (!r.spectrum_exact())
                    v.evidence.push_back("spectrum known only by sampling: absences not "
                                         "certifiable");
                rep.survivors.push_back(r.name);
                detail::note_trusted(r, "spectrum", trusted);
                detail::note_trusted(r, "contains_psl27", trusted);
            }
        }
        rep.verdicts.push_back(v);
    }
    rep.trusted_facts.assign(trusted.begin(), trusted.end());

    // re-verify the U3(17) witness whenever it survives
    for (const std::string& name : rep.survivors) {
        const SimpleGroupRecord* r = cat.find(name);
        if (r && r->generators && r->generators->witnesses.count("contains_psl27")) {
            std::optional<GenSet> gens = record_genset(*r);
            if (gens && verify_witness(*gens, "contains_psl27",
                                       r->generators->witnesses.at("contains_psl27")))
                rep.checks.push_back(name + ": embedded PSL(2,7) witness re-verified");
            else
                throw internal_inconsistency(name + ": embedded witness failed");
        }
    }

    const std::set<std::string> expected = {"3D4(2)", "McL", "U3(17)"};
    std::set<std::string> got(rep.survivors.begin(), rep.survivors.end());
    if (got == expected) {
        rep.conclusion = "survivor set matches the expected frontier exactly: 3D4(2), McL, "
                         "U3(17) cannot be excluded with the genus-3 toolkit";
        rep.exit_code = 0;
    } else {
        std::string diff = "discrepancy: survivor set {";
        bool first = true;
        for (const auto& s : got) { diff += (first ? "" : ", ") + s; first = false; }
        diff += "} differs from the expected {3D4(2), McL, U3(17)}";
        rep.findings.push_back(diff);
        rep.conclusion = "frontier scan disagrees with the expected survivor list";
        rep.exit_code = 1;
    }
    return rep;
}

} // namespace mfq
