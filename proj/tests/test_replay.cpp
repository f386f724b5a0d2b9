#include <catch2/catch.hpp>

#include "mfq/replay.hpp"

using namespace mfq;

#ifndef MFQ_CATALOG
#define MFQ_CATALOG "data/catalog.json"
#endif

namespace {
const Catalog& shipped() {
    static Catalog cat = load_catalog(MFQ_CATALOG);
    return cat;
}
} // namespace

TEST_CASE("shipped catalog loads and cross-validates") {
    const Catalog& cat = shipped();
    CHECK(cat.records.size() >= 600);
    // spot checks against the headline constants
    CHECK(cat.find("S6(2)")->order.to_u64() == 1451520);
    CHECK(cat.find("U3(17)")->order.to_u64() == 2317678272ull);
    CHECK(cat.find("3D4(2)")->order.to_u64() == 211341312);
    CHECK(cat.find("L2(7)")->spectrum == std::vector<uint64_t>{1, 2, 3, 4, 7});
    CHECK(cat.find("J2")->spectrum ==
          std::vector<uint64_t>{1, 2, 3, 4, 5, 6, 7, 8, 10, 12, 15});
    CHECK(cat.find("M22")->generators.has_value());
    CHECK(cat.find("M22")->generators->degree == 22);
    CHECK(cat.find("U3(17)")->provenance_of("spectrum") == "sampled");
    CHECK_FALSE(cat.find("U3(17)")->spectrum_exact());
    CHECK(cat.find("A9")->spectrum_exact());
}

TEST_CASE("catalog rejects corrupted records") {
    // order off by one
    nlohmann::json good = record_to_json(*shipped().find("L2(7)"));
    {
        nlohmann::json bad = good;
        bad["order"] = "169";
        nlohmann::json arr = nlohmann::json::array({bad});
        std::ofstream("_bad1.json") << arr.dump();
        CHECK_THROWS_AS(load_catalog("_bad1.json"), load_error);
    }
    {
        nlohmann::json bad = good;
        bad["spectrum"] = {1, 2, 3, 5}; // 5 does not divide 168
        std::ofstream("_bad2.json") << nlohmann::json::array({bad}).dump();
        CHECK_THROWS_AS(load_catalog("_bad2.json"), load_error);
    }
    {
        nlohmann::json arr = nlohmann::json::array({good, good}); // duplicate name
        std::ofstream("_bad3.json") << arr.dump();
        CHECK_THROWS_AS(load_catalog("_bad3.json"), load_error);
    }
    CHECK_THROWS_AS(load_catalog("_no_such_file.json"), load_error);
}

TEST_CASE("certified_missing distinguishes sampled from exact spectra") {
    const SimpleGroupRecord* u317 = shipped().find("U3(17)");
    REQUIRE(u317);
    // 14 is absent from the sampled spectrum but that proves nothing
    CHECK_FALSE(u317->spectrum_contains(14));
    CHECK_FALSE(u317->certified_missing(14));
    // 10 is impossible by Lagrange: 5 does not divide the order
    CHECK(u317->certified_missing(10));
    // exact records certify their gaps
    const SimpleGroupRecord* a9 = shipped().find("A9");
    CHECK(a9->certified_missing(8));
    CHECK_FALSE(a9->certified_missing(9));
}

TEST_CASE("wiman_order_filter") {
    const Catalog& cat = shipped();
    ExclusionVerdict sympl = wiman_order_filter(3, *cat.find("S6(3)"));
    CHECK(sympl.rule == "not-excluded"); // symplectic exemption
    ExclusionVerdict d4 = wiman_order_filter(3, *cat.find("3D4(2)"));
    CHECK(d4.rule == "not-excluded"); // 14 in the catalog spectrum
    ExclusionVerdict u43 = wiman_order_filter(3, *cat.find("U4(3)"));
    CHECK(u43.rule == "missing-order");
    CHECK(u43.missing_orders == std::vector<uint64_t>{14});
    // literal vs certified reading on the sampled record
    CHECK(wiman_order_filter(3, *cat.find("U3(17)"), false).rule == "missing-order");
    CHECK(wiman_order_filter(3, *cat.find("U3(17)"), true).rule == "not-excluded");
    // genus 4: wants order 18
    CHECK(wiman_order_filter(4, *cat.find("3D4(2)")).rule == "not-excluded");
    CHECK(wiman_order_filter(4, *cat.find("McL")).rule == "missing-order");
}

TEST_CASE("frontier-g3 reproduces the expected survivor triple") {
    Report rep = frontier_g3(shipped());
    CHECK(rep.exit_code == 0);
    CHECK(rep.survivors == std::vector<std::string>{"3D4(2)", "McL", "U3(17)"});
    CHECK(rep.findings.empty());
    // determinism
    Report again = frontier_g3(shipped());
    CHECK(rep.to_text() == again.to_text());
    CHECK(rep.to_json().dump() == again.to_json().dump());
}

TEST_CASE("replay-g4 excludes everything under the cascade") {
    Report rep = replay_g4(shipped());
    CHECK(rep.exit_code == 0);
    CHECK(rep.survivors.empty());
    // every record below the bound received exactly one verdict
    uint64_t below = 0;
    BigUint bound = BigUint::from_string("47377612800");
    for (const auto& r : shipped().records)
        if (r.order < bound) ++below;
    CHECK(rep.verdicts.size() == below);
    // cascade spot checks
    auto find_verdict = [&](const std::string& n) -> const ExclusionVerdict& {
        for (const auto& v : rep.verdicts)
            if (v.name == n) return v;
        throw std::runtime_error("no verdict for " + n);
    };
    CHECK(find_verdict("A14").rule == "small-index");
    CHECK(find_verdict("L2(31)").rule == "no-S5");
    CHECK(find_verdict("L2(25)").rule == "missing-order"); // the rule-2 exception falls to rule 3
    CHECK(find_verdict("L2(625)").rule == "missing-order");
    CHECK(find_verdict("S6(3)").rule == "missing-order");
    CHECK(find_verdict("2F4(2)'").rule == "missing-order");
    auto tits = find_verdict("2F4(2)'");
    CHECK(tits.missing_orders == std::vector<uint64_t>{18}); // it has 10 and 16
}

TEST_CASE("exclusion cascade order is small-index, then no-S5, then missing-order") {
    Report rep = replay_g4(shipped());
    for (const auto& v : rep.verdicts) {
        const SimpleGroupRecord* r = shipped().find(v.name);
        REQUIRE(r);
        if (r->min_transitive_degree && r->min_transitive_degree <= 20)
            CHECK(v.rule == "small-index");
        else if (r->spec.family == Family::PSL && r->spec.n == 2 && r->markers.s5 == "no")
            CHECK(v.rule == "no-S5");
    }
}

TEST_CASE("ledger entries carry their recomputation") {
    auto g3 = injected_subgroup_ledger(3);
    CHECK(g3.size() == 7);
    auto g4 = injected_subgroup_ledger(4);
    CHECK(g4.size() == 5);
    CHECK_THROWS_AS(injected_subgroup_ledger(5), input_error);
    // one full verification each (the rest run in the acceptance suite)
    CHECK_FALSE(verify_ledger_entry(g3[1]).empty()); // z(8) via (4,8,8)
    CHECK_FALSE(verify_ledger_entry(g4[3]).empty()); // z(16) via (2,16,16)
    // a deliberately wrong entry fails by name
    InjectedSubgroupEntry bogus{3, "z(8)", "(4,8,8)", {{2, "(0;3^5)"}}, ""};
    CHECK_THROWS_AS(verify_ledger_entry(bogus), internal_inconsistency);
}

TEST_CASE("report rendering carries identical facts in both forms") {
    Report rep = frontier_g3(shipped());
    std::string text = rep.to_text();
    nlohmann::json j = rep.to_json();
    CHECK(j["survivors"].size() == rep.survivors.size());
    for (const auto& s : rep.survivors) CHECK(text.find(s) != std::string::npos);
    CHECK(j["exit_code"] == 0);
    CHECK(j["assumption_ledger"].size() == rep.assumptions.size());
    for (const auto& v : rep.verdicts)
        CHECK(text.find(v.name) != std::string::npos);
}

TEST_CASE("verify_record tiers on shipped records") {
    // M22: tier (a) from the embedded degree-22 generators
    VerificationReport m22 = verify_record(*shipped().find("M22"));
    CHECK(m22.tier == 'a');
    CHECK(m22.passed());
    // 3D4(2): tier (c), order formula-confirmed
    VerificationReport d4 = verify_record(*shipped().find("3D4(2)"));
    CHECK(d4.tier == 'c');
    CHECK(d4.passed());
    CHECK(d4.order_ok);
    // U3(17): tier (b) sampling plus witness
    VerificationReport u = verify_record(*shipped().find("U3(17)"), 100000, 300);
    CHECK(u.tier == 'b');
    CHECK(u.passed());
}

TEST_CASE("sampled M22 orders stay inside the recorded spectrum") {
    const SimpleGroupRecord* r = shipped().find("M22");
    REQUIRE(r);
    std::optional<GenSet> gens = record_genset(*r);
    REQUIRE(gens);
    for (const GroupElement& x : random_elements(*gens, 100000, 2024))
        CHECK(r->spectrum_contains(element_order(x)));
}

TEST_CASE("scan bound guard") {
    CHECK_THROWS_AS(enumerate_simple_orders(BigUint::from_string("200000000000")),
                    unsupported);
}
