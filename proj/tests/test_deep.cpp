// Heavier cross-validations, hidden behind the [deep] tag: enumerations in
// the million-element range that pin the formula spectra beyond the small
// fields the default suite covers. Run with: mfq_tests "[deep]"

#include <catch2/catch.hpp>

#include "mfq/families.hpp"
#include "mfq/group.hpp"
#include "mfq/replay.hpp"

using namespace mfq;

#ifndef MFQ_CATALOG
#define MFQ_CATALOG "data/catalog.json"
#endif

TEST_CASE("L3(7) spectrum formula vs enumeration", "[.][deep]") {
    EnumeratedGroup g = enumerate_group(standard_generators(parse_group_spec("psl(3,7)")));
    REQUIRE(g.enumerated());
    REQUIRE(g.order() == 1876896);
    CHECK(order_spectrum(g).orders == spectrum_psl3(7));
}

TEST_CASE("S4(5) spectrum formula vs enumeration", "[.][deep]") {
    EnumeratedGroup g = enumerate_group(standard_generators(parse_group_spec("psp(4,5)")));
    REQUIRE(g.enumerated());
    REQUIRE(g.order() == 4680000);
    CHECK(order_spectrum(g).orders == spectrum_psp4(5));
}

TEST_CASE("shipped M23/M24 representations sample inside their spectra", "[.][deep]") {
    Catalog cat = load_catalog(MFQ_CATALOG);
    for (const char* name : {"M23", "M24"}) {
        const SimpleGroupRecord* r = cat.find(name);
        REQUIRE(r);
        REQUIRE(r->generators.has_value());
        VerificationReport rep = verify_record(*r, kDefaultEnumerationCap, 20000);
        CHECK(rep.tier == 'b');
        CHECK(rep.passed());
    }
}

TEST_CASE("default cap refuses PSp8(F2) cleanly", "[.][deep]") {
    EnumeratedGroup g =
        enumerate_group(standard_generators(parse_group_spec("psp(8,2)")));
    CHECK_FALSE(g.enumerated());
    CHECK_THROWS_AS(g.order(), unsupported);
}
