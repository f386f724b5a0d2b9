#include <catch2/catch.hpp>

#include "mfq/families.hpp"
#include "mfq/group.hpp"

using namespace mfq;

namespace {
std::vector<uint64_t> brute_spectrum(const std::string& spec) {
    EnumeratedGroup g = enumerate_group(standard_generators(parse_group_spec(spec)));
    REQUIRE(g.enumerated());
    return order_spectrum(g).orders;
}
} // namespace

TEST_CASE("PSL(2,q) spectrum formula vs enumeration") {
    for (uint64_t q : {4, 5, 7, 9, 11, 13, 25, 49})
        CHECK(spectrum_psl2(q) == brute_spectrum("psl(2," + std::to_string(q) + ")"));
    // the two rule-2 exceptions of the g=4 replay
    CHECK(spectrum_psl2(25) == std::vector<uint64_t>{1, 2, 3, 4, 5, 6, 12, 13});
    std::vector<uint64_t> l2_625 = spectrum_psl2(625);
    CHECK_FALSE(std::binary_search(l2_625.begin(), l2_625.end(), 10));
    CHECK_FALSE(std::binary_search(l2_625.begin(), l2_625.end(), 16));
}

TEST_CASE("PSL(3,q) spectrum formula vs enumeration") {
    for (uint64_t q : {2, 3, 4, 5})
        CHECK(spectrum_psl3(q) == brute_spectrum("psl(3," + std::to_string(q) + ")"));
    CHECK(spectrum_psl3(2) == std::vector<uint64_t>{1, 2, 3, 4, 7});
    CHECK(spectrum_psl3(4) == std::vector<uint64_t>{1, 2, 3, 4, 5, 7});
}

TEST_CASE("PSU(3,q) spectrum formula vs enumeration") {
    for (uint64_t q : {3, 5})
        CHECK(spectrum_psu3(q) == brute_spectrum("psu(3," + std::to_string(q) + ")"));
    CHECK(spectrum_psu3(3) == std::vector<uint64_t>{1, 2, 3, 4, 6, 7, 8, 12});
    CHECK(spectrum_psu3(5) == std::vector<uint64_t>{1, 2, 3, 4, 5, 6, 7, 8, 10});
}

TEST_CASE("PSp(4,q) spectrum formula vs enumeration") {
    CHECK(spectrum_psp4(3) == brute_spectrum("psp(4,3)"));
    CHECK(spectrum_psp4(4) == brute_spectrum("psp(4,4)"));
}

TEST_CASE("alternating spectra via cycle types") {
    for (uint32_t n = 5; n <= 9; ++n)
        CHECK(spectrum_alt(n) == brute_spectrum("a(" + std::to_string(n) + ")"));
    // A9 misses 8: the replay's missing-order(8) verdict for it
    std::vector<uint64_t> a9 = spectrum_alt(9);
    CHECK_FALSE(std::binary_search(a9.begin(), a9.end(), 8));
    CHECK(std::binary_search(a9.begin(), a9.end(), 9));
    CHECK(std::binary_search(a9.begin(), a9.end(), 12));
    // A8 misses all of 8, 9, 12
    CHECK(spectrum_alt(8) == std::vector<uint64_t>{1, 2, 3, 4, 5, 6, 7, 15});
}

TEST_CASE("Suzuki and Ree spectra") {
    CHECK(spectrum_suzuki(8) == std::vector<uint64_t>{1, 2, 4, 5, 7, 13});
    CHECK(spectrum_suzuki(32) == std::vector<uint64_t>{1, 2, 4, 5, 25, 31, 41});
    std::vector<uint64_t> ree = spectrum_ree(27);
    CHECK(std::binary_search(ree.begin(), ree.end(), 9));
    CHECK_FALSE(std::binary_search(ree.begin(), ree.end(), 4));
    CHECK_FALSE(std::binary_search(ree.begin(), ree.end(), 10));
}

TEST_CASE("key membership facts the replays depend on") {
    // U3(17): 8, 9, 12 present; no element of order 14; no order 10 (5 does
    // not divide the order)
    std::vector<uint64_t> u317 = spectrum_psu3(17);
    for (uint64_t k : {8, 9, 12, 16, 18})
        CHECK(std::binary_search(u317.begin(), u317.end(), k));
    CHECK_FALSE(std::binary_search(u317.begin(), u317.end(), 14));
    CHECK_FALSE(std::binary_search(u317.begin(), u317.end(), 10));

    // L2(343) contains PSL(2,7)-subfield subgroups but lacks order 8
    std::vector<uint64_t> l2_343 = spectrum_psl2(343);
    CHECK_FALSE(std::binary_search(l2_343.begin(), l2_343.end(), 8));

    // L3(7) has 16 but no 9; no 10 either (5 does not divide the order)
    std::vector<uint64_t> l37 = spectrum_psl3(7);
    CHECK(std::binary_search(l37.begin(), l37.end(), 16));
    CHECK_FALSE(std::binary_search(l37.begin(), l37.end(), 9));

    // S4(7) and S4(8): no 16 resp. no 8
    std::vector<uint64_t> s47 = spectrum_psp4(7);
    CHECK_FALSE(std::binary_search(s47.begin(), s47.end(), 16));
    CHECK_FALSE(std::binary_search(s47.begin(), s47.end(), 9));
    std::vector<uint64_t> s48 = spectrum_psp4(8);
    CHECK(std::binary_search(s48.begin(), s48.end(), 9));
    CHECK_FALSE(std::binary_search(s48.begin(), s48.end(), 8));
}
