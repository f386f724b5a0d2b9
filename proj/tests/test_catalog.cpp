#include <catch2/catch.hpp>

#include "mfq/catalog.hpp"

using namespace mfq;

TEST_CASE("enumerate_simple_orders: small bounds") {
    auto under400 = enumerate_simple_orders(BigUint(400));
    REQUIRE(under400.size() == 3);
    CHECK(under400[0].first == "A5");
    CHECK(under400[0].second.to_u64() == 60);
    CHECK(under400[1].first == "L2(7)");
    CHECK(under400[1].second.to_u64() == 168);
    CHECK(under400[2].first == "A6");
    CHECK(under400[2].second.to_u64() == 360);
}

TEST_CASE("enumerate_simple_orders: dedup below 10^4") {
    auto list = enumerate_simple_orders(BigUint(10000));
    std::map<std::string, uint64_t> m;
    for (const auto& [name, ord] : list) {
        CHECK(!m.count(name));
        m[name] = ord.to_u64();
    }
    CHECK(m.count("U3(3)"));
    CHECK(m["U3(3)"] == 6048);
    CHECK(!m.count("L2(9)")); // = A6, deduplicated
    CHECK(m.count("A6"));
    CHECK(!m.count("L3(2)")); // = L2(7)
    CHECK(!m.count("S4(3)")); // = U4(2)
    CHECK(m.count("L2(8)"));
    CHECK(m["L2(8)"] == 504);
    CHECK(m.count("M11"));
    // the standard 16: A5 L2(7) A6 L2(8) L2(11) L2(13) L2(17) A7 L2(19)
    // L2(16) L3(3) U3(3) L2(23) L2(25) M11 L2(27)
    CHECK(m.size() == 16);
}

TEST_CASE("enumerate_simple_orders: the g=3 window") {
    auto list = enumerate_simple_orders(BigUint(1451520));
    // every record strictly below |PSp6(2)|
    for (const auto& [name, ord] : list) CHECK(ord < BigUint(1451520));
    std::set<std::string> names;
    for (const auto& [name, ord] : list) names.insert(name);
    for (const char* expect : {"L2(7)", "A7", "U3(3)", "A8", "L3(4)", "L2(49)", "U3(5)",
                               "A9", "M22", "J2", "J1", "Sz(8)", "U3(4)", "M12", "U4(2)",
                               "S4(4)", "L3(5)", "L2(127)"})
        CHECK(names.count(expect));
    // both order-20160 groups present
    CHECK(names.count("A8"));
    CHECK(names.count("L3(4)"));
}

TEST_CASE("enumerate_simple_orders: the g=4 bound includes the frontier") {
    BigUint bound = BigUint::from_string("47377612800");
    auto list = enumerate_simple_orders(bound);
    std::set<std::string> names;
    for (const auto& [name, ord] : list) names.insert(name);
    for (const char* expect :
         {"3D4(2)", "McL", "U3(17)", "S6(2)", "S6(3)", "O7(3)", "A14", "L2(25)",
          "L2(625)", "Sz(128)", "2G2(27)", "2F4(2)'", "He", "L6(2)", "U6(2)", "G2(5)",
          "S4(11)", "U4(5)", "L4(5)", "O8+(2)", "O8-(2)", "M24", "U3(23)", "L3(19)"})
        CHECK(names.count(expect));
    CHECK(!names.count("S8(2)")); // the bound itself is excluded
    CHECK(!names.count("Ru"));    // 1.459e11 > bound

    // the B/C order coincidence is kept as two records
    const BigUint coincidence = BigUint::from_string("4585351680");
    int hits = 0;
    for (const auto& [name, ord] : list)
        if (ord == coincidence) ++hits;
    CHECK(hits == 2);

    // no unexplained order collisions
    for (size_t i = 1; i < list.size(); ++i)
        if (list[i].second == list[i - 1].second)
            CHECK(known_order_coincidence(list[i].first, list[i - 1].first));
}

TEST_CASE("name round trips") {
    CHECK(canonical_name({Family::PSp, 3, 2}) == "S6(2)");
    CHECK(canonical_name({Family::POmegaOdd, 3, 3}) == "O7(3)");
    CHECK(canonical_name({Family::ThD4, 0, 2}) == "3D4(2)");
    CHECK(canonical_name({Family::TwB2, 0, 8}) == "Sz(8)");
    CHECK(canonical_name({Family::Tits, 0, 0}) == "2F4(2)'");
    CHECK(family_from_token("O+") == Family::POmegaPlus);
    CHECK_THROWS_AS(family_from_token("nope"), load_error);
}
