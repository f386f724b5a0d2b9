#include <catch2/catch.hpp>

#include "mfq/classical.hpp"
#include "mfq/group.hpp"
#include "mfq/subgroups.hpp"

using namespace mfq;

TEST_CASE("headline symplectic orders") {
    CHECK(classical_order({Family::PSp, 3, 2}).to_string() == "1451520");
    CHECK(classical_order({Family::PSp, 4, 2}).to_string() == "47377612800");
    CHECK(classical_order({Family::PSp, 3, 3}).to_string() == "4585351680");
    // 2^(g^2) (2^2-1)(2^4-1)...(2^2g-1) evaluated directly as a cross-check
    for (uint32_t g : {3u, 4u}) {
        BigUint direct = BigUint::pow(2, g * g);
        for (uint32_t i = 1; i <= g; ++i) direct = direct * (BigUint::pow(2, 2 * i) - BigUint(1));
        CHECK(direct == classical_order({Family::PSp, g, 2}));
    }
}

TEST_CASE("linear and unitary orders") {
    CHECK(classical_order({Family::PSL, 2, 7}).to_u64() == 168);
    CHECK(classical_order({Family::PSL, 2, 49}).to_u64() == 58800);
    CHECK(classical_order({Family::PSL, 3, 4}).to_u64() == 20160);
    CHECK(classical_order({Family::Alt, 8, 0}).to_u64() == 20160);
    CHECK(classical_order({Family::PSU, 3, 3}).to_u64() == 6048);
    CHECK(classical_order({Family::PSU, 3, 5}).to_u64() == 126000);
    // independent evaluation of q^3 (q^2-1)(q^3+1) / gcd(3, q+1) at q = 17
    uint64_t q = 17;
    uint64_t by_hand = q * q * q * (q * q - 1) / 3 * (q * q * q + 1);
    CHECK(by_hand == 2317678272ull);
    CHECK(classical_order({Family::PSU, 3, 17}).to_u64() == by_hand);
}

TEST_CASE("exceptional and sporadic orders") {
    CHECK(classical_order({Family::ThD4, 0, 2}).to_u64() == 211341312);
    CHECK(classical_order({Family::G2, 0, 3}).to_u64() == 4245696);
    CHECK(classical_order({Family::TwB2, 0, 8}).to_u64() == 29120);
    CHECK(classical_order({Family::TwG2, 0, 27}).to_u64() == 10073444472ull);
    CHECK(classical_order({Family::Tits, 0, 0}).to_u64() == 17971200);
    CHECK(classical_order({Family::Sporadic, 0, 0, "M22"}).to_u64() == 443520);
    CHECK(classical_order({Family::Sporadic, 0, 0, "McL"}).to_u64() == 898128000);
    CHECK(classical_order({Family::POmegaOdd, 3, 3}).to_string() == "4585351680");
    CHECK(classical_order({Family::POmegaPlus, 4, 2}).to_u64() == 174182400);
    CHECK(classical_order({Family::POmegaMinus, 4, 2}).to_u64() == 197406720);
    CHECK_THROWS_AS(classical_order({Family::TwB2, 0, 4}), input_error);
    CHECK_THROWS_AS(classical_order({Family::Sporadic, 0, 0, "Nope"}), input_error);
}

TEST_CASE("|SL_n(q)| = |PSL_n(q)| * gcd(n, q-1) across the grid") {
    for (uint32_t n = 2; n <= 4; ++n)
        for (uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
            BigUint sl = sl_order(n, q);
            BigUint psl = classical_order({Family::PSL, n, q});
            CHECK(psl * BigUint(std::gcd(uint64_t(n), q - 1)) == sl);
        }
}

TEST_CASE("group spec grammar") {
    GroupSpec s = parse_group_spec("psp(8,2)");
    CHECK(s.kind == GroupKind::PSp);
    CHECK(s.n == 8);
    CHECK(s.q == 2);
    CHECK(parse_group_spec("  PSL(2, 49) ").q == 49);
    CHECK(parse_group_spec("q8").kind == GroupKind::Q8);
    CHECK(parse_group_spec("a(9)").n == 9);
    CHECK_THROWS_AS(parse_group_spec("sp(5,2)"), input_error);
    CHECK_THROWS_AS(parse_group_spec("wat(3)"), input_error);
    CHECK_THROWS_AS(parse_group_spec("sl(2)"), input_error);
    CHECK(spec_order(parse_group_spec("psp(6,2)")).to_u64() == 1451520);
    CHECK(spec_order(parse_group_spec("z(12)")).to_u64() == 12);
}

namespace {
uint64_t realized_order(const std::string& spec, uint64_t cap = kDefaultEnumerationCap) {
    EnumeratedGroup g = enumerate_group(standard_generators(parse_group_spec(spec)), cap);
    REQUIRE(g.enumerated());
    return g.order();
}
} // namespace

TEST_CASE("generators realize the order formulas: linear") {
    CHECK(realized_order("sl(2,2)") == 6);
    CHECK(realized_order("sl(2,3)") == 24);
    CHECK(realized_order("sl(2,4)") == 60);
    CHECK(realized_order("sl(2,5)") == 120);
    CHECK(realized_order("sl(2,7)") == 336);
    CHECK(realized_order("sl(2,9)") == 720);
    CHECK(realized_order("sl(3,2)") == 168);
    CHECK(realized_order("sl(3,3)") == 5616);
    CHECK(realized_order("psl(2,7)") == 168);
    CHECK(realized_order("psl(2,9)") == 360);
    CHECK(realized_order("psl(2,25)") == 7800);
    CHECK(realized_order("psl(3,4)") == 20160);
    CHECK(realized_order("sl(4,2)") == 20160);
}

TEST_CASE("generators realize the order formulas: symplectic") {
    GenSet sp42 = standard_generators(parse_group_spec("sp(4,2)"));
    for (const GroupElement& g : sp42.generators) CHECK(g.mat().symplectic(2));
    CHECK(realized_order("sp(4,2)") == 720);
    CHECK(realized_order("sp(2,5)") == 120); // Sp_2 = SL_2
    CHECK(realized_order("sp(4,3)") == 51840);
    CHECK(realized_order("psp(4,3)") == 25920);
}

TEST_CASE("generators realize the order formulas: unitary") {
    GenSet su33 = standard_generators(parse_group_spec("su(3,3)"));
    for (const GroupElement& g : su33.generators) {
        CHECK(g.mat().hermitian_isometry());
        CHECK(g.mat().determinant().is_one());
    }
    CHECK(realized_order("su(3,3)") == 6048);  // gcd(3,4)=1: SU = PSU here
    CHECK(realized_order("psu(3,3)") == 6048);
    CHECK(realized_order("su(3,2)") == 216);
}

TEST_CASE("generators realize the order formulas: permutation families") {
    CHECK(realized_order("a(5)") == 60);
    CHECK(realized_order("a(6)") == 360);
    CHECK(realized_order("a(7)") == 2520);
    CHECK(realized_order("a(8)") == 20160);
    CHECK(realized_order("s(6)") == 720);
    CHECK(realized_order("z(12)") == 12);
    CHECK(realized_order("q8") == 8);
    CHECK(realized_order("dih(4)") == 8);
    // Q8 really is the quaternion group: unique involution, six order-4 elements
    EnumeratedGroup q8 = enumerate_group(standard_generators(parse_group_spec("q8")));
    CHECK(elements_of_order(q8, 2).size() == 1);
    CHECK(elements_of_order(q8, 4).size() == 6);
}

TEST_CASE("projective reduction via matrix-mod-scalars") {
    // |PSL(2,7)| = |SL(2,7)| / 2 realized projectively, not by quotient construction
    EnumeratedGroup sl = enumerate_group(standard_generators(parse_group_spec("sl(2,7)")));
    CenterInfo c = center_and_projective(sl);
    CHECK(c.center.size() == 2);
    CHECK(c.projective_order == 168);
}
