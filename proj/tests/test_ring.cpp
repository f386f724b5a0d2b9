#include <catch2/catch.hpp>

#include "mfq/bigint.hpp"
#include "mfq/matrix.hpp"
#include "mfq/prng.hpp"
#include "mfq/rational.hpp"
#include "mfq/ring.hpp"

using namespace mfq;

TEST_CASE("BigUint arithmetic and decimal round trips") {
    CHECK(BigUint(0).to_string() == "0");
    CHECK(BigUint(1451520).to_string() == "1451520");
    CHECK(BigUint::from_string("47,377,612,800").to_u64() == 47377612800ull);
    BigUint a = BigUint::pow(2, 64);
    CHECK(a.to_string() == "18446744073709551616");
    CHECK((a * a).to_string() == "340282366920938463463374607431768211456");
    CHECK((a - BigUint(1)).to_string() == "18446744073709551615");
    CHECK(BigUint::from_string("100").divided_by(4).to_u64() == 25);
    CHECK_THROWS_AS(BigUint::from_string("100").divided_by(3), input_error);
    CHECK(BigUint::from_string("604800") < BigUint::from_string("898128000"));
    CHECK(BigUint(17971200).mod_small(7) == 17971200 % 7);
}

TEST_CASE("Rational is exact") {
    Rational mu = Rational(-2) + Rational(1, 2) + Rational(2, 3) + Rational(6, 7);
    CHECK(mu == Rational(1, 42)); // the (2,3,7) triangle measure
    CHECK((mu * 168).is_integer());
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK_THROWS_AS(Rational(1, 0), input_error);
}

TEST_CASE("Modulus classification") {
    CHECK(Modulus::zmod(7).kind() == ModKind::Prime);
    CHECK(Modulus::zmod(9).kind() == ModKind::PrimePower);
    CHECK(Modulus::zmod(9).p() == 3);
    CHECK(Modulus::zmod(9).r() == 2);
    CHECK(Modulus::zmod(12).kind() == ModKind::Composite);
    CHECK_THROWS_AS(Modulus::zmod(1), input_error);
    CHECK_THROWS_AS(Modulus::gfp2(6), input_error);
}

TEST_CASE("Canonical irreducible polynomial is the lexicographic minimum") {
    // over F_2 the least irreducible is t^2 + t + 1
    Modulus f4 = Modulus::gfp2(2);
    CHECK(f4.poly_b() == 1);
    CHECK(f4.poly_c() == 1);
    // over F_3: t^2 + 1 (b=0, c=1) has no root mod 3
    Modulus f9 = Modulus::gfp2(3);
    CHECK(f9.poly_b() == 0);
    CHECK(f9.poly_c() == 1);
    CHECK_THROWS_AS(Modulus::gfp2(3, 0, 2), input_error); // t^2+2 = (t-1)(t+1) mod 3
}

TEST_CASE("Residue arithmetic over every modulus kind") {
    for (uint32_t m : {5u, 9u, 12u}) {
        Modulus mod = Modulus::zmod(m);
        SplitMix64 rng(7);
        for (int i = 0; i < 200; ++i) {
            Residue a(rng.below(m), mod), b(rng.below(m), mod), c(rng.below(m), mod);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
        }
    }
    Modulus f49 = Modulus::gfp2(7);
    SplitMix64 rng(11);
    for (int i = 0; i < 200; ++i) {
        Residue a = Residue::from_packed(uint32_t(rng.below(49)), f49);
        Residue b = Residue::from_packed(uint32_t(rng.below(49)), f49);
        Residue c = Residue::from_packed(uint32_t(rng.below(49)), f49);
        CHECK((a + b) * c == a * c + b * c);
        if (!a.is_zero()) CHECK(a * a.inverse() == Residue::one(f49));
    }
}

TEST_CASE("Units and inverses over Z_{p^r}") {
    Modulus z9 = Modulus::zmod(9);
    CHECK(Residue(2, z9).is_unit());
    CHECK_FALSE(Residue(3, z9).is_unit());
    CHECK(Residue(2, z9).inverse() == Residue(5, z9));
    CHECK_THROWS_AS(Residue(3, z9).inverse(), singular_error);
}

TEST_CASE("Frobenius is an order-2 automorphism fixing exactly F_p") {
    for (uint32_t p : {2u, 3u, 5u, 7u}) {
        Modulus f = Modulus::gfp2(p);
        uint32_t fixed = 0;
        for (uint64_t v = 0; v < f.cardinality(); ++v) {
            Residue x = Residue::from_packed(uint32_t(v), f);
            Residue fx = x.frobenius();
            CHECK(fx.frobenius() == x);        // involution
            if (fx == x) ++fixed;
            // multiplicativity on a shifted partner
            Residue y = Residue::from_packed(uint32_t((v * 3 + 1) % f.cardinality()), f);
            CHECK((x * y).frobenius() == fx * y.frobenius());
        }
        CHECK(fixed == p); // exactly the prime subfield
    }
}

TEST_CASE("mat_mul examples") {
    Modulus z5 = Modulus::zmod(5);
    Mat a = Mat::from_rows({{1, 2, 3}, {4, 0, 1}, {2, 2, 2}}, z5);
    CHECK(Mat::identity(3, z5) * a == a);

    Modulus z2 = Modulus::zmod(2);
    Mat t = Mat::from_rows({{1, 1}, {0, 1}}, z2);
    CHECK(t * t == Mat::identity(2, z2)); // involution mod 2

    // (I + 2A)^2 = I over Z_4 for A = I: direct expansion 9I = I
    Modulus z4 = Modulus::zmod(4);
    Mat m = Mat::from_rows({{3, 0}, {0, 3}}, z4);
    CHECK(m * m == Mat::identity(2, z4));

    Modulus z3 = Modulus::zmod(3);
    CHECK_THROWS_AS(Mat::identity(2, z3) * Mat::identity(3, z3), input_error);
    CHECK_THROWS_AS(Mat::identity(2, z3) * Mat::identity(2, z5), input_error);
}

TEST_CASE("determinant examples") {
    Modulus z7 = Modulus::zmod(7);
    CHECK(Mat::identity(4, z7).determinant() == Residue(1, z7));
    Mat swap2 = Mat::from_rows({{0, 1}, {1, 0}}, z7);
    CHECK(swap2.determinant() == Residue(6, z7)); // -1 mod 7

    // 4x4 path exercises the subset-DP branch
    Mat m = Mat::from_rows({{1, 2, 0, 3}, {0, 1, 4, 1}, {5, 0, 1, 2}, {1, 1, 1, 1}}, z7);
    // cofactor oracle computed by row expansion below
    auto minor_det = [&](std::vector<std::vector<int64_t>> rows) {
        return Mat::from_rows(rows, z7).determinant();
    };
    Residue oracle =
        Residue(1, z7) * minor_det({{1, 4, 1}, {0, 1, 2}, {1, 1, 1}}) -
        Residue(2, z7) * minor_det({{0, 4, 1}, {5, 1, 2}, {1, 1, 1}}) +
        Residue(0, z7) * minor_det({{0, 1, 1}, {5, 0, 2}, {1, 1, 1}}) -
        Residue(3, z7) * minor_det({{0, 1, 4}, {5, 0, 1}, {1, 1, 1}});
    CHECK(m.determinant() == oracle);
}

TEST_CASE("determinant is multiplicative on random samples") {
    for (uint32_t m : {5u, 8u, 12u}) {
        Modulus mod = Modulus::zmod(m);
        SplitMix64 rng(m);
        for (int trial = 0; trial < 50; ++trial) {
            Mat a(3, mod), b(3, mod);
            for (uint32_t i = 0; i < 3; ++i)
                for (uint32_t j = 0; j < 3; ++j) {
                    a.set(i, j, Residue(rng.below(m), mod));
                    b.set(i, j, Residue(rng.below(m), mod));
                }
            CHECK((a * b).determinant() == a.determinant() * b.determinant());
        }
    }
}

TEST_CASE("mat_inverse examples and round trips") {
    Modulus z7 = Modulus::zmod(7);
    CHECK(Mat::identity(3, z7).inverse() == Mat::identity(3, z7));
    Mat t = Mat::from_rows({{1, 1}, {0, 1}}, z7);
    CHECK(t.inverse() == Mat::from_rows({{1, 6}, {0, 1}}, z7)); // [[1,p-1],[0,1]]

    // over Z_9: (I + 3A)^{-1} = I - 3A
    Modulus z9 = Modulus::zmod(9);
    Mat a = Mat::from_rows({{1, 2}, {0, 2}}, z9);
    Mat ipa(2, z9), ima(2, z9);
    for (uint32_t i = 0; i < 2; ++i)
        for (uint32_t j = 0; j < 2; ++j) {
            Residue base = (i == j) ? Residue::one(z9) : Residue::zero(z9);
            Residue three(3, z9);
            ipa.set(i, j, base + three * a.at(i, j));
            ima.set(i, j, base - three * a.at(i, j));
        }
    CHECK(ipa.inverse() == ima);
    CHECK(ipa * ima == Mat::identity(2, z9));

    Mat sing = Mat::from_rows({{3, 0}, {0, 1}}, z9);
    CHECK_THROWS_AS(sing.inverse(), singular_error);

    // 1000 random invertible matrices per modulus kind
    for (uint32_t m : {7u, 9u, 12u}) {
        Modulus mod = Modulus::zmod(m);
        SplitMix64 rng(m * 31 + 1);
        int done = 0;
        while (done < 1000) {
            Mat x(2, mod);
            for (uint32_t i = 0; i < 2; ++i)
                for (uint32_t j = 0; j < 2; ++j) x.set(i, j, Residue(rng.below(m), mod));
            if (!x.determinant().is_unit()) continue;
            REQUIRE(x * x.inverse() == Mat::identity(2, mod));
            ++done;
        }
    }
    Modulus f9 = Modulus::gfp2(3);
    SplitMix64 rng(99);
    int done = 0;
    while (done < 1000) {
        Mat x(2, f9);
        for (uint32_t i = 0; i < 2; ++i)
            for (uint32_t j = 0; j < 2; ++j)
                x.set(i, j, Residue::from_packed(uint32_t(rng.below(9)), f9));
        if (x.determinant().is_zero()) continue;
        REQUIRE(x * x.inverse() == Mat::identity(2, f9));
        ++done;
    }
}

TEST_CASE("symplectic membership") {
    Modulus z5 = Modulus::zmod(5);
    CHECK(Mat::identity(4, z5).symplectic(2));
    CHECK(Mat::standard_symplectic_form(2, z5).symplectic(2));
    CHECK(Mat::standard_symplectic_form(3, Modulus::zmod(2)).symplectic(3));

    // the shear e_2 -> e_1 + e_2 breaks <e_2, f_1> = 0: not symplectic
    Mat shear = Mat::from_rows(
        {{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}, z5);
    CHECK_FALSE(shear.symplectic(2));
    // while the same shear along the pairing (f_1 -> f_1 + e_1) is a transvection
    Mat transv = Mat::from_rows(
        {{1, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}, z5);
    CHECK(transv.symplectic(2));

    CHECK_THROWS_AS(Mat::identity(3, z5).symplectic(1), input_error);
}

TEST_CASE("CRT recombination of SL2 parts has determinant 1") {
    // lift a pair (SL2(Z2), SL2(Z3)) to SL2(Z6) entrywise and check det
    Modulus z6 = Modulus::zmod(6), z2 = Modulus::zmod(2), z3 = Modulus::zmod(3);
    SplitMix64 rng(6);
    auto random_sl2 = [&](const Modulus& m) {
        for (;;) {
            Mat x(2, m);
            for (uint32_t i = 0; i < 2; ++i)
                for (uint32_t j = 0; j < 2; ++j) x.set(i, j, Residue(rng.below(m.m()), m));
            if (x.determinant().is_one()) return x;
        }
    };
    for (int trial = 0; trial < 200; ++trial) {
        Mat a = random_sl2(z2), b = random_sl2(z3);
        Mat lifted(2, z6);
        for (uint32_t i = 0; i < 2; ++i)
            for (uint32_t j = 0; j < 2; ++j) {
                // x = a mod 2, x = b mod 3: x = 3*a + 4*b mod 6
                uint32_t v = (3 * a.at(i, j).a() + 4 * b.at(i, j).a()) % 6;
                lifted.set(i, j, Residue(v, z6));
            }
        CHECK(lifted.determinant().is_one());
    }
}
