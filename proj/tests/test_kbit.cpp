#include "dlg2k/error.hpp"
#include "dlg2k/kbit.hpp"

#include "doctest.h"
#include "support.hpp"

using namespace dlg2k;
using dlg2k::test::big;
using dlg2k::test::cpp_int;
using dlg2k::test::r;

TEST_CASE("width bounds") {
    CHECK_THROWS_AS(Width(2), usage_error);
    CHECK_THROWS_AS(Width(4097), usage_error);
    CHECK(Width(3).limbs() == 1);
    CHECK(Width(64).limbs() == 1);
    CHECK(Width(65).limbs() == 2);
    CHECK(Width(4096).limbs() == 64);
}

TEST_CASE("add") {
    CHECK(add(r(5, 17), r(5, 17)) == r(5, 2));
    for (std::uint64_t x : {0u, 1u, 13u, 31u}) CHECK(add(r(5, 0), r(5, x)) == r(5, x));

    // (200 + 100) mod 256 via arbitrary precision
    const cpp_int expected = (cpp_int(200) + 100) % 256;
    CHECK(expected == 44);
    CHECK(add(r(8, 200), r(8, 100)) == r(8, 44));

    CHECK_THROWS_AS(add(r(5, 1), r(6, 1)), usage_error);
}

TEST_CASE("mul") {
    CHECK(mul(r(5, 3), r(5, 11)) == r(5, 1));
    for (std::uint64_t x : {0u, 1u, 13u, 31u}) CHECK(mul(r(5, 1), r(5, x)) == r(5, x));
    CHECK(mul(r(5, 17), r(5, 17)) == r(5, 1));
    CHECK_THROWS_AS(mul(r(5, 1), r(8, 1)), usage_error);
}

TEST_CASE("neg") {
    CHECK(neg(r(5, 7)) == r(5, 25));
    CHECK(neg(r(5, 0)) == r(5, 0));
    CHECK(neg(r(8, 1)) == r(8, 255));
    const Width w(200);
    CHECK(big(neg(Residue::one(w))) == (cpp_int(1) << 200) - 1);
}

TEST_CASE("inverse") {
    CHECK(inverse(r(5, 3)) == r(5, 11));
    CHECK(inverse(r(5, 1)) == r(5, 1));
    CHECK(inverse(r(5, 17)) == r(5, 17));
    CHECK_THROWS_AS(inverse(r(5, 6)), domain_error);
    CHECK_THROWS_AS(inverse(r(5, 0)), domain_error);
}

TEST_CASE("pow") {
    // 3^6 = 729 by repeated multiplication
    cpp_int acc = 1;
    for (int i = 0; i < 6; ++i) acc *= 3;
    CHECK(acc % 32 == 25);
    CHECK(pow(r(5, 3), 6) == r(5, 25));
    CHECK(pow(r(5, 3), 0) == r(5, 1));
    CHECK(pow(r(77, 12345), 0) == r(77, 1));
    CHECK(pow(r(5, 3), 8) == r(5, 1));
    CHECK(pow(r(5, 3), r(5, 6)) == r(5, 25));
}

TEST_CASE("truncate") {
    CHECK(truncate(r(8, 0b10110111), Width(3)) == r(3, 0b111));
    CHECK(truncate(r(8, 201), Width(8)) == r(8, 201));
    CHECK(truncate(r(5, 25), Width(3)) == r(3, 1));
    CHECK_THROWS_AS(truncate(r(5, 25), Width(6)), usage_error);
}

TEST_CASE("bit") {
    CHECK(r(5, 7).bit(2));
    CHECK_FALSE(r(5, 7).bit(3));
    CHECK_FALSE(r(5, 9).bit(2));
    CHECK_THROWS_AS(r(5, 7).bit(5), usage_error);
}

TEST_CASE("hex and decimal text") {
    const Width w(8);
    CHECK(Residue::from_hex(w, "0x00b7") == r(8, 0xb7));
    CHECK(Residue::from_hex(w, "0XB7") == r(8, 0xb7));
    CHECK(r(8, 0xb7).to_hex() == "0xb7");
    CHECK(r(8, 0).to_hex() == "0x0");
    CHECK_THROWS_AS(Residue::from_hex(w, "b7"), usage_error);
    CHECK_THROWS_AS(Residue::from_hex(w, "0x"), usage_error);
    CHECK_THROWS_AS(Residue::from_hex(w, "0x1g"), usage_error);
    CHECK_THROWS_AS(Residue::from_hex(w, "0x100"), usage_error);
    CHECK(Residue::from_decimal(w, "255") == r(8, 255));
    CHECK_THROWS_AS(Residue::from_decimal(w, "256"), usage_error);
    CHECK_THROWS_AS(Residue::from_decimal(w, "-1"), usage_error);

    const Width wide(1024);
    const cpp_int v = (cpp_int(1) << 1022) + 987654321;
    const Residue x = test::residue(wide, v);
    CHECK(x.to_decimal() == v.str());
    CHECK(Residue::from_decimal(wide, v.str()) == x);
    CHECK(Residue::from_hex(wide, x.to_hex()) == x);
}

TEST_CASE("shifts, masks and trailing zeros") {
    CHECK(shift_left(r(8, 0b1011), 3) == r(8, 0b1011000));
    CHECK(shift_left(r(8, 0xff), 4) == r(8, 0xf0));
    CHECK(shift_right(r(8, 0xf0), 4) == r(8, 0x0f));
    CHECK(mask_low(r(8, 0xff), 3) == r(8, 7));
    CHECK(r(8, 12).trailing_zeros() == 2);
    CHECK(r(8, 0).trailing_zeros() == 8);
    CHECK(Residue::power_of_two(Width(130), 129).trailing_zeros() == 129);
    CHECK(Residue::power_of_two(Width(8), 8).is_zero());
}

TEST_CASE("arithmetic matches arbitrary precision at random widths") {
    std::mt19937_64 rng(20261018);
    for (int iter = 0; iter < 400; ++iter) {
        const Width w(test::random_width(rng, 3, 700));
        const cpp_int m = cpp_int(1) << w.bits();
        const Residue a = test::random_residue(w, rng);
        const Residue b = test::random_residue(w, rng);
        REQUIRE(big(add(a, b)) == (big(a) + big(b)) % m);
        REQUIRE(big(sub(a, b)) == (big(a) - big(b) + m) % m);
        REQUIRE(big(mul(a, b)) == (big(a) * big(b)) % m);
        REQUIRE(big(neg(a)) == (m - big(a)) % m);
        const unsigned e = static_cast<unsigned>(rng() % 1000);
        REQUIRE(big(pow(a, e)) == boost::multiprecision::powm(big(a), cpp_int(e), m));
        const unsigned n = static_cast<unsigned>(rng() % (w.bits() + 5));
        REQUIRE(big(shift_left(a, n)) == (big(a) << n) % m);
        REQUIRE(big(shift_right(a, n)) == big(a) >> n);
    }
}

TEST_CASE("digit inheritance of add, mul and pow") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 200; ++iter) {
        const Width w(test::random_width(rng, 3, 260));
        const Residue x = test::random_residue(w, rng);
        const Residue y = test::random_residue(w, rng);
        const std::uint64_t e = rng() % 5000;
        const Width j(test::random_width(rng, 3, w.bits()));
        const Residue xj = truncate(x, j);
        const Residue yj = truncate(y, j);
        REQUIRE(truncate(add(x, y), j) == add(xj, yj));
        REQUIRE(truncate(mul(x, y), j) == mul(xj, yj));
        REQUIRE(truncate(pow(x, e), j) == pow(xj, e));
    }
}

TEST_CASE("negation and inverse are involutions") {
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 300; ++iter) {
        const Width w(test::random_width(rng, 3, 4096));
        const Residue a = test::random_odd(w, rng);
        REQUIRE(neg(neg(a)) == a);
        REQUIRE(add(a, neg(a)).is_zero());
        const Residue inv = inverse(a);
        REQUIRE(mul(a, inv) == Residue::one(w));
        REQUIRE(inverse(inv) == a);
    }
}

TEST_CASE("every odd residue has order dividing 2^(k-2)") {
    for (unsigned k = 3; k <= 10; ++k) {
        const Width w(k);
        const std::uint64_t exponent = std::uint64_t{1} << (k - 2);
        for (std::uint64_t a = 1; a < (std::uint64_t{1} << k); a += 2) {
            REQUIRE(pow(Residue::from_u64(w, a), exponent) == Residue::one(w));
        }
    }
}
