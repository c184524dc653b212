#include <doctest.h>

#include <array>
#include <random>

#include "cyclo/errors.hpp"
#include "cyclo/oracle.hpp"
#include "cyclo/residue.hpp"
#include "cyclo/ternary.hpp"

using namespace cyclo;

TEST_CASE("triple construction derives the residue constants") {
    const auto t = TernaryTriple::make(3, 5, 7);
    CHECK(t.q_p_star == 2);  // 5*2 = 10 = 1 (mod 3)
    CHECK(t.r_p_star == 1);  // 7 = 1 (mod 3)
    CHECK(t.p_q_star == 2);  // 3*2 = 6 = 1 (mod 5)
    CHECK(t.q_bar_p == 2);
    CHECK(t.phi == 48);
    CHECK(t.n() == 105);

    CHECK_THROWS_AS((TernaryTriple::make(3, 7, 5)), std::invalid_argument);
    CHECK_THROWS_AS((TernaryTriple::make(2, 5, 7)), std::invalid_argument);
    CHECK_THROWS_AS((TernaryTriple::make(3, 5, 15)), std::invalid_argument);
}

TEST_CASE("per-coefficient evaluation at (3,5,7)") {
    const auto t = TernaryTriple::make(3, 5, 7);
    const auto s = lam_leung_support(3, 5);
    CHECK(ternary_coefficient(t, s, 0) == 1);
    CHECK(ternary_coefficient(t, s, 7) == -2);
    CHECK(ternary_coefficient(t, s, 48) == 1);
    CHECK(ternary_coefficient(t, s, -1) == 0);
    CHECK(ternary_coefficient(t, s, 49) == 0);
}

TEST_CASE("mismatched support is rejected") {
    const auto t = TernaryTriple::make(3, 5, 7);
    const auto wrong = lam_leung_support(3, 7);
    CHECK_THROWS_AS((ternary_coefficient(t, wrong, 0)), std::invalid_argument);
    CHECK_THROWS_AS((ternary_all_coefficients(t, wrong)), std::invalid_argument);
}

TEST_CASE("full vector equals the product route at (3,5,7) and (3,5,11)") {
    {
        const auto t = TernaryTriple::make(3, 5, 7);
        const auto poly = ternary_all_coefficients(t, lam_leung_support(3, 5));
        CHECK(poly.degree() == 48);
        CHECK(poly.max_abs() == 2);
        CHECK(same_coefficients(poly, cyclotomic_oracle(105)));
        for (std::int64_t i = 0; i <= 48; ++i) {
            CHECK(poly.at(i) == poly.at(48 - i));
        }
    }
    {
        const auto t = TernaryTriple::make(3, 5, 11);
        const auto poly = ternary_all_coefficients(t, lam_leung_support(3, 5));
        CHECK(poly.max_abs() <= 2);
        CHECK(same_coefficients(poly, cyclotomic_oracle(165)));
    }
}

TEST_CASE("windowed path equals per-coefficient path") {
    for (const auto& e : std::vector<std::array<std::int64_t, 3>>{
             {3, 5, 7}, {3, 5, 11}, {3, 7, 11}, {5, 7, 11}, {5, 7, 13}, {7, 11, 13}}) {
        const auto t = TernaryTriple::make(e[0], e[1], e[2]);
        const auto s = lam_leung_support(t.p, t.q);
        const auto fast = ternary_all_coefficients(t, s);
        for (std::int64_t i = 0; i <= t.phi; ++i) {
            CAPTURE(t.n());
            CAPTURE(i);
            CHECK(fast.at(i) == ternary_coefficient(t, s, i));
        }
    }
}

TEST_CASE("height report") {
    {
        const auto t = TernaryTriple::make(3, 5, 7);
        const auto report = height(t, lam_leung_support(3, 5));
        CHECK(report.height == 2);
        CHECK(report.witness_exponent == 7);
        CHECK_FALSE(report.partial_sum_max.has_value());
    }
    {
        const auto t = TernaryTriple::make(5, 7, 11);
        const auto report = height(t, lam_leung_support(5, 7), /*with_partial_sum=*/true);
        CHECK(report.height <= 3);
        CHECK(report.height == height_oracle(385));
        REQUIRE(report.partial_sum_max.has_value());
        CHECK(*report.partial_sum_max >= report.height);
    }
}

TEST_CASE("untruncated kernel sum vanishes") {
    {
        const auto t = TernaryTriple::make(3, 5, 7);
        const auto s = lam_leung_support(3, 5);
        for (std::int64_t i = 0; i <= 14; ++i) {
            CHECK(zero_sum_residual(t, s, i) == 0);
        }
    }
    {
        const auto t = TernaryTriple::make(5, 7, 11);
        const auto s = lam_leung_support(5, 7);
        std::mt19937_64 rng(42);
        for (int trial = 0; trial < 100; ++trial) {
            const std::int64_t i = static_cast<std::int64_t>(rng() % 2000001) - 1000000;
            CHECK(zero_sum_residual(t, s, i) == 0);
        }
    }
}

TEST_CASE("truncated-sum maximum dominates the height") {
    for (const auto& e : std::vector<std::array<std::int64_t, 3>>{
             {3, 5, 7}, {3, 5, 11}, {5, 7, 11}, {5, 7, 13}, {7, 11, 13}, {7, 13, 19}}) {
        const auto t = TernaryTriple::make(e[0], e[1], e[2]);
        const auto s = lam_leung_support(t.p, t.q);
        const auto bound = max_partial_sum(t, s);
        const auto report = height(t, s);
        CAPTURE(t.n());
        CHECK(bound >= report.height);
    }
    // At (3,5,7) the dominated height is 2, so the max is at least 2.
    const auto t = TernaryTriple::make(3, 5, 7);
    CHECK(max_partial_sum(t, lam_leung_support(3, 5)) >= 2);
}

TEST_CASE("class partition") {
    const auto t = TernaryTriple::make(3, 5, 7);
    const auto s = lam_leung_support(3, 5);

    // A cut below the entire support leaves no strict-side witness.
    for (std::int64_t i = 0; i <= 14; ++i) {
        const auto partition = classify_classes(t, s, i, -1);
        CHECK(partition.special.empty());
        CHECK(partition.classes.size() == 3);
    }

    // Median support cut: partition always covers exactly p labels.
    const auto partition = classify_classes(t, s, 7, 4);
    CHECK(partition.special.size() + partition.plain.size() + partition.null_.size() == 3);
    CHECK(partition.classes.size() == 3);

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const std::int64_t i = static_cast<std::int64_t>(rng() % 200) - 50;
        const std::int64_t j = static_cast<std::int64_t>(rng() % 30) - 10;
        const auto part = classify_classes(t, s, i, j);
        CHECK(part.special.size() + part.plain.size() + part.null_.size() == 3);
        // Labels 0..q_p_star-1 are plain-side, the rest mirrored.
        for (const auto& info : part.classes) {
            CHECK(info.mirrored == (info.label >= t.q_p_star));
            if (info.kind == ClassKind::Special) {
                REQUIRE(info.ge_witness.has_value());
                REQUIRE(info.lt_witness.has_value());
                CHECK(info.ge_witness->exponent >= j);
                CHECK(info.lt_witness->exponent < j);
            }
        }
    }
}

TEST_CASE("degree cap is enforced") {
    const auto t = TernaryTriple::make(3, 5, 7);
    const auto s = lam_leung_support(3, 5);
    CHECK_THROWS_AS((ternary_all_coefficients(t, s, 47)), ResourceLimitError);
    CHECK_NOTHROW(ternary_all_coefficients(t, s, 48));
}
