#include "doctest.h"

#include <array>
#include <string>

#include "fano4/errors.hpp"
#include "fano4/threefolds.hpp"

using namespace fano4;

namespace {

Int binomial(Int n, Int k) {
    Int out = 1;
    for (Int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

}  // namespace

TEST_SUITE("threefolds") {

TEST_CASE("the six base rows") {
    const auto table = base_table();
    REQUIRE(table.size() == 6);

    constexpr std::array<Int, 6> degrees{64, 48, 40, 40, 32, 30};
    constexpr std::array<int, 6> rhos{1, 2, 1, 2, 2, 2};
    constexpr std::array<ThreefoldKind, 6> kinds{
        ThreefoldKind::Fano,     ThreefoldKind::Fano,     ThreefoldKind::Fano,
        ThreefoldKind::WeakFano, ThreefoldKind::WeakFano, ThreefoldKind::Fano};
    for (std::size_t i = 0; i < 6; ++i) {
        CAPTURE(i);
        CHECK(table[i].minus_k3 == degrees[i]);
        CHECK(table[i].rho == rhos[i]);
        CHECK(table[i].kind == kinds[i]);
        CHECK(table[i].minus_k3 <= kDegreeCap);
        if (i > 0) CHECK(table[i].minus_k3 <= kDegreeCapBeyondP3);
    }
    CHECK(table[0].name == "P3");
    CHECK(table[1].name == "P(T_P2)");
    CHECK(table[2].name == "Gr(2,5) linear section");
    CHECK(table[5].name == "(1,2) divisor in P2xP2");
}

TEST_CASE("point blow-ups on a 3-fold: -K^3 drops by 8, rho grows by 1") {
    const ThreefoldRecord p3 = base_table().front();
    const ThreefoldRecord y = blow_up_point3(p3, 3);
    CHECK(y.minus_k3 == 40);
    CHECK(y.rho == 4);
    CHECK(y.kind == p3.kind);
    CHECK(blow_up_point3(p3, 0) == p3);

    SUBCASE("composition is additive") {
        CHECK(blow_up_point3(blow_up_point3(p3, 2), 4) == blow_up_point3(p3, 6));
    }
    SUBCASE("the degree must stay strictly positive") {
        CHECK(blow_up_point3(p3, 7).minus_k3 == 8);
        CHECK_THROWS_AS((void)blow_up_point3(p3, 8), precondition_error);
        CHECK_THROWS_AS((void)blow_up_point3(p3, -1), precondition_error);
    }
}

TEST_CASE("anticanonical sections: h0 = -K^3/2 + 3") {
    const ThreefoldRecord p3 = base_table().front();
    CHECK(h0_minus_k(p3) == 35);
    CHECK(h0_minus_k(p3) == binomial(7, 3));  // cubics on P^3, independently
    CHECK(h0_minus_k(blow_up_point3(p3, 7)) == 7);

    const ThreefoldRecord odd{"odd degree", 7, 1, ThreefoldKind::Fano};
    CHECK_THROWS_AS((void)h0_minus_k(odd), precondition_error);
}

TEST_CASE("elementary bound scan with minimum 6 keeps all six rows") {
    const ScanResult scan = elementary_bound_scan(6);
    REQUIRE(scan.rows.size() == 6);
    CHECK(scan.global_max_rho == 9);

    constexpr std::array<Int, 6> r_max{7, 5, 4, 4, 3, 3};
    constexpr std::array<int, 6> rho_x{9, 8, 6, 7, 6, 6};
    for (std::size_t i = 0; i < 6; ++i) {
        CAPTURE(i);
        CHECK(scan.rows[i].base == base_table()[i]);
        CHECK(scan.rows[i].r_max == r_max[i]);
        CHECK(scan.rows[i].rho_x == rho_x[i]);
        // consistency: blowing up r_max points is legal, one more is not
        CHECK_NOTHROW((void)blow_up_point3(scan.rows[i].base, scan.rows[i].r_max));
        CHECK_THROWS_AS((void)blow_up_point3(scan.rows[i].base, scan.rows[i].r_max + 1),
                        precondition_error);
    }
}

TEST_CASE("the scan filter drops rows but not the global maximum") {
    const ScanResult tight = elementary_bound_scan(7);
    REQUIRE(tight.rows.size() == 3);
    CHECK(tight.rows[0].base.name == "P3");
    CHECK(tight.rows[1].base.name == "P(T_P2)");
    CHECK(tight.rows[2].rho_x == 7);
    CHECK(tight.global_max_rho == 9);

    const ScanResult empty = elementary_bound_scan(10);
    CHECK(empty.rows.empty());
    CHECK(empty.global_max_rho == 9);
}

TEST_CASE("kind names") {
    CHECK(std::string(to_string(ThreefoldKind::Fano)) == "Fano");
    CHECK(std::string(to_string(ThreefoldKind::WeakFano)) == "weak Fano");
}

}  // TEST_SUITE("threefolds")
