#include <doctest.h>

#include "linlay/bounds.hpp"

using namespace linlay;

TEST_CASE("deque density formula") {
    CHECK(max_edges_deque(10, 2) == 39);
    CHECK(max_edges_deque(3, 1) == 3);   // all of K3 fits one deque
    CHECK(max_edges_deque(5, 1) == 9);   // < 10 = |E(K5)|, so K5 needs 2 deques
    CHECK_THROWS_AS(max_edges_deque(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(max_edges_deque(5, 0), std::invalid_argument);
}

TEST_CASE("rique density formula") {
    CHECK(max_edges_rique(10, 2) == 47);
    CHECK(max_edges_rique(6, 1) == 16);  // >= 15 = |E(K6)|
    CHECK(max_edges_rique(3, 1) == 7);   // (2n+2)k - k^2 + (n-3) at (3,1)
    CHECK_THROWS_AS(max_edges_rique(2, 1), std::invalid_argument);
}

TEST_CASE("density coefficients recovered by finite differencing") {
    // Deque: linear in n with slope 2k+1 and intercept -5k-1.
    for (std::int64_t k = 1; k <= 6; ++k) {
        std::int64_t slope = max_edges_deque(11, k) - max_edges_deque(10, k);
        CHECK(slope == 2 * k + 1);
        CHECK(max_edges_deque(10, k) - slope * 10 == -5 * k - 1);
    }
    // Rique: quadratic in k; second difference -2, first coefficient 2n+2.
    for (std::int64_t n = 5; n <= 12; ++n) {
        std::int64_t d1 = max_edges_rique(n, 2) - max_edges_rique(n, 1);
        std::int64_t d2 = max_edges_rique(n, 3) - max_edges_rique(n, 2);
        CHECK(d2 - d1 == -2);
        CHECK(d1 == (2 * n + 2) - 3);  // (2n+2)(k+1)-(k+1)^2 - ((2n+2)k-k^2) at k=1
        CHECK(max_edges_rique(n, 1) == (2 * n + 2) - 1 + (n - 3));
    }
}

TEST_CASE("deque lower bound for complete graphs") {
    CHECK(deque_lower_bound_kn(8) == 2);  // ceil(42/22)
    CHECK(deque_lower_bound_kn(3) == 1);
    CHECK(deque_lower_bound_kn(1000) == 250);
    CHECK_THROWS_AS(deque_lower_bound_kn(2), std::invalid_argument);
}

TEST_CASE("ceiling identity holds over a large range") {
    CHECK(check_ceiling_identity(100));
    CHECK(check_ceiling_identity(100000));
}

TEST_CASE("density lower bound inverts the formulas") {
    CHECK(density_lower_bound(5, 10, LayoutKind::Deque) == 2);
    CHECK(density_lower_bound(5, 0, LayoutKind::Deque) == 1);
    CHECK(density_lower_bound(30, 435, LayoutKind::Rique) <= 9);
    CHECK_THROWS_AS(density_lower_bound(5, 1, LayoutKind::Stack), std::invalid_argument);
    for (std::int64_t n = 3; n <= 200; ++n) {
        std::int64_t m = n * (n - 1) / 2;
        CHECK(density_lower_bound(n, m, LayoutKind::Deque) == ceil_div(n, 4));
    }
}

TEST_CASE("exact ceil division") {
    CHECK(ceil_div(0, 4) == 0);
    CHECK(ceil_div(1, 4) == 1);
    CHECK(ceil_div(4, 4) == 1);
    CHECK(ceil_div(5, 4) == 2);
    CHECK_THROWS_AS(ceil_div(1, 0), std::invalid_argument);
}
