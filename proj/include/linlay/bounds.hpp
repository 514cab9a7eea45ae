#ifndef LINLAY_BOUNDS_HPP
#define LINLAY_BOUNDS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include "linlay/layout.hpp"

namespace linlay {

// All bounds arithmetic is exact 64-bit integer arithmetic; no floating
// point anywhere near a ceiling.
inline std::int64_t ceil_div(std::int64_t num, std::int64_t den) {
    if (den <= 0) throw std::invalid_argument("ceil_div: denominator must be positive");
    if (num < 0) throw std::invalid_argument("ceil_div: negative numerator unsupported");
    return (num + den - 1) / den;
}

// Maximum edge count of an n-vertex graph admitting a k-page deque layout:
// (2k+1)n - 5k - 1. Each deque carries at most 2n-5 non-spine edges and the
// n-1 spine edges are counted once.
inline std::int64_t max_edges_deque(std::int64_t n, std::int64_t k) {
    if (n < 3) throw std::invalid_argument("max_edges_deque: need n >= 3");
    if (k < 1) throw std::invalid_argument("max_edges_deque: need k >= 1");
    return (2 * k + 1) * n - 5 * k - 1;
}

// Maximum edge count of an n-vertex graph admitting a k-page rique layout:
// (2n+2)k - k^2 + (n-3). Quadratic in k; increasing for k <= n+1, which is
// the only meaningful branch (more pages never hold fewer edges).
inline std::int64_t max_edges_rique(std::int64_t n, std::int64_t k) {
    if (n < 3) throw std::invalid_argument("max_edges_rique: need n >= 3");
    if (k < 1) throw std::invalid_argument("max_edges_rique: need k >= 1");
    return (2 * n + 2) * k - k * k + (n - 3);
}

// Deque lower bound for K_n: ceil((n^2 - 3n + 2) / (4n - 10)).
inline std::int64_t deque_lower_bound_kn(std::int64_t n) {
    if (n < 3) throw std::invalid_argument("deque_lower_bound_kn: need n >= 3");
    return ceil_div(n * n - 3 * n + 2, 4 * n - 10);
}

// Verifies ceil((n^2-3n+2)/(4n-10)) == ceil(n/4) for all 3 <= n <= n_max.
inline bool check_ceiling_identity(std::int64_t n_max) {
    if (n_max < 3) throw std::invalid_argument("check_ceiling_identity: need n_max >= 3");
    for (std::int64_t n = 3; n <= n_max; ++n)
        if (deque_lower_bound_kn(n) != ceil_div(n, 4)) return false;
    return true;
}

// Least k with max_edges(n, k) >= m; the density formulas inverted. Defined
// for Deque and Rique. m = 0 still reports 1: a layout has at least a page.
inline std::int64_t density_lower_bound(std::int64_t n, std::int64_t m, LayoutKind kind) {
    if (n < 3) throw std::invalid_argument("density_lower_bound: need n >= 3");
    if (m < 0) throw std::invalid_argument("density_lower_bound: need m >= 0");
    if (kind != LayoutKind::Deque && kind != LayoutKind::Rique)
        throw std::invalid_argument("density_lower_bound: defined for deque and rique only");
    if (m == 0) return 1;
    if (kind == LayoutKind::Deque) {
        for (std::int64_t k = 1;; ++k)
            if (max_edges_deque(n, k) >= m) return k;
    }
    // Rique: restrict to the increasing branch k <= n+1.
    for (std::int64_t k = 1; k <= n + 1; ++k)
        if (max_edges_rique(n, k) >= m) return k;
    throw std::invalid_argument("density_lower_bound: m exceeds every rique capacity at n=" +
                                std::to_string(n));
}

struct BoundsReport {
    std::int64_t n = 0;
    std::int64_t m = 0;
    LayoutKind kind = LayoutKind::Deque;
    std::int64_t max_edges_one_page = 0;
    std::int64_t lower_bound_pages = 0;
    bool identity_checked = false;
};

inline BoundsReport bounds_report(std::int64_t n, std::int64_t m, LayoutKind kind) {
    BoundsReport r;
    r.n = n;
    r.m = m;
    r.kind = kind;
    r.max_edges_one_page =
        kind == LayoutKind::Deque ? max_edges_deque(n, 1) : max_edges_rique(n, 1);
    r.lower_bound_pages = density_lower_bound(n, m, kind);
    r.identity_checked = kind == LayoutKind::Deque ? check_ceiling_identity(n) : false;
    return r;
}

}  // namespace linlay

#endif
