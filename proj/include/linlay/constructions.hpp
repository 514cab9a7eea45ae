#ifndef LINLAY_CONSTRUCTIONS_HPP
#define LINLAY_CONSTRUCTIONS_HPP

#include <algorithm>
#include <climits>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "linlay/graph.hpp"
#include "linlay/layout.hpp"
#include "linlay/verify.hpp"

namespace linlay {

// The explicit generators below reproduce published per-page edge lists.
// Each family needs its index ranges to be nonempty and disjoint, which
// only happens from a minimal size onward; the constants were found by
// sweeping n upward under the validator and are locked in by tests.
inline constexpr int kRiqueKnMinMod0 = 21;  // n % 3 == 0
inline constexpr int kRiqueKnMaxMod0 = 30;  // scheme breaks past this, see corrections
inline constexpr int kRiqueKnMinMod1 = 10;  // n % 3 == 1, no upper cap
inline constexpr int kRiqueKnMinMod2 = 20;  // n % 3 == 2, window [20, 29] via n+1
inline constexpr int kDequeKnnMin = 39;     // n % 3 == 0; smaller n padded
inline constexpr int kRiqueKnnMinOdd = 27;
inline constexpr int kRiqueKnnMinEven = 28;

// Requested size is below the family's minimum; the SAT route
// (encode / page_number_search) handles small instances instead.
class UnsupportedSizeError : public std::invalid_argument {
public:
    explicit UnsupportedSizeError(const std::string& what) : std::invalid_argument(what) {}
};

namespace detail {

// Assembles pages from 1-indexed vertex formulas. Self-pairs in a printed
// range are skipped; orientation is normalized.
class KnBuilder {
public:
    KnBuilder(int n, int pages) : n_(n), pages_(pages) {}

    void add(int page, int u, int v, EdgeType t) {
        if (u == v) return;
        pages_[page - 1].edges.emplace_back(u - 1, v - 1, t);
    }
    // (v_i, v_j) for j = j_lo..j_hi
    void run_j(int page, int i, int j_lo, int j_hi, EdgeType t) {
        for (int j = j_lo; j <= j_hi; ++j) add(page, i, j, t);
    }
    // (v_i, v_j) for i = i_lo..i_hi
    void run_i(int page, int i_lo, int i_hi, int j, EdgeType t) {
        for (int i = i_lo; i <= i_hi; ++i) add(page, i, j, t);
    }

    std::vector<Page>&& take_pages() && { return std::move(pages_); }

private:
    int n_;
    std::vector<Page> pages_;
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Complete graphs: stacks, merged deques.
// ---------------------------------------------------------------------------

// Classic ceil(n/2)-stack layout of K_n: page i holds the zig-zag
// Hamiltonian path i, i+1, i-1, i+2, ... (mod n). For odd n the layout of
// K_{n+1} is built and the phantom vertex dropped, keeping the page count.
inline LinearLayout stack_layout_kn(int n) {
    if (n < 2) throw std::invalid_argument("stack_layout_kn: need n >= 2");
    const int even_n = n % 2 == 0 ? n : n + 1;
    const int num_pages = even_n / 2;
    std::vector<Page> pages(num_pages);
    for (int p = 0; p < num_pages; ++p) {
        std::vector<int> path;
        path.reserve(even_n);
        path.push_back(p);
        for (int k = 1; k <= even_n / 2; ++k) {
            path.push_back(((p + k) % even_n + even_n) % even_n);
            if (static_cast<int>(path.size()) == even_n) break;
            path.push_back(((p - k) % even_n + even_n) % even_n);
        }
        for (std::size_t s = 0; s + 1 < path.size(); ++s) {
            int u = path[s], v = path[s + 1];
            if (u >= n || v >= n) continue;  // phantom vertex of odd n
            pages[p].edges.emplace_back(u, v, EdgeType::HH);
        }
    }
    return {Graph::complete(n), VertexOrder::natural(n), std::move(pages), LayoutKind::Stack};
}

// Pairs consecutive stacks into deques: the first stack of each pair keeps
// its edges above the spine (hh), the second moves below (tt). hh and tt
// edges never interact, so validity is inherited.
inline LinearLayout merge_stacks_to_deques(const LinearLayout& stacks) {
    if (stacks.kind != LayoutKind::Stack)
        throw std::invalid_argument("merge_stacks_to_deques: input must be a stack layout");
    LinearLayout out;
    out.graph = stacks.graph;
    out.order = stacks.order;
    out.kind = LayoutKind::Deque;
    out.pages.resize((stacks.pages.size() + 1) / 2);
    for (std::size_t p = 0; p < stacks.pages.size(); ++p) {
        EdgeType t = p % 2 == 0 ? EdgeType::HH : EdgeType::TT;
        for (const TypedEdge& e : stacks.pages[p].edges)
            out.pages[p / 2].edges.emplace_back(e.u, e.v, t);
    }
    return out;
}

// ceil(n/4)-deque layout of K_n by merging the stack layout pairwise.
inline LinearLayout deque_layout_kn(int n) {
    if (n < 2) throw std::invalid_argument("deque_layout_kn: need n >= 2");
    return merge_stacks_to_deques(stack_layout_kn(n));
}

// ---------------------------------------------------------------------------
// Rique layouts of K_n with max(1, floor((n-1)/3)) pages.
// Three congruence cases with distinct page schemes. Deviations from the
// published lists are single-line corrections; see docs/corrections.md.
// ---------------------------------------------------------------------------

namespace detail {

// n % 3 == 1, m = (n-1)/3 pages: special pages 1, 2 and m, uniform in between.
inline std::vector<Page> rique_kn_mod1(int n) {
    const int m = (n - 1) / 3;
    KnBuilder b(n, m);
    const EdgeType HT = EdgeType::HT, HH = EdgeType::HH;

    b.run_j(1, 1, 2, n, HT);
    b.run_i(1, 2, m + 1, n, HT);
    b.run_j(1, m + 1, m + 2, 2 * m + 1, HH);
    b.run_j(1, 2 * m + 1, 2 * m + 2, n, HH);
    b.add(1, n - 1, n, HH);

    b.run_j(2, 2, 3, n - 1, HT);
    b.run_i(2, 3, m + 1, n - 1, HT);
    b.run_j(2, m + 2, n - 1, n, HT);
    b.run_j(2, m + 2, m + 3, n - 2, HH);
    b.run_j(2, n - 2, n - 1, n, HH);

    for (int p = 3; p <= m - 1; ++p) {
        b.run_j(p, p, p + 1, n - p + 1, HT);
        b.run_i(p, p + 1, m + 1, n - p + 1, HT);
        b.run_j(p, m + p, n - p + 1, n, HT);
        b.run_j(p, m + p, m + p + 1, n - p, HH);
        b.run_j(p, n - p, n - p + 1, n, HH);
    }

    b.run_j(m, m, m + 1, 2 * m + 2, HT);
    b.add(m, m + 1, 2 * m + 2, HT);
    b.run_j(m, 2 * m, 2 * m + 1, n, HH);

    return std::move(b).take_pages();
}

// n % 3 == 0, t = n/3, t-1 pages: special pages 1,2,3 and t-3..t-1,
// uniform pages 4..t-4.
inline std::vector<Page> rique_kn_mod0(int n) {
    const int t = n / 3;
    KnBuilder b(n, t - 1);
    const EdgeType HT = EdgeType::HT, HH = EdgeType::HH;

    b.run_j(1, 1, 2, n, HT);
    b.run_i(1, 2, t, n, HT);
    b.run_j(1, t, t + 1, 2 * t + 1, HH);
    b.run_j(1, 2 * t + 1, 2 * t + 2, n, HH);
    b.add(1, n - 1, n, HH);

    b.run_j(2, 2, 3, n - 1, HT);
    b.run_i(2, 3, t + 1, n - 1, HT);
    b.add(2, t + 1, n, HT);
    b.run_j(2, t + 1, t + 2, 2 * t, HH);
    b.run_j(2, 2 * t, 2 * t + 1, n, HH);

    b.run_j(3, 3, 4, n - 2, HT);
    b.run_i(3, 4, t + 1, n - 2, HT);
    b.run_j(3, 2 * t + 2, n - 2, n, HT);
    b.add(3, t + 1, 2 * t + 1, HH);
    b.run_j(3, t + 2, 2 * t - 1, 2 * t + 1, HH);
    b.run_j(3, t + 3, t + 4, 2 * t - 1, HH);
    b.run_j(3, 2 * t + 2, 2 * t + 3, n - 3, HH);
    b.run_j(3, n - 3, n - 2, n, HH);

    for (int p = 4; p <= t - 4; ++p) {
        b.run_j(p, p, p + 1, n - p + 1, HT);
        b.run_i(p, p + 1, t + 1, n - p + 1, HT);
        b.run_j(p, t + p + 1, n - p + 1, n, HT);
        b.run_j(p, t + p + 1, 2 * t + p - 2, n - p, HH);
        b.run_j(p, n - p, n - p + 1, n, HH);  // row n-p, not n-p+1: see corrections
        b.run_j(p, t + p + 2, t + p + 3, 2 * t + p - 2, HH);
    }

    b.run_j(t - 3, t - 3, t - 2, 2 * t + 4, HT);
    b.run_i(t - 3, t - 2, t + 1, 2 * t + 4, HT);
    b.run_j(t - 3, t + 3, 2 * t + 4, n - 1, HT);
    b.run_j(t - 3, 2 * t + 3, n - 1, n, HT);
    b.run_j(t - 3, t + 3, 2 * t, 2 * t + 3, HH);
    b.run_j(t - 3, t + 4, t + 5, 2 * t, HH);
    b.run_j(t - 3, 2 * t + 3, 2 * t + 3, n - 2, HH);
    b.run_j(t - 3, n - 2, n - 1, n, HH);

    b.run_j(t - 2, t - 2, t - 1, 2 * t + 3, HT);
    b.run_i(t - 2, t - 1, t + 1, 2 * t + 3, HT);
    b.run_j(t - 2, t + 2, 2 * t + 3, n, HT);
    b.add(t - 2, t + 3, n, HT);
    b.run_j(t - 2, t + 4, 2 * t + 1, n, HH);
    b.run_j(t - 2, t + 5, t + 6, 2 * t + 1, HH);

    b.run_j(t - 1, t - 1, t, 2 * t + 2, HT);
    b.run_i(t - 1, t, t + 2, 2 * t + 2, HT);
    b.run_j(t - 1, 2 * t - 2, n - 5, n, HT);
    b.run_j(t - 1, t + 2, t + 3, 2 * t - 2, HH);
    b.run_j(t - 1, 2 * t - 1, 2 * t, n, HH);

    return std::move(b).take_pages();
}

}  // namespace detail

// Rique layout of K_n with max(1, floor((n-1)/3)) pages.
//
// Supported sizes: n % 3 == 1 from kRiqueKnMinMod1 upward with no upper cap;
// n % 3 == 0 on [kRiqueKnMinMod0, kRiqueKnMaxMod0] (the published page
// scheme's middle-band tiling self-intersects beyond that window, see
// docs/corrections.md); n % 3 == 2 on the window shifted down by one,
// realized by building one size up and dropping the last vertex, which
// keeps exactly floor((n-1)/3) pages.
inline LinearLayout rique_layout_kn(int n) {
    if (n < 2) throw std::invalid_argument("rique_layout_kn: need n >= 2");
    const int rem = n % 3;
    auto unsupported = [&](int lo, int hi) {
        throw UnsupportedSizeError(
            "rique_layout_kn: the explicit construction for n % 3 == " + std::to_string(rem) +
            " covers " + std::to_string(lo) + " <= n <= " + std::to_string(hi) +
            " (got n = " + std::to_string(n) + "); use the SAT route for other sizes");
    };
    if (rem == 1) {
        if (n < kRiqueKnMinMod1) unsupported(kRiqueKnMinMod1, 0x7fffffff);
        return {Graph::complete(n), VertexOrder::natural(n), detail::rique_kn_mod1(n),
                LayoutKind::Rique};
    }
    if (rem == 0) {
        if (n < kRiqueKnMinMod0 || n > kRiqueKnMaxMod0)
            unsupported(kRiqueKnMinMod0, kRiqueKnMaxMod0);
        return {Graph::complete(n), VertexOrder::natural(n), detail::rique_kn_mod0(n),
                LayoutKind::Rique};
    }
    // n % 3 == 2: restrict the (n+1)-vertex layout to its first n vertices.
    if (n + 1 < kRiqueKnMinMod0 || n + 1 > kRiqueKnMaxMod0)
        unsupported(kRiqueKnMinMod0 - 1, kRiqueKnMaxMod0 - 1);
    LinearLayout big{Graph::complete(n + 1), VertexOrder::natural(n + 1),
                     detail::rique_kn_mod0(n + 1), LayoutKind::Rique};
    std::vector<int> keep(n);
    std::iota(keep.begin(), keep.end(), 0);
    return induced_sublayout(big, keep);
}

// ---------------------------------------------------------------------------
// Complete bipartite labels and orders.
// ---------------------------------------------------------------------------

// K_{n,n} vertex naming: part A is a_1..a_n (ids 0..n-1), part B is
// b_1..b_n (ids n..2n-1).
struct BipartiteLabels {
    int n;
    explicit BipartiteLabels(int part_size) : n(part_size) {
        if (part_size < 1) throw std::invalid_argument("BipartiteLabels: need n >= 1");
    }
    int a(int i) const { return i - 1; }      // 1-based
    int b(int j) const { return n + j - 1; }  // 1-based
};

namespace detail {

// Assembles K_{n,n} pages from 1-indexed (a_i, b_j) formulas.
class KnnBuilder {
public:
    KnnBuilder(int n, int pages) : labels_(n), pages_(pages) {}

    void add(int page, int i, int j, EdgeType t) {
        pages_[page - 1].edges.emplace_back(labels_.a(i), labels_.b(j), t);
    }
    // (a_i, b_j) for j = j_lo..j_hi (also accepts j_hi < j_lo as descending)
    void run_j(int page, int i, int j_lo, int j_hi, EdgeType t) {
        for (int j = std::min(j_lo, j_hi); j <= std::max(j_lo, j_hi); ++j)
            add(page, i, j, t);
    }
    // (a_i, b_j) for i = i_lo..i_hi
    void run_i(int page, int i_lo, int i_hi, int j, EdgeType t) {
        for (int i = std::min(i_lo, i_hi); i <= std::max(i_lo, i_hi); ++i)
            add(page, i, j, t);
    }
    // Column staircase: for each j, the two edges (a_{i0-(j-j_lo)}, b_j) and
    // (a_{i0-(j-j_lo)-1}, b_j); the row index walks down as j walks right.
    void stair_cols(int page, int i0, int j_lo, int j_hi, EdgeType t) {
        for (int j = j_lo; j <= j_hi; ++j) {
            int i = i0 - (j - j_lo);
            add(page, i, j, t);
            add(page, i - 1, j, t);
        }
    }
    // Row staircase: for each j, the two edges (a_i, b_j), (a_i, b_{j+1})
    // with i walking down as j walks right.
    void stair_rows(int page, int i0, int j_lo, int j_hi, EdgeType t) {
        for (int j = j_lo; j <= j_hi; ++j) {
            int i = i0 - (j - j_lo);
            add(page, i, j, t);
            add(page, i, j + 1, t);
        }
    }

    std::vector<Page>&& take_pages() && { return std::move(pages_); }

private:
    BipartiteLabels labels_;
    std::vector<Page> pages_;
};

}  // namespace detail

namespace detail {

// Spine order for the deque layout of K_{n,n}, n divisible by 3:
// a_1..a_{n/3}, b_1..b_{2n/3}, a_{n/3+1}..a_n, b_{2n/3+1}..b_n.
inline VertexOrder deque_knn_order(int n) {
    BipartiteLabels L(n);
    const int t = n / 3;
    std::vector<int> seq;
    seq.reserve(2 * n);
    for (int i = 1; i <= t; ++i) seq.push_back(L.a(i));
    for (int j = 1; j <= 2 * t; ++j) seq.push_back(L.b(j));
    for (int i = t + 1; i <= n; ++i) seq.push_back(L.a(i));
    for (int j = 2 * t + 1; j <= n; ++j) seq.push_back(L.b(j));
    return VertexOrder(std::move(seq));
}

inline std::vector<Page> deque_knn_pages(int n) {
    const int t = n / 3;
    KnnBuilder b(n, t);
    const EdgeType HH = EdgeType::HH, TT = EdgeType::TT, HT = EdgeType::HT, TH = EdgeType::TH;

    // Page 1.
    b.run_j(1, 1, 2 * t + 4, n, HH);
    b.add(1, 1, 6, HH);
    b.run_j(1, 2, 1, 6, HH);
    b.run_j(1, t + 8, 8, 10, HH);
    b.run_i(1, t + 1, t + 7, 10, HH);
    b.run_i(1, t + 8, n, 2 * t + 4, HH);
    b.run_j(1, 2, n - 2, n, TT);
    b.run_i(1, t - 2, t, 2 * t + 5, TT);
    b.run_j(1, t, 2 * t + 1, 2 * t + 2, TT);
    b.add(1, n, 1, TT);
    b.add(1, n, 2, TT);
    b.add(1, n - 1, 2, TT);
    b.stair_cols(1, n - 1, 4, t, TT);
    b.run_i(1, 2 * t + 1, 2 * t + 2, t, TT);
    b.run_j(1, 2 * t + 1, t + 1, t + 3, TT);
    b.run_i(1, t + 1, 2 * t, t + 3, TT);

    // Page 2.
    b.add(2, 1, 2 * t + 3, HT);
    b.run_j(2, 2, 2 * t + 3, n - 3, HT);
    b.run_j(2, 3, n - 3, n - 1, HT);
    b.run_i(2, 3, t, n, HT);
    b.run_i(2, n - 4, n - 3, 1, HH);
    b.run_i(2, n - 5, n - 4, 2, HH);
    b.stair_cols(2, n - 5, 4, t - 2, HH);
    b.run_i(2, 2 * t - 1, 2 * t + 1, t - 2, HH);
    b.run_j(2, 2 * t - 1, t - 1, t, HH);
    b.run_i(2, t + 1, 2 * t - 1, t + 1, HH);
    b.run_i(2, n - 3, n, n, HH);
    b.run_j(2, 1, 1, 5, TT);
    b.add(2, 3, 1, TT);
    b.stair_rows(2, n - 1, 5, t, TT);
    b.run_i(2, 2 * t + 2, 2 * t + 3, t + 1, TT);
    b.run_j(2, 2 * t + 2, t + 2, t + 3, TT);
    b.run_i(2, t + 1, 2 * t + 2, t + 4, TT);

    // Page 3: no columns of its own (they belong to pages 4 and 5).
    {
        const int p = 3;
        b.run_j(p, p, p - 1, 2 * p, TT);
        b.run_j(p, p + 1, 1, p - 1, TT);
        b.run_i(p, 1, p - 1, 2 * t + 5 - p, HT);
        b.run_j(p, p, 2 * t + 5 - p, n - 1 - p, HT);
        b.run_j(p, p + 1, n - 1 - p, n + 1 - p, HT);
        b.run_i(p, 1 + p, t, n + 2 - p, HT);
        b.run_i(p, n - 2 * p, n - 2 * p + 1, 1, HH);
        b.run_i(p, n - 2 * p - 1, n - 2 * p, 2, HH);
        b.stair_cols(p, n - 2 * p - 1, 4, t - p - 1, HH);
        b.run_i(p, 2 * t - p + 1, 2 * t - p + 3, t - p, HH);
        b.run_j(p, 2 * t - p, t - p + 1, t - p + 2, HH);
        b.run_i(p, t + 1, 2 * t - p, t - p + 3, HH);
        b.stair_rows(p, n - 1, 2 * p + 1, t + p - 2, TT);
        b.run_i(p, 2 * t + p, 2 * t + p + 1, t + p - 1, TT);
        b.run_j(p, 2 * t + p, t + p, t + p + 1, TT);
        b.run_i(p, t + 1, 2 * t + p, t + p + 2, TT);
        b.run_j(p, n + 2 - 2 * p, n + 2 - p, n, HH);
        b.run_i(p, n + 3 - 2 * p, n, n + 2 - p, HH);
        b.run_j(p, n + 1 - 2 * p, n + 2 - p, n, HT);
    }

    // Pages 4 .. t-4: one uniform scheme. The printed split into classes
    // 3..4, 5..t-8 and t-7..t-4 differs only by localized misprints; each
    // page owns a tt column at 2p-1, an ht column at 2p, its own short tt
    // row meeting the next row's handover piece, two anti-diagonal
    // staircases, a mid-block hook and the upper-right corner block.
    for (int p = 4; p <= t - 4; ++p) {
        b.run_i(p, n - 2 * p, n - 2 * p + 1, 1, HH);
        b.run_i(p, n - 2 * p - 1, n - 2 * p, 2, HH);
        b.stair_cols(p, n - 2 * p - 1, 4, t - p - 1, HH);
        b.run_i(p, 2 * t - p + 1, 2 * t - p + 3, t - p, HH);
        b.run_j(p, 2 * t - p, t - p + 1, t - p + 2, HH);
        b.run_i(p, t + 1, 2 * t - p, t - p + 3, HH);
        b.stair_rows(p, n - 1, 2 * p + 1, t + p - 2, TT);
        b.run_i(p, t + 1, 2 * t + p, t + p + 2, TT);
        b.run_j(p, 2 * t + p, t + p - 1, t + p + 1, TT);
        b.add(p, 2 * t + p + 1, t + p - 1, TT);
        b.run_j(p, p, p - 1, 2 * p - 1, TT);
        b.run_j(p, p + 1, 1, p - 1, TT);
        b.run_i(p, 1, p - 2, 2 * p - 1, TT);
        b.run_i(p, 1, p, 2 * p, HT);
        b.run_j(p, p, 2 * t + 1, n - 1 - p, HT);
        b.run_j(p, p + 1, n - 1 - p, n + 1 - p, HT);
        b.run_i(p, p + 1, t, n + 2 - p, HT);
        b.run_j(p, n + 2 - 2 * p, n + 2 - p, n, HH);
        b.run_i(p, n + 3 - 2 * p, n, n + 2 - p, HH);
        b.run_j(p, n + 1 - 2 * p, n + 2 - p, n, HT);
    }

    // Page t-3.
    {
        const int p = t - 3;
        b.run_i(p, 1, t - 3, 2 * t - 6, HT);
        b.run_j(p, t - 3, 2 * t + 1, 2 * t + 2, HT);
        b.run_j(p, t - 2, 2 * t + 2, 2 * t + 4, HT);
        b.run_i(p, t - 1, t, 2 * t + 4, HT);
        b.run_i(p, t + 6, t + 7, 1, HH);
        b.run_i(p, t + 3, t + 6, 2, HH);
        b.add(p, t + 3, 4, HH);
        b.run_i(p, t + 1, t + 3, 5, HH);
        b.run_j(p, t + 7, 2 * t + 4, n, HT);
        b.run_j(p, t + 8, 2 * t + 5, n, HH);
        b.run_i(p, t + 8, n, 2 * t + 6, HH);
        b.run_i(p, 1, t - 4, 2 * t - 7, TT);
        b.run_j(p, t - 3, t - 4, 2 * t - 7, TT);
        b.run_j(p, n - 1, 2 * t - 5, 2 * t - 4, TT);
        b.run_i(p, n - 3, n - 2, 2 * t - 4, TT);
        b.run_j(p, n - 3, 2 * t - 3, 2 * t - 2, TT);
        b.run_i(p, t + 1, n - 3, 2 * t - 1, TT);
    }

    // Page t-2.
    {
        const int p = t - 2;
        b.run_i(p, 1, t - 2, 2 * t - 4, HT);
        b.add(p, t - 2, 2 * t + 1, HT);
        b.run_j(p, t - 1, 2 * t + 1, 2 * t + 3, HT);
        b.add(p, t, 2 * t + 3, HT);
        b.run_i(p, t + 2, t + 5, 1, HH);
        b.add(p, t + 2, 2, HH);
        b.add(p, t + 2, 4, HH);
        b.add(p, t + 1, 4, HH);
        b.run_j(p, t + 5, 2 * t + 3, n, HT);
        b.run_j(p, t + 6, 2 * t + 3, n, HH);
        b.run_i(p, 2 * t + 6, n, 2 * t + 3, HH);
        b.run_i(p, 1, t - 2, 2 * t - 5, TT);
        b.run_j(p, t - 2, 1, 2 * t - 6, TT);
        b.add(p, n - 1, 2 * t - 3, TT);
        b.run_j(p, n - 2, 2 * t - 3, 2 * t, TT);
        b.run_i(p, t + 1, n - 3, 2 * t, TT);
    }

    // Page t-1.
    {
        const int p = t - 1;
        b.run_i(p, 1, t - 1, 2 * t - 3, HH);
        b.run_j(p, t - 1, 1, 2 * t - 4, HH);
        b.run_i(p, 1, t - 1, 2 * t - 2, TH);
        b.run_j(p, n - 1, 2 * t - 2, 2 * t, HT);
        b.add(p, t + 2, 2 * t + 1, HT);
        b.run_j(p, t + 3, 2 * t + 1, n, HT);
        b.run_j(p, t + 4, 2 * t + 3, n, HH);
        b.add(p, t + 5, 2 * t + 2, HH);
        b.add(p, t + 5, 2 * t + 3, HH);
        b.run_i(p, t + 6, n, 2 * t + 2, HH);
        b.add(p, n - 1, 1, TT);
        b.add(p, n - 2, 1, TT);
        b.add(p, n - 2, 2, TT);
        b.add(p, n - 3, 2, TT);
        b.stair_cols(p, n - 3, 4, t - 2, TT);
        b.run_i(p, 2 * t, 2 * t + 2, t - 1, TT);
        b.run_j(p, 2 * t, t, t + 1, TT);
        b.run_i(p, t + 1, 2 * t, t + 2, TT);
    }

    // Page t.
    {
        const int p = t;
        b.run_i(p, 1, t, 2 * t, HT);
        b.run_j(p, t + 1, 1, 3, HT);
        b.run_i(p, t + 2, n, 3, HT);
        b.run_j(p, n, 4, 2 * t, HT);
        b.run_j(p, t + 2, 2 * t + 2, n, HH);
        b.add(p, t + 4, 2 * t + 2, HH);
        b.run_i(p, t + 4, n, 2 * t + 1, HH);
        b.run_j(p, t + 1, 2 * t + 1, n, HT);
        b.run_i(p, 1, t, 2 * t - 1, TT);
        b.run_j(p, t, 1, 2 * t - 2, TT);
    }

    return std::move(b).take_pages();
}

// Deterministic completion pass used by the K_{n,n} generators. The
// published page lists contain a bounded number of duplicated, conflicting
// or uncovered cells (docs/corrections.md); this normalizes them:
//   1. keep the first copy of every duplicated edge (page order),
//   2. repeatedly drop the edge with the most same-page conflicts,
//   3. place every unassigned edge back by (page, type) search, with a
//      bounded number of ejection rounds when nothing fits directly.
// Everything is ordered deterministically, so a given size always yields
// the identical layout. Throws if the pages cannot be completed.
inline std::vector<Page> complete_partition(const Graph& g, const VertexOrder& order,
                                            LayoutKind kind, std::vector<Page> pages) {
    std::vector<EdgeType> types = allowed_types(kind);
    std::set<Edge> placed;
    std::vector<Edge> pool;

    for (Page& page : pages) {
        std::vector<TypedEdge> kept;
        for (const TypedEdge& e : page.edges) {
            if (!g.has_edge(e.edge())) continue;            // stray cell
            if (!placed.insert(e.edge()).second) continue;  // duplicate copy
            kept.push_back(e);
        }
        page.edges = std::move(kept);
    }
    for (const Edge& e : g.edges())
        if (!placed.count(e)) pool.push_back(e);

    // Drop maximally conflicting residents until every page is clean.
    for (Page& page : pages) {
        for (;;) {
            const std::size_t m = page.edges.size();
            std::vector<int> degree(m, 0);
            bool any = false;
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = i + 1; j < m; ++j)
                    if (typed_edges_conflict(order, page.edges[i], page.edges[j])) {
                        ++degree[i];
                        ++degree[j];
                        any = true;
                    }
            if (!any) break;
            std::size_t worst = 0;
            for (std::size_t i = 1; i < m; ++i)
                if (degree[i] > degree[worst] ||
                    (degree[i] == degree[worst] &&
                     page.edges[i].edge() < page.edges[worst].edge()))
                    worst = i;
            pool.push_back(page.edges[worst].edge());
            page.edges.erase(page.edges.begin() + static_cast<long>(worst));
        }
    }

    // Fringe expansion: pool cells may need residents of nearby cells to
    // shift. Two rounds of "blockers of candidate placements" join the
    // movable set; everything else stays fixed. The exact search below then
    // re-places the whole movable set, preferring original slots.
    std::sort(pool.begin(), pool.end());
    std::map<Edge, int> original_slot;  // page * 4 + type index for fringe members
    for (int level = 0; level < 2; ++level) {
        std::set<Edge> fringe;
        for (const Edge& e : pool) {
            for (std::size_t p = 0; p < pages.size(); ++p)
                for (std::size_t ti = 0; ti < types.size(); ++ti) {
                    TypedEdge cand(e, types[ti]);
                    std::vector<Edge> block;
                    for (const TypedEdge& other : pages[p].edges)
                        if (typed_edges_conflict(order, cand, other))
                            block.push_back(other.edge());
                    if (!block.empty() && block.size() <= 3)
                        fringe.insert(block.begin(), block.end());
                }
        }
        bool grew = false;
        for (Page& page : pages) {
            std::vector<TypedEdge> kept;
            for (const TypedEdge& te : page.edges) {
                if (fringe.count(te.edge())) {
                    std::size_t pg = static_cast<std::size_t>(&page - pages.data());
                    std::size_t ti = 0;
                    while (types[ti] != te.type) ++ti;
                    original_slot[te.edge()] = static_cast<int>(pg * 4 + ti);
                    pool.push_back(te.edge());
                    grew = true;
                } else {
                    kept.push_back(te);
                }
            }
            page.edges = std::move(kept);
        }
        if (!grew) break;
        std::sort(pool.begin(), pool.end());
    }

    // Exact backtracking over the movable set with precomputed
    // compatibility; options are tried original-slot first.
    struct Csp {
        const std::vector<Page>& pages;
        const std::vector<EdgeType>& types;
        const std::vector<Edge>& pool;
        std::vector<std::vector<bool>> allowed;
        std::vector<std::vector<unsigned char>> pair_conflict;
        std::vector<int> preferred;
        std::vector<int> assignment;
        std::vector<std::vector<int>> on_page;
        long steps = 0;

        int idx(std::size_t k, std::size_t ti) const {
            return static_cast<int>(k * types.size() + ti);
        }

        bool solve() {
            std::size_t pick = pool.size();
            int best_opts = INT_MAX;
            std::vector<int> pick_opts;
            for (std::size_t k = 0; k < pool.size(); ++k) {
                if (assignment[k] >= 0) continue;
                std::vector<int> opts;
                for (std::size_t p = 0; p < pages.size(); ++p)
                    for (std::size_t ti = 0; ti < types.size(); ++ti) {
                        if (!allowed[k][p * types.size() + ti]) continue;
                        bool ok = true;
                        for (int other : on_page[p])
                            if (pair_conflict[idx(k, ti)]
                                             [idx(static_cast<std::size_t>(other),
                                                  static_cast<std::size_t>(
                                                      assignment[other] & 3))]) {
                                ok = false;
                                break;
                            }
                        if (ok) opts.push_back(static_cast<int>(p * 4 + ti));
                    }
                if (static_cast<int>(opts.size()) < best_opts) {
                    best_opts = static_cast<int>(opts.size());
                    pick = k;
                    pick_opts = std::move(opts);
                    if (best_opts == 0) return false;
                }
            }
            if (pick == pool.size()) return true;
            if (++steps > 1'000'000)
                throw std::runtime_error("complete_partition: search budget exceeded");
            // Original slot first keeps the perturbation local.
            if (preferred[pick] >= 0) {
                auto it = std::find(pick_opts.begin(), pick_opts.end(), preferred[pick]);
                if (it != pick_opts.end()) std::iter_swap(pick_opts.begin(), it);
            }
            for (int choice : pick_opts) {
                std::size_t p = static_cast<std::size_t>(choice / 4);
                assignment[pick] = choice;
                on_page[p].push_back(static_cast<int>(pick));
                if (solve()) return true;
                on_page[p].pop_back();
                assignment[pick] = -1;
            }
            return false;
        }
    };

    const std::size_t npool = pool.size();
    Csp csp{pages, types, pool, {}, {}, {}, {}, {}, 0};
    csp.allowed.assign(npool, std::vector<bool>(pages.size() * types.size(), false));
    for (std::size_t k = 0; k < npool; ++k)
        for (std::size_t p = 0; p < pages.size(); ++p)
            for (std::size_t ti = 0; ti < types.size(); ++ti) {
                TypedEdge cand(pool[k], types[ti]);
                bool ok = kind_allows(kind, types[ti]);
                for (std::size_t i = 0; ok && i < pages[p].edges.size(); ++i)
                    if (typed_edges_conflict(order, cand, pages[p].edges[i])) ok = false;
                csp.allowed[k][p * types.size() + ti] = ok;
            }
    csp.pair_conflict.assign(npool * types.size(),
                             std::vector<unsigned char>(npool * types.size(), 0));
    for (std::size_t k = 0; k < npool; ++k)
        for (std::size_t k2 = k + 1; k2 < npool; ++k2)
            for (std::size_t ti = 0; ti < types.size(); ++ti)
                for (std::size_t ti2 = 0; ti2 < types.size(); ++ti2) {
                    bool c = typed_edges_conflict(order, TypedEdge(pool[k], types[ti]),
                                                  TypedEdge(pool[k2], types[ti2]));
                    csp.pair_conflict[csp.idx(k, ti)][csp.idx(k2, ti2)] = c;
                    csp.pair_conflict[csp.idx(k2, ti2)][csp.idx(k, ti)] = c;
                }
    csp.preferred.assign(npool, -1);
    for (std::size_t k = 0; k < npool; ++k) {
        auto it = original_slot.find(pool[k]);
        if (it != original_slot.end()) csp.preferred[k] = it->second;
    }
    csp.assignment.assign(npool, -1);
    csp.on_page.assign(pages.size(), {});

    if (npool > 0) {
        if (!csp.solve())
            throw std::runtime_error("complete_partition: no consistent completion found");
        for (std::size_t k = 0; k < npool; ++k) {
            int choice = csp.assignment[k];
            pages[static_cast<std::size_t>(choice / 4)].edges.emplace_back(
                pool[k], types[static_cast<std::size_t>(choice & 3)]);
        }
    }
    return pages;
}

}  // namespace detail

// Deque layout of K_{n,n} with ceil(n/3) pages. The explicit page scheme
// needs n divisible by 3 and n >= kDequeKnnMin; other sizes are padded up
// to the next supported multiple of 3 and restricted back down, which
// preserves the page count.
inline LinearLayout deque_layout_knn(int n) {
    if (n < 1) throw std::invalid_argument("deque_layout_knn: need n >= 1");
    if (n % 3 == 0 && n >= kDequeKnnMin) {
        Graph g = Graph::complete_bipartite(n, n);
        VertexOrder order = detail::deque_knn_order(n);
        std::vector<Page> pages = detail::complete_partition(
            g, order, LayoutKind::Deque, detail::deque_knn_pages(n));
        return {std::move(g), std::move(order), std::move(pages), LayoutKind::Deque};
    }
    int padded = n;
    while (padded % 3 != 0 || padded < kDequeKnnMin) ++padded;
    if (padded - n >= 3)
        throw UnsupportedSizeError("deque_layout_knn: sizes below " +
                                   std::to_string(kDequeKnnMin - 2) +
                                   " are not supported; use the SAT route");
    LinearLayout big = deque_layout_knn(padded);
    // Keep a_1..a_n and b_1..b_n of the padded instance: parts are laid out
    // as ids [0, padded) and [padded, 2*padded).
    std::vector<int> keep;
    keep.reserve(2 * n);
    for (int v = 0; v < n; ++v) keep.push_back(v);
    for (int v = padded; v < padded + n; ++v) keep.push_back(v);
    return induced_sublayout(big, keep);
}

namespace detail {

// Spine order for the rique layout of K_{n,n}: a and b interleave over the
// first half, then the remaining b block, then the remaining a block.
inline VertexOrder rique_knn_order(int n) {
    BipartiteLabels L(n);
    const int half = n % 2 == 1 ? (n - 1) / 2 : n / 2 - 1;
    std::vector<int> seq;
    seq.reserve(2 * n);
    for (int i = 1; i <= half; ++i) {
        seq.push_back(L.a(i));
        seq.push_back(L.b(i));
    }
    for (int j = half + 1; j <= n; ++j) seq.push_back(L.b(j));
    for (int i = half + 1; i <= n; ++i) seq.push_back(L.a(i));
    return VertexOrder(std::move(seq));
}

inline std::vector<Page> rique_knn_pages_odd(int n) {
    const int h = (n - 1) / 2;  // floor(n/2)
    const int H = h + 1;        // ceil(n/2)
    const int q_up = (n + 3) / 4, q_dn = n / 4;  // ceil(n/4), floor(n/4)
    KnnBuilder b(n, h - 1);
    const EdgeType HT = EdgeType::HT, HH = EdgeType::HH;

    b.run_j(1, 1, 1, n, HT);
    b.run_i(1, H, n, 1, HT);
    b.run_j(1, h, 2, h, HH);
    b.run_i(1, H, n, 2, HH);
    b.run_j(1, H, H, n, HH);

    b.run_i(2, 2, h, 1, HT);
    b.add(2, 2, h, HT);
    b.run_j(2, 2, H, n, HT);
    b.add(2, 3, n, HT);
    b.run_i(2, H, n, 3, HT);
    b.run_j(2, n - 3, h - 2, H + 1, HH);
    b.run_i(2, H + 1, n - 4, H + 1, HH);
    b.run_j(2, H + 1, H + 2, n, HH);

    for (int p = 3; p <= 5; ++p) {
        b.run_j(p, p - 1, 2, h - p + 2, HT);
        b.run_j(p, p, h - p + 2, n - p + 2, HT);
        b.run_j(p, p + 1, n - p + 2, n, HT);
        b.run_i(p, H, n, p + 1, HT);
        b.run_j(p, n + p - 5, h - 2, H + p - 1, HH);
        b.run_i(p, H + p - 1, n + p - 6, H + p - 1, HH);
        b.run_j(p, H + p - 1, H + p, n, HH);
    }

    b.run_j(6, 5, 2, h - 4, HT);
    b.run_j(6, 6, h - 4, n - 4, HT);
    b.run_j(6, 7, n - 4, n, HT);
    b.run_i(6, H, n, 7, HT);
    b.run_i(6, H + 5, n, H + 5, HH);
    b.run_j(6, H + 5, H + 6, n, HH);

    b.run_j(7, 6, 2, h - 5, HT);
    b.run_j(7, 7, h - 5, n - 5, HT);
    b.run_j(7, 8, n - 5, n, HT);
    b.run_i(7, H, n, 8, HT);
    b.run_j(7, h, H, H + 2, HH);

    for (int p = 8; p <= h - 6; ++p) {
        b.run_j(p, p - 1, 2, h - p + 2, HT);
        b.run_j(p, p, h - p + 2, n - p + 2, HT);
        b.run_j(p, p + 1, n - p + 2, n, HT);
        b.run_i(p, H, n, p + 1, HT);
        b.run_i(p, H + p - 2, n, H + p - 2, HH);
        b.run_j(p, H + p - 2, H + p - 1, n, HH);
    }

    {
        const int p = h - 5;
        b.run_j(p, h - 6, 2, h - 7, HT);
        b.run_j(p, h - 5, h - 7, n - 7, HT);
        b.run_j(p, h - 4, n - 7, n, HT);
        b.run_i(p, H, n, h - 4, HT);
        b.run_i(p, H + 5, n, h - 3, HH);
    }

    for (int k = 4; k >= 2; --k) {
        const int p = h - k;
        b.run_j(p, p - 1, 2, h - p - 4, HT);
        b.run_j(p, p, h - p - 4, n - p - 4, HT);
        b.run_j(p, p + 1, n - p - 4, n, HT);
        b.run_i(p, H, H + k, p + 1, HT);
        b.run_i(p, H + k, n - 8 + k, p + 2, HT);
        b.run_j(p, n - 8 + k, h - 2 + k, H, HT);
        b.run_i(p, n + k - 8, n, n + 2 * k - 9, HT);
        b.run_i(p, n + k - 8, n, n + 2 * k - 8, HH);
        b.run_j(p, n + k - 8, n + 2 * k - 7, n, HH);
    }

    {
        const int p = h - 1;
        b.run_j(p, h - 1, 2, H + 3, HT);
        b.run_j(p, h, H + 3, n, HT);
        b.run_i(p, H, H + 1, h, HT);
        b.run_i(p, H + 1, n - 7, H, HT);
        b.run_i(p, q_up + 1, n, n - 7, HT);
        b.run_i(p, q_dn + 1, n, n - 6, HH);
        b.run_j(p, q_up + 1, n - 5, n, HH);
        b.run_j(p, h - 2, 2, 3, HH);
    }

    return std::move(b).take_pages();
}

inline std::vector<Page> rique_knn_pages_even(int n) {
    const int h = n / 2;
    const int q = n / 4;
    KnnBuilder b(n, h - 2);
    const EdgeType HT = EdgeType::HT, HH = EdgeType::HH;

    b.run_j(1, 1, 1, n, HT);
    b.run_i(1, h, n, 1, HT);
    b.run_j(1, h - 1, 2, h - 1, HH);
    b.run_i(1, h, n, 2, HH);
    b.run_j(1, h, h, n, HH);

    b.run_i(2, 2, h - 1, 1, HT);
    b.add(2, 2, h - 1, HT);
    b.run_j(2, 2, h, n, HT);
    b.add(2, 3, n, HT);
    b.run_i(2, h, n, 3, HT);
    b.run_j(2, n - 3, h - 3, h + 1, HH);
    b.run_i(2, h + 1, n - 4, h + 1, HH);
    b.run_j(2, h + 1, h + 2, n, HH);

    for (int p = 3; p <= 5; ++p) {
        b.run_j(p, p - 1, 2, h - p + 1, HT);
        b.run_j(p, p, h - p + 1, n - p + 2, HT);
        b.run_j(p, p + 1, n - p + 2, n, HT);
        b.run_i(p, h, n, p + 1, HT);
        b.run_j(p, n + p - 6, h - 3, h + p - 1, HH);
        b.run_i(p, h + p - 1, n + p - 6, h + p - 1, HH);
        b.run_j(p, h + p - 1, h + p, n, HH);
    }

    b.run_j(6, 5, 2, h - 5, HT);
    b.run_j(6, 6, h - 5, n - 4, HT);
    b.run_j(6, 7, n - 4, n, HT);
    b.run_i(6, h, n, 7, HT);
    b.run_i(6, h + 5, n, h + 5, HH);
    b.run_j(6, h + 5, h + 6, n, HH);

    b.run_j(7, 6, 2, h - 6, HT);
    b.run_j(7, 7, h - 6, n - 5, HT);
    b.run_j(7, 8, n - 5, n, HT);
    b.run_i(7, h, n, 8, HT);
    b.run_j(7, h - 1, h, h + 3, HH);
    b.run_j(7, n - 8, n - 8, n, HH);
    b.run_i(7, n - 7, n, n - 8, HH);

    for (int p = 8; p <= h - 7; ++p) {
        b.run_j(p, p - 1, 2, h - p + 1, HT);
        b.run_j(p, p, h - p + 1, n - p + 2, HT);
        b.run_j(p, p + 1, n - p + 2, n, HT);
        b.run_i(p, h, n, p + 1, HT);
        b.run_i(p, h + p - 2, n, h + p - 2, HH);
        b.run_j(p, h + p - 2, h + p - 1, n, HH);
    }

    {
        const int p = h - 6;
        b.run_j(p, h - 7, 2, h - 8, HT);
        b.run_j(p, h - 6, h - 8, n - 7, HT);
        b.run_j(p, h - 5, n - 7, n, HT);
        b.run_i(p, h, n, h - 5, HT);
        b.run_i(p, h + 5, n, h - 4, HH);
    }

    for (int k = 5; k >= 3; --k) {
        const int p = h - k;
        b.run_j(p, p - 1, 2, h - p + 1, HT);
        b.run_j(p, p, h - p + 1, n - p + 2, HT);
        b.run_j(p, p + 1, n - p + 2, n, HT);
        b.run_i(p, h, h + k - 1, p + 1, HT);
        b.run_i(p, h + k - 1, n - 8 + k, p + 2, HT);
        b.run_j(p, n - 8 + k, h - 3 - k, h, HT);
        b.run_i(p, n - 8 + k, n, n + 2 * k - 11, HT);
        b.run_i(p, n - 8 + k, n, n + 2 * k - 10, HH);
        b.run_j(p, n - 8 + k, n + 2 * k - 9, n, HH);
    }

    {
        const int p = h - 2;
        b.run_j(p, h - 2, 2, h + 4, HT);
        b.run_j(p, h - 1, h + 4, n, HT);
        b.run_i(p, h, h + 1, h - 1, HT);
        b.run_i(p, h + 1, n - 7, h, HT);
        b.run_i(p, q + 1, n, n - 7, HT);
        b.run_i(p, q + 1, n, n - 6, HH);
        b.run_j(p, q + 1, n - 5, n, HH);
        b.run_j(p, h - 3, 2, 3, HH);
    }

    return std::move(b).take_pages();
}

}  // namespace detail

// Rique layout of K_{n,n} with floor((n-1)/2) - 1 pages.
inline LinearLayout rique_layout_knn(int n) {
    const int n_min = n % 2 == 1 ? kRiqueKnnMinOdd : kRiqueKnnMinEven;
    if (n < n_min)
        throw UnsupportedSizeError("rique_layout_knn: explicit construction starts at n = " +
                                   std::to_string(kRiqueKnnMinOdd) + " (odd) / " +
                                   std::to_string(kRiqueKnnMinEven) +
                                   " (even); use the SAT route for smaller sizes");
    Graph g = Graph::complete_bipartite(n, n);
    VertexOrder order = detail::rique_knn_order(n);
    std::vector<Page> pages = n % 2 == 1 ? detail::rique_knn_pages_odd(n)
                                         : detail::rique_knn_pages_even(n);
    pages = detail::complete_partition(g, order, LayoutKind::Rique, std::move(pages));
    return {std::move(g), std::move(order), std::move(pages), LayoutKind::Rique};
}

}  // namespace linlay

#endif
