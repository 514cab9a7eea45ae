#ifndef LINLAY_DEQUE_SIM_HPP
#define LINLAY_DEQUE_SIM_HPP

#include <algorithm>
#include <deque>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "linlay/conflicts.hpp"
#include "linlay/graph.hpp"
#include "linlay/layout.hpp"
#include "linlay/verify.hpp"

namespace linlay {

// Instance exceeds the documented brute-force caps.
class TooLargeError : public std::runtime_error {
public:
    explicit TooLargeError(const std::string& what) : std::runtime_error(what) {}
};

// ---------------------------------------------------------------------------
// Drawing-existence oracle.
//
// Places the two rank intervals on a spine, decomposes each edge into its
// semicircle pieces (wrapping edges get a wrap point right of every vertex),
// and tests both relative wrap-point orders for a crossing-free drawing.
// Deliberately independent of the closed-form rules in conflicts().
// ---------------------------------------------------------------------------
namespace oracle {

struct Arc {
    bool upper;
    int lo, hi;  // interval endpoints on the extended spine, lo < hi
};

inline bool arcs_cross(const Arc& f, const Arc& g) {
    if (f.upper != g.upper) return false;
    // Same side: semicircles cross iff their endpoint intervals alternate.
    return (f.lo < g.lo && g.lo < f.hi && f.hi < g.hi) ||
           (g.lo < f.lo && f.lo < g.hi && g.hi < f.hi);
}

inline void append_arcs(int a, int b, EdgeType t, int wrap, std::vector<Arc>& out) {
    switch (t) {
        case EdgeType::HH: out.push_back({true, a, b}); return;
        case EdgeType::TT: out.push_back({false, a, b}); return;
        case EdgeType::HT:
            out.push_back({true, a, wrap});
            out.push_back({false, b, wrap});
            return;
        case EdgeType::TH:
            out.push_back({false, a, wrap});
            out.push_back({true, b, wrap});
            return;
    }
}

inline bool wraps(EdgeType t) { return t == EdgeType::HT || t == EdgeType::TH; }

}  // namespace oracle

// True iff some cylindric drawing hosts both typed edges without a crossing.
// Rank preconditions match conflicts(); this is its negated oracle twin:
// conflicts(a,b,x,c,d,y) should equal !cylindric_drawing_exists(a,b,x,c,d,y).
inline bool cylindric_drawing_exists(int a, int b, EdgeType x, int c, int d, EdgeType y) {
    detail::check_rank_interval(a, b, "first");
    detail::check_rank_interval(c, d, "second");
    if (a == c || a == d || b == c || b == d)
        throw std::invalid_argument("cylindric_drawing_exists: ranks must be distinct");

    const int right = std::max(b, d);  // wrap points live beyond every vertex
    const int wrap_orders = (oracle::wraps(x) && oracle::wraps(y)) ? 2 : 1;
    for (int w = 0; w < wrap_orders; ++w) {
        int w1 = right + 1 + w;
        int w2 = right + 2 - w;
        std::vector<oracle::Arc> arcs;
        oracle::append_arcs(a, b, x, w1, arcs);
        oracle::append_arcs(c, d, y, w2, arcs);
        bool crossing = false;
        for (std::size_t i = 0; i < arcs.size() && !crossing; ++i)
            for (std::size_t j = i + 1; j < arcs.size() && !crossing; ++j)
                crossing = oracle::arcs_cross(arcs[i], arcs[j]);
        if (!crossing) return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Operational deque simulation.
// ---------------------------------------------------------------------------

struct SimulateOptions {
    // When true, every removal at a vertex must happen before any insertion
    // at that vertex; the default lets them interleave freely.
    bool removals_first = false;
    int max_vertices = 12;
    int max_edges = 20;
};

namespace detail {

// Live edges front-to-back; head is the front.
struct DequeState {
    std::deque<int> content;

    bool remove_at(bool head, int edge) {
        if (content.empty()) return false;
        if (head) {
            if (content.front() != edge) return false;
            content.pop_front();
        } else {
            if (content.back() != edge) return false;
            content.pop_back();
        }
        return true;
    }
    void insert_at(bool head, int edge) {
        if (head)
            content.push_front(edge);
        else
            content.push_back(edge);
    }
};

inline bool insert_at_head(EdgeType t) { return t == EdgeType::HH || t == EdgeType::HT; }
inline bool remove_at_head(EdgeType t) { return t == EdgeType::HH || t == EdgeType::TH; }

struct SimContext {
    const std::vector<TypedEdge>* edges;
    const VertexOrder* order;
    bool removals_first;
    // Per rank: edge indices inserted / removed when that vertex is processed.
    std::vector<std::vector<int>> inserts, removes;

    bool run_vertex(DequeState& st, int rank, std::vector<bool>& removed,
                    std::vector<bool>& inserted, int done_rem, int done_ins) {
        const auto& rem = removes[rank];
        const auto& ins = inserts[rank];
        if (done_rem == static_cast<int>(rem.size()) &&
            done_ins == static_cast<int>(ins.size()))
            return next_vertex(st, rank + 1);

        // Try one of the pending removals.
        for (int e : rem) {
            if (removed[e]) continue;
            bool head = remove_at_head((*edges)[e].type);
            if (st.content.empty()) continue;
            int at = head ? st.content.front() : st.content.back();
            if (at != e) continue;
            st.remove_at(head, e);
            removed[e] = true;
            if (run_vertex(st, rank, removed, inserted, done_rem + 1, done_ins)) return true;
            removed[e] = false;
            st.insert_at(head, e);
        }
        // Or one of the pending insertions.
        if (!removals_first || done_rem == static_cast<int>(rem.size())) {
            for (int e : ins) {
                if (inserted[e]) continue;
                bool head = insert_at_head((*edges)[e].type);
                st.insert_at(head, e);
                inserted[e] = true;
                if (run_vertex(st, rank, removed, inserted, done_rem, done_ins + 1))
                    return true;
                inserted[e] = false;
                st.remove_at(head, e);
            }
        }
        return false;
    }

    bool next_vertex(DequeState& st, int rank) {
        if (rank >= order->size()) return st.content.empty();
        std::vector<bool> removed(edges->size(), false), inserted(edges->size(), false);
        return run_vertex(st, rank, removed, inserted, 0, 0);
    }
};

}  // namespace detail

// Simulates the double-ended queue directly: HH inserts and removes at the
// head, TT at the tail, HT inserts at the head and removes at the tail, TH
// the reverse. Returns true iff some interleaving of each vertex's removals
// and insertions services every removal from the required end.
inline bool simulate_page(const VertexOrder& order, const Page& page,
                          const SimulateOptions& opts = {}) {
    if (order.size() > opts.max_vertices)
        throw TooLargeError("simulate_page: " + std::to_string(order.size()) +
                            " vertices exceeds cap of " + std::to_string(opts.max_vertices));
    if (static_cast<int>(page.edges.size()) > opts.max_edges)
        throw TooLargeError("simulate_page: " + std::to_string(page.edges.size()) +
                            " edges exceeds cap of " + std::to_string(opts.max_edges));

    detail::SimContext ctx;
    ctx.edges = &page.edges;
    ctx.order = &order;
    ctx.removals_first = opts.removals_first;
    ctx.inserts.assign(order.size(), {});
    ctx.removes.assign(order.size(), {});
    for (std::size_t i = 0; i < page.edges.size(); ++i) {
        const TypedEdge& e = page.edges[i];
        if (!order.contains(e.u) || !order.contains(e.v))
            throw std::invalid_argument("simulate_page: edge endpoint outside order");
        int ru = order.rank_of(e.u), rv = order.rank_of(e.v);
        if (ru > rv) std::swap(ru, rv);
        ctx.inserts[ru].push_back(static_cast<int>(i));
        ctx.removes[rv].push_back(static_cast<int>(i));
    }

    detail::DequeState st;
    return ctx.next_vertex(st, 0);
}

// The pairwise validator deliberately never flags edges that share an
// endpoint, but the data structure itself rejects eight shared-endpoint type
// patterns (a wrapping edge whose return strand is blocked by its sibling).
// This helper names that residue: true iff the two edges share an endpoint
// and cannot be processed together even in isolation.
inline bool shared_pair_infeasible(const VertexOrder& order, const TypedEdge& e1,
                                   const TypedEdge& e2) {
    if (!share_endpoint(e1.edge(), e2.edge())) return false;
    return !simulate_page(order, Page{{e1, e2}});
}

// ---------------------------------------------------------------------------
// Exhaustive page-number search on tiny graphs.
// ---------------------------------------------------------------------------

struct ExactSearchOptions {
    int max_vertices = 8;
    // Fixing vertex 0 at rank 0 is sound only for vertex-transitive graphs
    // (complete and balanced complete bipartite graphs qualify).
    bool fix_first_vertex = false;
    // Order-reversal deduplication; applied for Stack, Queue and Deque where
    // reversal maps valid pages to valid pages, never for Rique.
    bool break_reversal = true;
};

namespace detail {

// Backtracking (page, type) assignment of all edges under a fixed order.
// Pages open in canonical index order; deque pages break the vertical-flip
// symmetry by restricting the first edge of every page to HH/HT.
struct PageAssigner {
    const std::vector<Edge>* edges;
    const VertexOrder* order;
    LayoutKind kind;
    int pages;
    std::vector<EdgeType> types;
    std::vector<std::vector<int>> page_members;  // edge indices per page
    std::vector<EdgeType> chosen;
    std::vector<std::pair<int, int>> spans;

    bool fits(int e, int page, EdgeType t) const {
        for (int o : page_members[page]) {
            const Edge& a = (*edges)[e];
            const Edge& b = (*edges)[o];
            if (share_endpoint(a, b)) continue;
            if (conflicts(spans[e].first, spans[e].second, t, spans[o].first,
                          spans[o].second, chosen[o]))
                return false;
        }
        return true;
    }

    bool assign(std::size_t e, int used_pages) {
        if (e == edges->size()) return true;
        int page_limit = std::min(pages, used_pages + 1);
        for (int p = 0; p < page_limit; ++p) {
            bool fresh = page_members[p].empty();
            for (EdgeType t : types) {
                if (fresh && kind == LayoutKind::Deque &&
                    (t == EdgeType::TT || t == EdgeType::TH))
                    continue;  // flip symmetry
                if (!fits(static_cast<int>(e), p, t)) continue;
                page_members[p].push_back(static_cast<int>(e));
                chosen[e] = t;
                if (assign(e + 1, std::max(used_pages, p + 1))) return true;
                page_members[p].pop_back();
            }
        }
        return false;
    }
};

inline bool order_admits_layout(const Graph& g, const VertexOrder& order, LayoutKind kind,
                                int pages, std::vector<Page>* out_pages = nullptr) {
    PageAssigner pa;
    // Longer spans first: they constrain the most.
    std::vector<Edge> sorted = g.edges();
    auto span_of = [&](const Edge& e) {
        int a = order.rank_of(e.u), b = order.rank_of(e.v);
        if (a > b) std::swap(a, b);
        return std::pair{a, b};
    };
    std::sort(sorted.begin(), sorted.end(), [&](const Edge& x, const Edge& y) {
        auto sx = span_of(x), sy = span_of(y);
        return (sx.second - sx.first) > (sy.second - sy.first);
    });
    pa.edges = &sorted;
    pa.order = &order;
    pa.kind = kind;
    pa.pages = pages;
    pa.types = allowed_types(kind);
    pa.page_members.assign(pages, {});
    pa.chosen.assign(sorted.size(), EdgeType::HH);
    pa.spans.resize(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) pa.spans[i] = span_of(sorted[i]);
    if (!pa.assign(0, 0)) return false;
    if (out_pages) {
        out_pages->assign(pages, {});
        for (int p = 0; p < pages; ++p)
            for (int e : pa.page_members[p])
                (*out_pages)[p].edges.emplace_back(sorted[e], pa.chosen[e]);
    }
    return true;
}

}  // namespace detail

// Tests whether some vertex order admits a `pages`-page layout of the kind,
// optionally returning a witness.
inline bool exists_layout_bruteforce(const Graph& g, LayoutKind kind, int pages,
                                     const ExactSearchOptions& opts = {},
                                     LinearLayout* witness = nullptr) {
    const int n = g.num_vertices();
    if (n > opts.max_vertices)
        throw TooLargeError("exhaustive search capped at " +
                            std::to_string(opts.max_vertices) + " vertices, got " +
                            std::to_string(n));
    if (pages < 1) throw std::invalid_argument("page count must be >= 1");
    if (g.edges().empty()) {
        if (witness) *witness = {g, VertexOrder::natural(n), std::vector<Page>(pages), kind};
        return true;
    }

    const bool dedupe_reversal = opts.break_reversal && kind != LayoutKind::Rique;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (opts.fix_first_vertex && perm[0] != 0) continue;
        if (dedupe_reversal && !opts.fix_first_vertex && perm.front() > perm.back()) continue;
        if (dedupe_reversal && opts.fix_first_vertex && n > 2 && perm[1] > perm[n - 1]) continue;
        VertexOrder order(perm);
        std::vector<Page> pages_out;
        if (detail::order_admits_layout(g, order, kind, pages,
                                        witness ? &pages_out : nullptr)) {
            if (witness) *witness = {g, order, std::move(pages_out), kind};
            return true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Minimum page count by exhaustive search; nullopt when max_pages does not
// suffice. Intended for graphs with at most 8 vertices.
inline std::optional<int> exact_page_number(const Graph& g, LayoutKind kind, int max_pages,
                                            const ExactSearchOptions& opts = {},
                                            LinearLayout* witness = nullptr) {
    if (max_pages < 1) throw std::invalid_argument("max_pages must be >= 1");
    for (int p = 1; p <= max_pages; ++p)
        if (exists_layout_bruteforce(g, kind, p, opts, witness)) return p;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Forbidden-pattern test for single riques.
// ---------------------------------------------------------------------------

// True iff no edge triple (a,a'), (b,b'), (c,c') satisfies
// a < b < c < b' < a' and b' < c' in spine ranks. The three edges must be
// distinct but may share the far endpoint (a' = c').
inline bool rique_pattern_check(const VertexOrder& order, const std::vector<Edge>& edges) {
    const std::size_t m = edges.size();
    std::vector<std::pair<int, int>> span(m);
    for (std::size_t i = 0; i < m; ++i) {
        int a = order.rank_of(edges[i].u), b = order.rank_of(edges[i].v);
        if (a > b) std::swap(a, b);
        span[i] = {a, b};
    }
    for (std::size_t i = 0; i < m; ++i)          // (a, a')
        for (std::size_t j = 0; j < m; ++j) {    // (b, b')
            if (j == i) continue;
            if (!(span[i].first < span[j].first)) continue;
            if (!(span[j].second < span[i].second)) continue;  // b' < a'
            for (std::size_t k = 0; k < m; ++k) {  // (c, c')
                if (k == i || k == j) continue;
                if (span[j].first < span[k].first && span[k].first < span[j].second &&
                    span[j].second < span[k].second)
                    return false;
            }
        }
    return true;
}

}  // namespace linlay

#endif
