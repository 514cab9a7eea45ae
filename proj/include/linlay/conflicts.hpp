#ifndef LINLAY_CONFLICTS_HPP
#define LINLAY_CONFLICTS_HPP

#include <stdexcept>

#include "linlay/layout.hpp"

namespace linlay {

namespace detail {

inline void check_rank_interval(int a, int b, const char* which) {
    if (a < 0 || b < 0 || a >= b)
        throw std::invalid_argument(std::string("conflicts: rank interval of ") + which +
                                    " edge must satisfy 0 <= a < b");
}

}  // namespace detail

// Pairwise compatibility of two independent typed edges under a spine
// order, given their rank intervals (a,b) and (c,d) with a<b, c<d and all
// four ranks distinct. Returns true iff every cylindric drawing of the two
// edges with these types crosses, i.e. the pair cannot share a page.
//
// The rules, with "inside" meaning strictly between:
//   HH-HH, TT-TT : intervals alternate (a<c<b<d or c<a<d<b)
//   HH-TT        : never (opposite sides of the spine)
//   HH-HT        : c inside (a,b)      where (a,b) is the HH edge
//   HH-TH        : d inside (a,b)
//   TT-HT        : d inside (a,b)      where (a,b) is the TT edge
//   TT-TH        : c inside (a,b)
//   HT-HT, TH-TH : intervals nest
//   HT-TH        : intervals not disjoint
//
// Edges sharing an endpoint never conflict; callers filter those before
// asking (the ranks here are required to be pairwise distinct).
inline bool conflicts(int a, int b, EdgeType x, int c, int d, EdgeType y) {
    detail::check_rank_interval(a, b, "first");
    detail::check_rank_interval(c, d, "second");
    if (a == c || a == d || b == c || b == d)
        throw std::invalid_argument("conflicts: the four ranks must be distinct");

    const bool alternate = (a < c && c < b && b < d) || (c < a && a < d && d < b);
    const bool nested = (a < c && d < b) || (c < a && b < d);
    const bool disjoint = b < c || d < a;

    auto inside_first = [&](int r) { return a < r && r < b; };
    auto inside_second = [&](int r) { return c < r && r < d; };

    using E = EdgeType;
    switch (x) {
        case E::HH:
            switch (y) {
                case E::HH: return alternate;
                case E::TT: return false;
                case E::HT: return inside_first(c);
                case E::TH: return inside_first(d);
            }
            break;
        case E::TT:
            switch (y) {
                case E::HH: return false;
                case E::TT: return alternate;
                case E::HT: return inside_first(d);
                case E::TH: return inside_first(c);
            }
            break;
        case E::HT:
            switch (y) {
                case E::HH: return inside_second(a);
                case E::TT: return inside_second(b);
                case E::HT: return nested;
                case E::TH: return !disjoint;
            }
            break;
        case E::TH:
            switch (y) {
                case E::HH: return inside_second(b);
                case E::TT: return inside_second(a);
                case E::HT: return !disjoint;
                case E::TH: return nested;
            }
            break;
    }
    throw std::logic_error("conflicts: unreachable type combination");
}

// Convenience wrapper on vertex-labelled edges. Shared-endpoint pairs are
// compatible by definition.
inline bool typed_edges_conflict(const VertexOrder& order, const TypedEdge& e1,
                                 const TypedEdge& e2) {
    if (share_endpoint(e1.edge(), e2.edge())) return false;
    int a = order.rank_of(e1.u), b = order.rank_of(e1.v);
    if (a > b) std::swap(a, b);
    int c = order.rank_of(e2.u), d = order.rank_of(e2.v);
    if (c > d) std::swap(c, d);
    return conflicts(a, b, e1.type, c, d, e2.type);
}

}  // namespace linlay

#endif
