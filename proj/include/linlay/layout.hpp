#ifndef LINLAY_LAYOUT_HPP
#define LINLAY_LAYOUT_HPP

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "linlay/graph.hpp"

namespace linlay {

// Edge categories of a cylindric drawing. The endpoint that comes earlier
// in the spine order is the insertion endpoint; HH/HT start on the upper
// arc, TT/TH on the lower arc. HT/TH wrap around the right end.
enum class EdgeType : unsigned char { HH, TT, HT, TH };

inline constexpr std::array<EdgeType, 4> kAllEdgeTypes = {EdgeType::HH, EdgeType::TT,
                                                          EdgeType::HT, EdgeType::TH};

constexpr std::string_view to_string(EdgeType t) {
    switch (t) {
        case EdgeType::HH: return "hh";
        case EdgeType::TT: return "tt";
        case EdgeType::HT: return "ht";
        case EdgeType::TH: return "th";
    }
    return "??";
}

inline std::optional<EdgeType> parse_edge_type(std::string_view s) {
    if (s == "hh") return EdgeType::HH;
    if (s == "tt") return EdgeType::TT;
    if (s == "ht") return EdgeType::HT;
    if (s == "th") return EdgeType::TH;
    return std::nullopt;
}

enum class LayoutKind : unsigned char { Stack, Queue, Rique, Deque };

constexpr std::string_view to_string(LayoutKind k) {
    switch (k) {
        case LayoutKind::Stack: return "stack";
        case LayoutKind::Queue: return "queue";
        case LayoutKind::Rique: return "rique";
        case LayoutKind::Deque: return "deque";
    }
    return "??";
}

inline std::optional<LayoutKind> parse_layout_kind(std::string_view s) {
    if (s == "stack") return LayoutKind::Stack;
    if (s == "queue") return LayoutKind::Queue;
    if (s == "rique") return LayoutKind::Rique;
    if (s == "deque") return LayoutKind::Deque;
    return std::nullopt;
}

// Stack pages hold only HH edges, queues only HT, riques HH/HT,
// deques all four categories.
constexpr bool kind_allows(LayoutKind k, EdgeType t) {
    switch (k) {
        case LayoutKind::Stack: return t == EdgeType::HH;
        case LayoutKind::Queue: return t == EdgeType::HT;
        case LayoutKind::Rique: return t == EdgeType::HH || t == EdgeType::HT;
        case LayoutKind::Deque: return true;
    }
    return false;
}

inline std::vector<EdgeType> allowed_types(LayoutKind k) {
    std::vector<EdgeType> out;
    for (EdgeType t : kAllEdgeTypes)
        if (kind_allows(k, t)) out.push_back(t);
    return out;
}

// Spine order: `sequence` lists vertex ids left to right, `position`
// is the inverse map (vertex id -> rank).
class VertexOrder {
public:
    VertexOrder() = default;

    explicit VertexOrder(std::vector<int> sequence) : seq_(std::move(sequence)) {
        const int n = static_cast<int>(seq_.size());
        pos_.assign(n, -1);
        for (int r = 0; r < n; ++r) {
            int v = seq_[r];
            if (v < 0 || v >= n)
                throw std::invalid_argument("order entry " + std::to_string(v) +
                                            " out of range");
            if (pos_[v] != -1)
                throw std::invalid_argument("vertex " + std::to_string(v) +
                                            " appears twice in order");
            pos_[v] = r;
        }
    }

    static VertexOrder natural(int n) {
        std::vector<int> s(n);
        std::iota(s.begin(), s.end(), 0);
        return VertexOrder(std::move(s));
    }

    int size() const { return static_cast<int>(seq_.size()); }
    const std::vector<int>& sequence() const { return seq_; }
    int vertex_at(int rank) const { return seq_[rank]; }
    int rank_of(int vertex) const { return pos_[vertex]; }
    bool contains(int vertex) const {
        return vertex >= 0 && vertex < static_cast<int>(pos_.size());
    }

    friend bool operator==(const VertexOrder&, const VertexOrder&) = default;

private:
    std::vector<int> seq_;
    std::vector<int> pos_;
};

struct TypedEdge {
    int u = 0;
    int v = 0;
    EdgeType type = EdgeType::HH;

    TypedEdge() = default;
    TypedEdge(int a, int b, EdgeType t) : u(a < b ? a : b), v(a < b ? b : a), type(t) {
        if (a == b)
            throw std::invalid_argument("typed edge is a self-loop at vertex " +
                                        std::to_string(a));
    }
    TypedEdge(const Edge& e, EdgeType t) : u(e.u), v(e.v), type(t) {}

    Edge edge() const { return Edge(u, v); }

    friend bool operator==(const TypedEdge&, const TypedEdge&) = default;
    friend auto operator<=>(const TypedEdge&, const TypedEdge&) = default;
};

struct Page {
    std::vector<TypedEdge> edges;
};

// A linear layout: spine order plus an edge partition into typed pages.
// Construction does not validate; see verify.hpp.
struct LinearLayout {
    Graph graph;
    VertexOrder order;
    std::vector<Page> pages;
    LayoutKind kind = LayoutKind::Deque;

    std::size_t total_edges() const {
        std::size_t s = 0;
        for (const Page& p : pages) s += p.edges.size();
        return s;
    }
};

}  // namespace linlay

#endif
