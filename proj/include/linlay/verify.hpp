#ifndef LINLAY_VERIFY_HPP
#define LINLAY_VERIFY_HPP

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "linlay/conflicts.hpp"
#include "linlay/layout.hpp"

namespace linlay {

enum class ViolationKind : unsigned char {
    Conflict,        // two independent edges on one page whose types cannot coexist
    TypeNotAllowed,  // edge type outside the page kind's allowed set
    Coverage,        // partition defect: missing, duplicated, or foreign edge
    OrderDefect,     // edge endpoint not covered by the vertex order
};

struct Violation {
    ViolationKind kind;
    int page = -1;
    TypedEdge first{};
    TypedEdge second{};  // meaningful for Conflict only
    std::string detail;
};

struct VerificationReport {
    std::vector<Violation> violations;

    bool valid() const { return violations.empty(); }

    std::string summary() const {
        std::ostringstream os;
        if (valid()) {
            os << "valid\n";
            return os.str();
        }
        os << violations.size() << " violation(s)\n";
        for (const Violation& v : violations) os << "  " << v.detail << "\n";
        return os.str();
    }
};

namespace detail {

inline std::string edge_str(const TypedEdge& e) {
    std::ostringstream os;
    os << "(" << e.u << "," << e.v << ")" << to_string(e.type);
    return os.str();
}

inline void report_page(const VertexOrder& order, const Page& page, LayoutKind kind,
                        int page_index, VerificationReport& out) {
    const auto& es = page.edges;
    std::vector<bool> in_order(es.size(), true);
    for (std::size_t i = 0; i < es.size(); ++i) {
        const TypedEdge& e = es[i];
        if (!order.contains(e.u) || !order.contains(e.v)) {
            in_order[i] = false;
            Violation v{ViolationKind::OrderDefect, page_index, e, {}, {}};
            v.detail = "page " + std::to_string(page_index) + ": edge " + edge_str(e) +
                       " has an endpoint outside the vertex order";
            out.violations.push_back(std::move(v));
        }
        if (!kind_allows(kind, e.type)) {
            Violation v{ViolationKind::TypeNotAllowed, page_index, e, {}, {}};
            v.detail = "page " + std::to_string(page_index) + ": edge " + edge_str(e) +
                       " has type " + std::string(to_string(e.type)) + " not allowed in a " +
                       std::string(to_string(kind));
            out.violations.push_back(std::move(v));
        }
    }
    for (std::size_t i = 0; i < es.size(); ++i) {
        if (!in_order[i]) continue;
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            if (!in_order[j]) continue;
            if (typed_edges_conflict(order, es[i], es[j])) {
                Violation v{ViolationKind::Conflict, page_index, es[i], es[j], {}};
                v.detail = "page " + std::to_string(page_index) + ": edges " +
                           edge_str(es[i]) + " and " + edge_str(es[j]) + " cannot coexist";
                out.violations.push_back(std::move(v));
            }
        }
    }
}

}  // namespace detail

// Pairwise page validation: reports every conflicting independent pair and
// every type disallowed by `kind`. Endpoints missing from the order become
// OrderDefect entries rather than exceptions.
inline VerificationReport validate_page(const VertexOrder& order, const Page& page,
                                        LayoutKind kind, int page_index = 0) {
    VerificationReport report;
    detail::report_page(order, page, kind, page_index, report);
    return report;
}

// Whole-layout validation: aggregates per-page checks and verifies that the
// pages partition the graph's edge set exactly.
inline VerificationReport validate_layout(const LinearLayout& layout) {
    VerificationReport report;

    if (layout.order.size() != layout.graph.num_vertices()) {
        Violation v{ViolationKind::OrderDefect, -1, {}, {}, {}};
        v.detail = "order covers " + std::to_string(layout.order.size()) + " vertices, graph has " +
                   std::to_string(layout.graph.num_vertices());
        report.violations.push_back(std::move(v));
    }

    for (std::size_t p = 0; p < layout.pages.size(); ++p)
        detail::report_page(layout.order, layout.pages[p], layout.kind,
                            static_cast<int>(p), report);

    // Partition check: every graph edge exactly once across all pages.
    std::map<Edge, std::vector<int>> seen;
    for (std::size_t p = 0; p < layout.pages.size(); ++p)
        for (const TypedEdge& e : layout.pages[p].edges)
            seen[e.edge()].push_back(static_cast<int>(p));

    for (const auto& [edge, pages] : seen) {
        if (!layout.graph.has_edge(edge)) {
            Violation v{ViolationKind::Coverage, pages.front(), TypedEdge(edge, EdgeType::HH),
                        {}, {}};
            v.detail = "edge (" + std::to_string(edge.u) + "," + std::to_string(edge.v) +
                       ") on page " + std::to_string(pages.front()) + " is not a graph edge";
            report.violations.push_back(std::move(v));
        } else if (pages.size() > 1) {
            Violation v{ViolationKind::Coverage, pages[1], TypedEdge(edge, EdgeType::HH), {}, {}};
            std::ostringstream os;
            os << "edge (" << edge.u << "," << edge.v << ") assigned " << pages.size()
               << " times (pages";
            for (int p : pages) os << " " << p;
            os << ")";
            v.detail = os.str();
            report.violations.push_back(std::move(v));
        }
    }
    for (const Edge& e : layout.graph.edges()) {
        if (!seen.count(e)) {
            Violation v{ViolationKind::Coverage, -1, TypedEdge(e, EdgeType::HH), {}, {}};
            v.detail = "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") missing from every page";
            report.violations.push_back(std::move(v));
        }
    }

    return report;
}

// Restriction of a layout to a vertex subset: dropped vertices leave the
// order, their incident edges leave every page, and ids are compacted
// preserving relative id order. Page count and kind are unchanged.
inline LinearLayout induced_sublayout(const LinearLayout& layout, const std::vector<int>& keep) {
    const int n = layout.graph.num_vertices();
    std::vector<bool> kept(n, false);
    for (int v : keep) {
        if (v < 0 || v >= n)
            throw std::invalid_argument("induced_sublayout: vertex " + std::to_string(v) +
                                        " not in layout");
        kept[v] = true;
    }
    std::vector<int> remap(n, -1);
    int next = 0;
    for (int v = 0; v < n; ++v)
        if (kept[v]) remap[v] = next++;

    LinearLayout out;
    out.kind = layout.kind;

    std::vector<Edge> sub_edges;
    for (const Edge& e : layout.graph.edges())
        if (kept[e.u] && kept[e.v]) sub_edges.emplace_back(remap[e.u], remap[e.v]);
    out.graph = Graph(next, std::move(sub_edges));

    std::vector<int> sub_seq;
    sub_seq.reserve(next);
    for (int v : layout.order.sequence())
        if (kept[v]) sub_seq.push_back(remap[v]);
    out.order = VertexOrder(std::move(sub_seq));

    out.pages.resize(layout.pages.size());
    for (std::size_t p = 0; p < layout.pages.size(); ++p)
        for (const TypedEdge& e : layout.pages[p].edges)
            if (kept[e.u] && kept[e.v])
                out.pages[p].edges.emplace_back(remap[e.u], remap[e.v], e.type);

    return out;
}

}  // namespace linlay

#endif
