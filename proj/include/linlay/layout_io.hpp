#ifndef LINLAY_LAYOUT_IO_HPP
#define LINLAY_LAYOUT_IO_HPP

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "linlay/layout.hpp"

namespace linlay {

// Raised by parse_layout with a message carrying line and field context.
class LayoutParseError : public std::runtime_error {
public:
    LayoutParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Text format, one layout per document:
//
//   linlay 1 <kind> <n> <pages>
//   order: r0 r1 ... r(n-1)
//   page 0:
//   <u> <v> <hh|tt|ht|th>
//   ...
//
// '#' starts a comment. Canonical form sorts each page's edges by
// (rank of left endpoint, rank of right endpoint).
inline void serialize_layout(const LinearLayout& layout, std::ostream& os) {
    os << "linlay 1 " << to_string(layout.kind) << " " << layout.graph.num_vertices() << " "
       << layout.pages.size() << "\n";
    os << "order:";
    for (int v : layout.order.sequence()) os << " " << v;
    os << "\n";
    for (std::size_t p = 0; p < layout.pages.size(); ++p) {
        os << "page " << p << ":\n";
        std::vector<TypedEdge> es = layout.pages[p].edges;
        auto left_right = [&](const TypedEdge& e) {
            int a = layout.order.rank_of(e.u), b = layout.order.rank_of(e.v);
            return a < b ? std::pair{a, b} : std::pair{b, a};
        };
        std::sort(es.begin(), es.end(), [&](const TypedEdge& x, const TypedEdge& y) {
            return left_right(x) < left_right(y);
        });
        for (const TypedEdge& e : es)
            os << e.u << " " << e.v << " " << to_string(e.type) << "\n";
    }
}

inline std::string serialize_layout(const LinearLayout& layout) {
    std::ostringstream os;
    serialize_layout(layout, os);
    return os.str();
}

inline LinearLayout parse_layout(std::istream& is) {
    LinearLayout out;
    int lineno = 0;
    std::string raw;
    bool have_header = false, have_order = false;
    int n = 0, npages = 0, current_page = -1;
    std::vector<Edge> graph_edges;

    auto fail = [&](const std::string& msg) -> void { throw LayoutParseError(lineno, msg); };

    while (std::getline(is, raw)) {
        ++lineno;
        std::string line = raw;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;  // blank or comment-only

        if (!have_header) {
            if (tok != "linlay") fail("expected header 'linlay 1 <kind> <n> <pages>'");
            int version = 0;
            std::string kind_s;
            if (!(ls >> version >> kind_s >> n >> npages)) fail("malformed header fields");
            if (version != 1) fail("unsupported format version " + std::to_string(version));
            auto kind = parse_layout_kind(kind_s);
            if (!kind) fail("unknown layout kind '" + kind_s + "'");
            if (n < 0 || npages < 0) fail("negative vertex or page count");
            out.kind = *kind;
            out.pages.resize(npages);
            have_header = true;
            continue;
        }
        if (!have_order) {
            if (tok != "order:") fail("expected 'order:' line after header");
            std::vector<int> seq;
            int v;
            while (ls >> v) seq.push_back(v);
            if (static_cast<int>(seq.size()) != n)
                fail("order lists " + std::to_string(seq.size()) + " vertices, header says " +
                     std::to_string(n));
            try {
                out.order = VertexOrder(std::move(seq));
            } catch (const std::invalid_argument& e) {
                fail(std::string("bad order: ") + e.what());
            }
            have_order = true;
            continue;
        }
        if (tok == "page") {
            int idx = -1;
            std::string rest;
            ls >> rest;
            if (rest.empty() || rest.back() != ':') fail("expected 'page <i>:'");
            try {
                idx = std::stoi(rest.substr(0, rest.size() - 1));
            } catch (...) {
                fail("bad page index '" + rest + "'");
            }
            if (idx < 0 || idx >= npages)
                fail("page index " + std::to_string(idx) + " outside 0.." +
                     std::to_string(npages - 1));
            current_page = idx;
            continue;
        }
        // Edge line: <u> <v> <type>
        if (current_page < 0) fail("edge line before any 'page <i>:' line");
        int u = 0, v = 0;
        std::string type_s;
        try {
            u = std::stoi(tok);
        } catch (...) {
            fail("expected vertex id, got '" + tok + "'");
        }
        if (!(ls >> v >> type_s)) fail("edge line needs '<u> <v> <type>'");
        auto t = parse_edge_type(type_s);
        if (!t) fail("unknown edge type '" + type_s + "' (want hh|tt|ht|th)");
        if (u < 0 || u >= n || v < 0 || v >= n)
            fail("edge endpoint outside 0.." + std::to_string(n - 1));
        if (u == v) fail("self-loop at vertex " + std::to_string(u));
        out.pages[current_page].edges.emplace_back(u, v, *t);
        graph_edges.emplace_back(u, v);
    }

    lineno = std::max(lineno, 1);
    if (!have_header) fail("empty document, expected 'linlay' header");
    if (!have_order) fail("missing 'order:' line");

    std::sort(graph_edges.begin(), graph_edges.end());
    graph_edges.erase(std::unique(graph_edges.begin(), graph_edges.end()), graph_edges.end());
    out.graph = Graph(n, std::move(graph_edges));
    return out;
}

inline LinearLayout parse_layout(const std::string& text) {
    std::istringstream is(text);
    return parse_layout(is);
}

}  // namespace linlay

#endif
