#ifndef LINLAY_SAT_LAYOUT_HPP
#define LINLAY_SAT_LAYOUT_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "linlay/bounds.hpp"
#include "linlay/conflicts.hpp"
#include "linlay/graph.hpp"
#include "linlay/layout.hpp"
#include "linlay/sat.hpp"
#include "linlay/verify.hpp"

namespace linlay {

// Variable layout for the page-assignment formula:
//   sigma(u,v)  one variable per unordered vertex pair, sign convention
//               sigma(u,v) == -sigma(v,u); true means u left of v
//   phi(i,e)    edge e rides on page i
//   tau(i,e,x)  edge e has category x on page i (allowed x only)
//   chi(e,e')   same-page indicator, emitted only on request
class VarMap {
public:
    VarMap() = default;
    VarMap(int n, int m, int pages, LayoutKind kind, bool with_chi)
        : n_(n), m_(m), pages_(pages), types_(allowed_types(kind)) {
        sigma_base_ = 1;
        phi_base_ = sigma_base_ + n * (n - 1) / 2;
        tau_base_ = phi_base_ + pages * m;
        chi_base_ = tau_base_ + pages * m * static_cast<int>(types_.size());
        num_vars_ = chi_base_ - 1;
        if (with_chi) {
            chi_count_ = m * (m - 1) / 2;
            num_vars_ += chi_count_;
        }
    }

    // Signed literal: positive iff u < v matches the stored polarity.
    int sigma(int u, int v) const {
        if (u == v) throw std::invalid_argument("sigma needs distinct vertices");
        int a = std::min(u, v), b = std::max(u, v);
        int var = sigma_base_ + pair_index(a, b, n_);
        return u < v ? var : -var;
    }
    int phi(int page, int edge) const { return phi_base_ + page * m_ + edge; }
    int tau(int page, int edge, EdgeType t) const {
        int ti = type_index(t);
        if (ti < 0) throw std::invalid_argument("tau: type not allowed for this kind");
        return tau_base_ + (page * m_ + edge) * static_cast<int>(types_.size()) + ti;
    }
    int chi(int e1, int e2) const {
        if (chi_count_ == 0) throw std::logic_error("chi variables were not emitted");
        int a = std::min(e1, e2), b = std::max(e1, e2);
        return chi_base_ + pair_index(a, b, m_);
    }

    int num_vars() const { return num_vars_; }
    int pages() const { return pages_; }
    int num_edges() const { return m_; }
    int num_vertices() const { return n_; }
    const std::vector<EdgeType>& types() const { return types_; }
    bool has_chi() const { return chi_count_ > 0; }

private:
    static int pair_index(int a, int b, int n) {
        // index of (a,b), a<b, in lexicographic pair order
        return a * n - a * (a + 1) / 2 + (b - a - 1);
    }
    int type_index(EdgeType t) const {
        for (std::size_t i = 0; i < types_.size(); ++i)
            if (types_[i] == t) return static_cast<int>(i);
        return -1;
    }

    int n_ = 0, m_ = 0, pages_ = 0;
    std::vector<EdgeType> types_;
    int sigma_base_ = 0, phi_base_ = 0, tau_base_ = 0, chi_base_ = 0;
    int chi_count_ = 0;
    int num_vars_ = 0;
};

struct LayoutCnf {
    CnfInstance cnf;
    VarMap vars;
    Graph graph;
    LayoutKind kind = LayoutKind::Deque;
    bool trivial_sat = false;  // no edges: nothing to place
};

struct EncodeOptions {
    std::optional<VertexOrder> fixed_order;
    bool symmetry_breaking = false;  // pin vertex 0 to the leftmost position
    bool emit_chi = false;
};

// Builds the satisfiability instance for "graph admits a `pages`-page layout
// of this kind": a linear order (antisymmetry by sign convention plus
// transitivity), at least one page per edge, at least one category per edge
// on its page with tau -> phi links, and one clause per independent edge
// pair, page, category pair and forbidden endpoint ordering.
inline LayoutCnf encode(const Graph& graph, int pages, LayoutKind kind,
                        const EncodeOptions& options = {}) {
    if (pages < 1) throw std::invalid_argument("encode: need at least one page");
    LayoutCnf out;
    out.graph = graph;
    out.kind = kind;
    if (graph.edges().empty()) {
        out.trivial_sat = true;
        return out;
    }
    const int n = graph.num_vertices();
    const int m = static_cast<int>(graph.num_edges());
    out.vars = VarMap(n, m, pages, kind, options.emit_chi);
    CnfInstance& cnf = out.cnf;
    cnf.num_vars = out.vars.num_vars();
    const VarMap& V = out.vars;
    const auto& types = V.types();

    // Order: transitivity over ordered triples.
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (v == u) continue;
            for (int w = 0; w < n; ++w) {
                if (w == u || w == v) continue;
                cnf.add_clause({-V.sigma(u, v), -V.sigma(v, w), V.sigma(u, w)});
            }
        }
    if (options.fixed_order) {
        const VertexOrder& ord = *options.fixed_order;
        if (ord.size() != n) throw std::invalid_argument("encode: fixed order size mismatch");
        for (int r = 0; r + 1 < n; ++r)
            cnf.add_clause({V.sigma(ord.vertex_at(r), ord.vertex_at(r + 1))});
    } else if (options.symmetry_breaking) {
        for (int v = 1; v < n; ++v) cnf.add_clause({V.sigma(0, v)});
    }

    // Every edge on at least one page; on a page it carries a category.
    for (int e = 0; e < m; ++e) {
        std::vector<int> alo;
        for (int i = 0; i < pages; ++i) alo.push_back(V.phi(i, e));
        cnf.add_clause(std::move(alo));
        for (int i = 0; i < pages; ++i) {
            std::vector<int> some_type{-V.phi(i, e)};
            for (EdgeType t : types) some_type.push_back(V.tau(i, e, t));
            cnf.add_clause(std::move(some_type));
            for (EdgeType t : types) cnf.add_clause({-V.tau(i, e, t), V.phi(i, e)});
        }
    }

    if (options.emit_chi)
        for (int e = 0; e < m; ++e)
            for (int f = e + 1; f < m; ++f)
                for (int i = 0; i < pages; ++i)
                    cnf.add_clause({-V.phi(i, e), -V.phi(i, f), V.chi(e, f)});

    // Conflict clauses: for every independent pair, category pair, page, and
    // endpoint ordering under which the cylindric drawing is impossible,
    // forbid the combination. Orderings are expressed as sigma chains.
    const auto& edges = graph.edges();
    for (int e = 0; e < m; ++e)
        for (int f = e + 1; f < m; ++f) {
            if (share_endpoint(edges[e], edges[f])) continue;
            int pts[4] = {edges[e].u, edges[e].v, edges[f].u, edges[f].v};
            std::sort(pts, pts + 4);
            do {
                // pts is the left-to-right arrangement; ranks are positions.
                auto rank_of = [&](int vertex) {
                    for (int k = 0; k < 4; ++k)
                        if (pts[k] == vertex) return k;
                    return -1;
                };
                int a = rank_of(edges[e].u), b = rank_of(edges[e].v);
                if (a > b) std::swap(a, b);
                int c = rank_of(edges[f].u), d = rank_of(edges[f].v);
                if (c > d) std::swap(c, d);
                for (EdgeType x : types)
                    for (EdgeType y : types) {
                        if (!conflicts(a, b, x, c, d, y)) continue;
                        for (int i = 0; i < pages; ++i) {
                            std::vector<int> clause{-V.phi(i, e), -V.phi(i, f),
                                                    -V.tau(i, e, x), -V.tau(i, f, y)};
                            for (int k = 0; k + 1 < 4; ++k)
                                clause.push_back(-V.sigma(pts[k], pts[k + 1]));
                            cnf.add_clause(std::move(clause));
                        }
                    }
            } while (std::next_permutation(pts, pts + 4));
        }

    return out;
}

// Reads a satisfying assignment back into a verified layout: the sigma
// tournament is total by transitivity, each edge lands on its lowest
// satisfied page with the first satisfied category there. A decode that
// fails validation signals an encoder bug.
inline LinearLayout decode(const std::vector<bool>& model, const LayoutCnf& enc) {
    const Graph& g = enc.graph;
    const int n = g.num_vertices();
    if (enc.trivial_sat) {
        return {g, VertexOrder::natural(n), std::vector<Page>(1), enc.kind};
    }
    const VarMap& V = enc.vars;
    auto lit_true = [&](int lit) {
        bool v = model.at(static_cast<std::size_t>(std::abs(lit)));
        return lit > 0 ? v : !v;
    };

    std::vector<int> wins(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && lit_true(V.sigma(u, v))) ++wins[u];
    std::vector<int> seq(n);
    std::iota(seq.begin(), seq.end(), 0);
    std::sort(seq.begin(), seq.end(), [&](int u, int v) {
        if (wins[u] != wins[v]) return wins[u] > wins[v];
        return u < v;
    });
    for (int r = 0; r + 1 < n; ++r)
        if (wins[seq[r]] == wins[seq[r + 1]])
            throw std::logic_error("decode: sigma assignment is not a total order");
    VertexOrder order(seq);

    std::vector<Page> pages(V.pages());
    const auto& edges = g.edges();
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        int page = -1;
        for (int i = 0; i < V.pages(); ++i)
            if (lit_true(V.phi(i, e))) {
                page = i;
                break;
            }
        if (page < 0) throw std::logic_error("decode: edge assigned to no page");
        EdgeType type = V.types().front();
        bool found = false;
        for (EdgeType t : V.types())
            if (lit_true(V.tau(page, e, t))) {
                type = t;
                found = true;
                break;
            }
        if (!found) throw std::logic_error("decode: edge has no category on its page");
        pages[page].edges.emplace_back(edges[e], type);
    }

    LinearLayout layout{g, std::move(order), std::move(pages), enc.kind};
    if (!validate_layout(layout).valid())
        throw std::logic_error("decode: model does not validate; encoder bug");
    return layout;
}

struct PageSearchOptions {
    SolverBackend backend;
    // Pinning vertex 0 leftmost is only sound for vertex-transitive graphs;
    // the complete-family commands switch it on.
    bool symmetry_breaking = false;
    bool use_density_bounds = true;
};

struct PageSearchResult {
    int pages = 0;
    LinearLayout witness;
};

// Least p in [lo, hi] admitting a layout, with a decoded witness; nullopt if
// every p in range is unsatisfiable. Density lower bounds raise lo for deque
// and rique searches. An Unknown verdict aborts with the partial bracket.
inline std::optional<PageSearchResult> page_number_search(const Graph& graph, LayoutKind kind,
                                                          int lo, int hi,
                                                          const PageSearchOptions& options = {}) {
    if (lo < 1 || lo > hi) throw std::invalid_argument("page_number_search: bad range");
    if (graph.edges().empty()) {
        PageSearchResult res;
        res.pages = lo;
        res.witness = {graph, VertexOrder::natural(graph.num_vertices()),
                       std::vector<Page>(lo), kind};
        return res;
    }
    if (options.use_density_bounds && graph.num_vertices() >= 3 &&
        (kind == LayoutKind::Deque || kind == LayoutKind::Rique)) {
        std::int64_t bound = density_lower_bound(
            graph.num_vertices(), static_cast<std::int64_t>(graph.num_edges()), kind);
        lo = std::max(lo, static_cast<int>(bound));
        if (lo > hi) return std::nullopt;
    }
    for (int p = lo; p <= hi; ++p) {
        EncodeOptions eopts;
        eopts.symmetry_breaking = options.symmetry_breaking;
        LayoutCnf enc = encode(graph, p, kind, eopts);
        if (enc.trivial_sat) {
            PageSearchResult res;
            res.pages = p;
            res.witness = decode({}, enc);
            return res;
        }
        SolveResult sr = solve(enc.cnf, options.backend);
        if (sr.status == SolveResult::Status::Unknown)
            throw std::runtime_error("page_number_search: solver gave no verdict at p = " +
                                     std::to_string(p) + " (bracket " + std::to_string(lo) +
                                     ".." + std::to_string(hi) + "): " + sr.diagnostics);
        if (sr.status == SolveResult::Status::Sat) {
            PageSearchResult res;
            res.pages = p;
            res.witness = decode(sr.model, enc);
            return res;
        }
    }
    return std::nullopt;
}

}  // namespace linlay

#endif
