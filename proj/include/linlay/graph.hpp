#ifndef LINLAY_GRAPH_HPP
#define LINLAY_GRAPH_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace linlay {

// Undirected edge; construction normalizes to smaller id first.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {
        if (a == b)
            throw std::invalid_argument("edge is a self-loop at vertex " + std::to_string(a));
        if (a < 0 || b < 0) throw std::invalid_argument("negative vertex id in edge");
    }

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline bool share_endpoint(const Edge& a, const Edge& b) {
    return a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
}

// Simple undirected graph held as a canonical edge list: every edge is
// stored smaller id first and the list is sorted lexicographically.
class Graph {
public:
    Graph() = default;

    Graph(int num_vertices, std::vector<Edge> edges)
        : n_(num_vertices), edges_(std::move(edges)) {
        if (num_vertices < 0) throw std::invalid_argument("negative vertex count");
        std::sort(edges_.begin(), edges_.end());
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            const Edge& e = edges_[i];
            if (e.v >= n_)
                throw std::invalid_argument("edge endpoint " + std::to_string(e.v) +
                                            " out of range for " + std::to_string(n_) +
                                            " vertices");
            if (i > 0 && edges_[i - 1] == e)
                throw std::invalid_argument("duplicate edge (" + std::to_string(e.u) + "," +
                                            std::to_string(e.v) + ")");
        }
    }

    static Graph complete(int n) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
        std::vector<Edge> es;
        es.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
        return Graph(n, std::move(es));
    }

    // Parts are {0..n_left-1} and {n_left..n_left+n_right-1}.
    static Graph complete_bipartite(int n_left, int n_right) {
        if (n_left < 0 || n_right < 0) throw std::invalid_argument("negative part size");
        std::vector<Edge> es;
        es.reserve(static_cast<std::size_t>(n_left) * n_right);
        for (int u = 0; u < n_left; ++u)
            for (int v = 0; v < n_right; ++v) es.emplace_back(u, n_left + v);
        return Graph(n_left + n_right, std::move(es));
    }

    int num_vertices() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t num_edges() const { return edges_.size(); }

    bool has_edge(const Edge& e) const {
        return std::binary_search(edges_.begin(), edges_.end(), e);
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
};

}  // namespace linlay

#endif
