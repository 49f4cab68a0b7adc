#ifndef CSFKIT_GRAPH_HPP
#define CSFKIT_GRAPH_HPP

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "csfkit/composition.hpp"

namespace csfkit {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1.
class Graph {
public:
    explicit Graph(int vertex_count, std::vector<Edge> edges = {})
        : n_(vertex_count) {
        if (vertex_count < 0) throw std::invalid_argument("Graph: negative vertex count");
        std::set<Edge> seen;
        for (auto [u, v] : edges) {
            if (u == v) throw std::invalid_argument("Graph: loops are not allowed");
            if (u < 0 || v < 0 || u >= n_ || v >= n_)
                throw std::invalid_argument("Graph: edge endpoint out of range");
            if (u > v) std::swap(u, v);
            if (!seen.insert({u, v}).second)
                throw std::invalid_argument("Graph: duplicate edge");
        }
        edges_.assign(seen.begin(), seen.end());
    }

    int vertex_count() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }

    bool adjacent(int u, int v) const {
        if (u > v) std::swap(u, v);
        return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
    }

    Graph with_edges(const std::vector<Edge>& extra) const {
        std::vector<Edge> all = edges_;
        all.insert(all.end(), extra.begin(), extra.end());
        return Graph(n_, all);
    }

    /// P_n: n vertices chained 0-1-...-(n-1).  P_0 is the empty graph.
    static Graph path(int n) {
        std::vector<Edge> edges;
        for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
        return Graph(n, edges);
    }

    /// C_n for n >= 3.
    static Graph cycle(int n) {
        if (n < 3) throw std::invalid_argument("Graph::cycle: need n >= 3");
        std::vector<Edge> edges;
        for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
        edges.push_back({n - 1, 0});
        return Graph(n, edges);
    }

    /// Spider S(lambda): legs of the given lengths sharing the center
    /// vertex 0; leg vertices are numbered consecutively leg by leg.
    static Graph spider(const Partition& legs) {
        Part total = legs.size();
        Graph g(static_cast<int>(1 + total));
        std::vector<Edge> edges;
        int next = 1;
        for (Part leg : legs.parts()) {
            int prev = 0;
            for (Part i = 0; i < leg; ++i) {
                edges.push_back({prev, next});
                prev = next++;
            }
        }
        return Graph(static_cast<int>(1 + total), edges);
    }

    /// Trinacria T_{abc}: triangle on vertices 0,1,2 with paths of lengths
    /// a, b, c attached to vertices 0, 1, 2 respectively, numbered
    /// consecutively.  Legs of length 0 are allowed (T_000 is K_3).
    static Graph trinacria(Part a, Part b, Part c) {
        if (a < 0 || b < 0 || c < 0)
            throw std::invalid_argument("Graph::trinacria: leg lengths must be >= 0");
        int n = static_cast<int>(a + b + c + 3);
        std::vector<Edge> edges = {{0, 1}, {1, 2}, {0, 2}};
        int next = 3;
        Part legs[3] = {a, b, c};
        for (int anchor = 0; anchor < 3; ++anchor) {
            int prev = anchor;
            for (Part i = 0; i < legs[anchor]; ++i) {
                edges.push_back({prev, next});
                prev = next++;
            }
        }
        return Graph(n, edges);
    }

    /// Edge-list format: first non-comment line is the vertex count, then one
    /// "u v" pair per line; '#' starts a comment.
    static Graph from_edge_list(std::istream& in) {
        auto next_line = [&](std::string& line) -> bool {
            while (std::getline(in, line)) {
                auto hash = line.find('#');
                if (hash != std::string::npos) line.erase(hash);
                std::istringstream probe(line);
                std::string tok;
                if (probe >> tok) return true;
            }
            return false;
        };
        std::string line;
        if (!next_line(line)) throw std::invalid_argument("edge list: missing vertex count");
        int n = 0;
        {
            std::istringstream is(line);
            if (!(is >> n)) throw std::invalid_argument("edge list: bad vertex count");
            std::string rest;
            if (is >> rest) throw std::invalid_argument("edge list: trailing tokens after vertex count");
        }
        std::vector<Edge> edges;
        while (next_line(line)) {
            std::istringstream is(line);
            int u = 0, v = 0;
            if (!(is >> u >> v)) throw std::invalid_argument("edge list: bad edge line: " + line);
            std::string rest;
            if (is >> rest) throw std::invalid_argument("edge list: trailing tokens on edge line: " + line);
            edges.push_back({u, v});
        }
        return Graph(n, edges);
    }

    void write_edge_list(std::ostream& out) const {
        out << n_ << "\n";
        for (auto [u, v] : edges_) out << u << " " << v << "\n";
    }

private:
    int n_;
    std::vector<Edge> edges_;  // normalized u < v, sorted
};

}  // namespace csfkit

#endif
