#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "obst/errors.hpp"
#include "obst/rng.hpp"

namespace obst {

/// Simple undirected graph on vertices 0..n-1. Edges are stored normalized
/// (u < v), sorted and unique; every other pair is a non-edge.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    Graph() = default;

    Graph(int vertex_count, std::vector<std::pair<int, int>> edge_list) : n(vertex_count) {
        for (auto& [u, v] : edge_list) {
            if (u == v) throw SchemaError("loop edge at vertex " + std::to_string(u + 1));
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw SchemaError("edge endpoint out of range: (" + std::to_string(u + 1) + ", " +
                                  std::to_string(v + 1) + ")");
            if (u > v) std::swap(u, v);
        }
        std::sort(edge_list.begin(), edge_list.end());
        const auto dup = std::adjacent_find(edge_list.begin(), edge_list.end());
        if (dup != edge_list.end())
            throw SchemaError("duplicate edge (" + std::to_string(dup->first + 1) + ", " +
                              std::to_string(dup->second + 1) + ")");
        edges = std::move(edge_list);
    }

    static Graph complete(int n) {
        std::vector<std::pair<int, int>> e;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
        return Graph(n, std::move(e));
    }

    bool has_edge(int u, int v) const {
        if (u > v) std::swap(u, v);
        return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
    }

    bool is_complete() const {
        return static_cast<long long>(edges.size()) == static_cast<long long>(n) * (n - 1) / 2;
    }

    std::vector<std::pair<int, int>> non_edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (!has_edge(u, v)) out.emplace_back(u, v);
        return out;
    }

    /// Subgraph induced by `vertices`; vertex i of the result corresponds to
    /// vertices[i].
    Graph induced(const std::vector<int>& vertices) const {
        std::vector<int> position(n, -1);
        for (std::size_t i = 0; i < vertices.size(); ++i) position[vertices[i]] = static_cast<int>(i);
        std::vector<std::pair<int, int>> e;
        for (const auto& [u, v] : edges)
            if (position[u] >= 0 && position[v] >= 0) e.emplace_back(position[u], position[v]);
        return Graph(static_cast<int>(vertices.size()), std::move(e));
    }

    bool operator==(const Graph&) const = default;
};

/// Erdos-Renyi G(n, 1/2): each pair independently an edge with equal
/// probability.
inline Graph random_graph(int n, Rng& rng) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.coin()) e.emplace_back(u, v);
    return Graph(n, std::move(e));
}

/// The a x b grid graph (vertices in row-major order).
inline Graph grid_graph(int rows, int cols) {
    std::vector<std::pair<int, int>> e;
    auto id = [cols](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) e.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < rows) e.emplace_back(id(r, c), id(r + 1, c));
        }
    return Graph(rows * cols, std::move(e));
}

} // namespace obst
