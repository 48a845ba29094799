#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gpower/errors.hpp"

namespace gpower {

using Vertex = std::uint32_t;

/// Largest supported vertex count; vertices are 32-bit ids.
inline constexpr std::uint64_t kMaxVertices = (std::uint64_t{1} << 31) - 2;

/// Parameters of a G(n, p) sample with p = c/n.
struct GraphParams {
    std::uint64_t n = 0;
    double c = 0.0;
    std::uint64_t seed = 0;

    /// Throws InvalidParameterError / CapacityError when out of range.
    void validate() const;
};

/// Immutable undirected simple graph in compressed row form. Adjacency runs
/// are strictly increasing; the structure is safe to share across threads
/// after construction.
class SparseGraph {
public:
    SparseGraph() : offsets_(1, 0) {}

    std::uint64_t vertex_count() const { return n_; }
    std::uint64_t edge_count() const { return m_; }

    std::uint32_t degree(Vertex v) const {
        check_vertex(v);
        return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
    }

    std::span<const Vertex> neighbors(Vertex v) const {
        check_vertex(v);
        return {adjacency_.data() + offsets_[v],
                adjacency_.data() + offsets_[v + 1]};
    }

    const std::vector<std::uint64_t>& offsets() const { return offsets_; }
    const std::vector<Vertex>& adjacency() const { return adjacency_; }

    bool has_edge(Vertex u, Vertex v) const;

    bool operator==(const SparseGraph& other) const = default;

    /// Builds from an unordered pair list; duplicates are merged, self-loops
    /// and out-of-range endpoints rejected.
    static SparseGraph from_edges(std::uint64_t n,
                                  const std::vector<std::pair<Vertex, Vertex>>& edges);

    /// Adopts pre-sorted per-vertex adjacency (trusted internal path).
    static SparseGraph adopt(std::uint64_t n, std::vector<std::uint64_t> offsets,
                             std::vector<Vertex> adjacency);

private:
    void check_vertex(Vertex v) const {
        if (v >= n_) throw InvalidParameterError("vertex id out of range");
    }

    std::uint64_t n_ = 0;
    std::uint64_t m_ = 0;
    std::vector<std::uint64_t> offsets_;
    std::vector<Vertex> adjacency_;
};

/// Samples G(n, p) with p = c/n using geometric skips over the linearized
/// pair sequence, so the cost is O(n + m) rather than O(n^2).
SparseGraph sample_gnp(const GraphParams& params);

/// Test fixture hook: sample with an explicit edge probability. The public
/// c/n parametrization cannot express the p = 0 and p = 1 corner cases.
SparseGraph sample_gnp_with_p(std::uint64_t n, double p, std::uint64_t seed);

SparseGraph build_from_edges(std::uint64_t n,
                             const std::vector<std::pair<Vertex, Vertex>>& edges);

/// Flat binary dump: magic "GPW1", n, m as 64-bit LE, then offsets, then
/// neighbor ids.
void save_graph(const SparseGraph& g, const std::string& path);
SparseGraph load_graph(const std::string& path);

/// Plain "u v" per line, one line per edge with u < v.
void save_edgelist(const SparseGraph& g, const std::string& path);
/// n = 0 infers the vertex count as max endpoint + 1.
SparseGraph load_edgelist(const std::string& path, std::uint64_t n = 0);

} // namespace gpower
