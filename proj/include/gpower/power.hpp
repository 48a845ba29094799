#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "gpower/graph.hpp"

namespace gpower {

/// BFS layer sizes (d_1, ..., d_r) around a root.
struct NeighborhoodProfile {
    Vertex root = 0;
    std::vector<std::uint64_t> layers;

    std::uint64_t total() const {
        std::uint64_t s = 0;
        for (auto d : layers) s += d;
        return s;
    }
};

/// Maximum degree of G^r plus the full degree histogram.
struct MaxDegreeResult {
    Vertex argmax_vertex = 0;
    std::uint64_t max_degree = 0;
    std::map<std::uint64_t, std::uint64_t> histogram; // degree -> vertex count
};

/// Reusable per-worker BFS state. The visited array is epoch-stamped so the
/// all-roots scan never clears it; that scan dominates runtime at large n.
class BfsScratch {
public:
    void reset(std::uint64_t n);

    std::vector<std::uint32_t> mark;
    std::vector<Vertex> order; // visited vertices in discovery sequence
    std::uint32_t epoch = 0;
};

/// Exact sizes of the BFS layers 1..radius around root.
NeighborhoodProfile layer_profile(const SparseGraph& g, Vertex root, int radius,
                                  BfsScratch& scratch);
NeighborhoodProfile layer_profile(const SparseGraph& g, Vertex root, int radius);

/// Degree of root in G^radius: the number of vertices within distance radius.
std::uint64_t power_degree(const SparseGraph& g, Vertex root, int radius,
                           BfsScratch& scratch);
std::uint64_t power_degree(const SparseGraph& g, Vertex root, int radius);

/// Scans every root; ties broken toward the smallest vertex id. The scan
/// partitions roots across `workers` threads and the result is independent
/// of the worker count.
MaxDegreeResult max_power_degree(const SparseGraph& g, int radius, int workers = 1);

/// Builds G^radius by repeated relaxation of the boolean reachability closure
/// (bitset rows), a computation independent of the truncated-BFS path. Meant
/// as a small-instance oracle: O(n * m * radius) work, capped by `max_n`.
SparseGraph exact_power_graph(const SparseGraph& g, int radius,
                              std::uint64_t max_n = 2000);

/// Census of layer profiles over all roots of one graph, keyed by the layer
/// vector; values count roots.
std::map<std::vector<std::uint64_t>, std::uint64_t>
profile_census(const SparseGraph& g, int radius);

} // namespace gpower
