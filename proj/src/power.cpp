#include "gpower/power.hpp"

#include <algorithm>
#include <thread>

namespace gpower {

void BfsScratch::reset(std::uint64_t n) {
    if (mark.size() != n) {
        mark.assign(n, 0);
        epoch = 0;
    }
    order.clear();
    order.reserve(64);
}

namespace {

void check_radius(int radius) {
    if (radius < 1) throw InvalidParameterError("radius must be at least 1");
}

} // namespace

NeighborhoodProfile layer_profile(const SparseGraph& g, Vertex root, int radius,
                                  BfsScratch& scratch) {
    check_radius(radius);
    const std::uint64_t n = g.vertex_count();
    if (root >= n) throw InvalidParameterError("root vertex out of range");

    scratch.reset(n);
    if (scratch.epoch == std::numeric_limits<std::uint32_t>::max()) {
        std::fill(scratch.mark.begin(), scratch.mark.end(), 0);
        scratch.epoch = 0;
    }
    const std::uint32_t stamp = ++scratch.epoch;

    NeighborhoodProfile profile;
    profile.root = root;
    profile.layers.assign(static_cast<std::size_t>(radius), 0);

    auto& order = scratch.order;
    order.clear();
    order.push_back(root);
    scratch.mark[root] = stamp;

    std::size_t frontier_begin = 0;
    for (int depth = 1; depth <= radius; ++depth) {
        const std::size_t frontier_end = order.size();
        if (frontier_begin == frontier_end) break;
        for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
            for (Vertex u : g.neighbors(order[i])) {
                if (scratch.mark[u] != stamp) {
                    scratch.mark[u] = stamp;
                    order.push_back(u);
                }
            }
        }
        profile.layers[static_cast<std::size_t>(depth - 1)] =
            order.size() - frontier_end;
        frontier_begin = frontier_end;
    }
    return profile;
}

NeighborhoodProfile layer_profile(const SparseGraph& g, Vertex root, int radius) {
    BfsScratch scratch;
    return layer_profile(g, root, radius, scratch);
}

std::uint64_t power_degree(const SparseGraph& g, Vertex root, int radius,
                           BfsScratch& scratch) {
    return layer_profile(g, root, radius, scratch).total();
}

std::uint64_t power_degree(const SparseGraph& g, Vertex root, int radius) {
    BfsScratch scratch;
    return power_degree(g, root, radius, scratch);
}

MaxDegreeResult max_power_degree(const SparseGraph& g, int radius, int workers) {
    check_radius(radius);
    const std::uint64_t n = g.vertex_count();
    if (n == 0) throw InvalidParameterError("graph has no vertices");
    if (workers < 1) workers = 1;
    const std::uint64_t chunk_count =
        std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), n);

    struct Partial {
        std::uint64_t best_degree = 0;
        Vertex best_vertex = 0;
        bool seen = false;
        std::map<std::uint64_t, std::uint64_t> histogram;
    };
    std::vector<Partial> partials(chunk_count);

    auto scan = [&](std::uint64_t chunk) {
        const std::uint64_t lo = n * chunk / chunk_count;
        const std::uint64_t hi = n * (chunk + 1) / chunk_count;
        BfsScratch scratch;
        Partial& part = partials[chunk];
        for (std::uint64_t v = lo; v < hi; ++v) {
            const std::uint64_t deg =
                power_degree(g, static_cast<Vertex>(v), radius, scratch);
            ++part.histogram[deg];
            if (!part.seen || deg > part.best_degree) {
                part.seen = true;
                part.best_degree = deg;
                part.best_vertex = static_cast<Vertex>(v);
            }
        }
    };

    if (chunk_count == 1) {
        scan(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(chunk_count);
        for (std::uint64_t chunk = 0; chunk < chunk_count; ++chunk)
            pool.emplace_back(scan, chunk);
        for (auto& t : pool) t.join();
    }

    MaxDegreeResult result;
    bool seen = false;
    for (const Partial& part : partials) {
        if (!part.seen) continue;
        // chunks hold increasing vertex ranges; strict > keeps the smallest id
        if (!seen || part.best_degree > result.max_degree) {
            seen = true;
            result.max_degree = part.best_degree;
            result.argmax_vertex = part.best_vertex;
        }
        for (const auto& [deg, count] : part.histogram)
            result.histogram[deg] += count;
    }
    return result;
}

SparseGraph exact_power_graph(const SparseGraph& g, int radius, std::uint64_t max_n) {
    check_radius(radius);
    const std::uint64_t n = g.vertex_count();
    if (n > max_n)
        throw CapacityError("exact power oracle limited to " + std::to_string(max_n) +
                            " vertices (O(n*m*r) cost)");

    const std::uint64_t words = (n + 63) / 64;
    std::vector<std::uint64_t> reach(n * words, 0);
    for (std::uint64_t v = 0; v < n; ++v)
        reach[v * words + v / 64] |= std::uint64_t{1} << (v % 64);

    std::vector<std::uint64_t> next(n * words);
    for (int step = 0; step < radius; ++step) {
        next = reach;
        for (std::uint64_t v = 0; v < n; ++v) {
            std::uint64_t* row = next.data() + v * words;
            for (Vertex u : g.neighbors(static_cast<Vertex>(v))) {
                const std::uint64_t* other = reach.data() + std::uint64_t{u} * words;
                for (std::uint64_t w = 0; w < words; ++w) row[w] |= other[w];
            }
        }
        reach.swap(next);
    }

    std::vector<std::uint64_t> offsets(n + 1, 0);
    for (std::uint64_t v = 0; v < n; ++v) {
        std::uint64_t deg = 0;
        const std::uint64_t* row = reach.data() + v * words;
        for (std::uint64_t w = 0; w < words; ++w)
            deg += static_cast<std::uint64_t>(__builtin_popcountll(row[w]));
        offsets[v + 1] = offsets[v] + (deg - 1); // row always contains v itself
    }

    std::vector<Vertex> adjacency(offsets[n]);
    std::uint64_t pos = 0;
    for (std::uint64_t v = 0; v < n; ++v) {
        const std::uint64_t* row = reach.data() + v * words;
        for (std::uint64_t w = 0; w < words; ++w) {
            std::uint64_t bits = row[w];
            while (bits) {
                const auto u = static_cast<Vertex>(
                    w * 64 + static_cast<std::uint64_t>(__builtin_ctzll(bits)));
                bits &= bits - 1;
                if (u != v) adjacency[pos++] = u;
            }
        }
    }
    return SparseGraph::adopt(n, std::move(offsets), std::move(adjacency));
}

std::map<std::vector<std::uint64_t>, std::uint64_t>
profile_census(const SparseGraph& g, int radius) {
    check_radius(radius);
    std::map<std::vector<std::uint64_t>, std::uint64_t> census;
    BfsScratch scratch;
    for (std::uint64_t v = 0; v < g.vertex_count(); ++v)
        ++census[layer_profile(g, static_cast<Vertex>(v), radius, scratch).layers];
    return census;
}

} // namespace gpower
