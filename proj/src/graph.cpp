#include "gpower/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "gpower/random.hpp"

namespace gpower {

void GraphParams::validate() const {
    if (n < 1) throw InvalidParameterError("vertex count must be at least 1");
    if (n > kMaxVertices)
        throw CapacityError("vertex count exceeds 32-bit id capacity (2^31 - 2)");
    if (!(c > 0.0)) throw InvalidParameterError("edge density c must be positive");
    if (c > static_cast<double>(n))
        throw InvalidParameterError("c/n exceeds 1; not a probability");
}

bool SparseGraph::has_edge(Vertex u, Vertex v) const {
    const auto run = neighbors(u);
    check_vertex(v);
    return std::binary_search(run.begin(), run.end(), v);
}

SparseGraph SparseGraph::adopt(std::uint64_t n, std::vector<std::uint64_t> offsets,
                               std::vector<Vertex> adjacency) {
    SparseGraph g;
    g.n_ = n;
    g.m_ = adjacency.size() / 2;
    g.offsets_ = std::move(offsets);
    g.adjacency_ = std::move(adjacency);
    return g;
}

SparseGraph SparseGraph::from_edges(std::uint64_t n,
                                    const std::vector<std::pair<Vertex, Vertex>>& edges) {
    if (n > kMaxVertices)
        throw CapacityError("vertex count exceeds 32-bit id capacity (2^31 - 2)");
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n)
            throw InvalidParameterError("edge endpoint out of range");
        if (u == v) throw InvalidParameterError("self-loops are not allowed");
    }

    std::vector<std::pair<Vertex, Vertex>> canon;
    canon.reserve(edges.size());
    for (const auto& [u, v] : edges)
        canon.emplace_back(std::min(u, v), std::max(u, v));
    std::sort(canon.begin(), canon.end());
    canon.erase(std::unique(canon.begin(), canon.end()), canon.end());

    std::vector<std::uint64_t> offsets(n + 1, 0);
    for (const auto& [u, v] : canon) {
        ++offsets[u + 1];
        ++offsets[v + 1];
    }
    for (std::uint64_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];

    std::vector<Vertex> adjacency(canon.size() * 2);
    std::vector<std::uint64_t> cursor(offsets.begin(), offsets.end() - 1);
    for (const auto& [u, v] : canon) {
        adjacency[cursor[u]++] = v;
        adjacency[cursor[v]++] = u;
    }
    for (std::uint64_t v = 0; v < n; ++v)
        std::sort(adjacency.begin() + static_cast<std::ptrdiff_t>(offsets[v]),
                  adjacency.begin() + static_cast<std::ptrdiff_t>(offsets[v + 1]));

    return adopt(n, std::move(offsets), std::move(adjacency));
}

SparseGraph build_from_edges(std::uint64_t n,
                             const std::vector<std::pair<Vertex, Vertex>>& edges) {
    return SparseGraph::from_edges(n, edges);
}

namespace {

// Walks rows v = 1..n-1 with columns w < v; a geometric skip selects the next
// present pair. Row-major order makes every adjacency run come out sorted
// without a per-vertex sort pass.
std::vector<std::pair<Vertex, Vertex>> skip_sample_pairs(std::uint64_t n, double p,
                                                         RandomStream& stream) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    if (n < 2 || p <= 0.0) return edges;

    if (p >= 1.0) {
        edges.reserve(n * (n - 1) / 2);
        for (std::uint64_t v = 1; v < n; ++v)
            for (std::uint64_t w = 0; w < v; ++w)
                edges.emplace_back(static_cast<Vertex>(w), static_cast<Vertex>(v));
        return edges;
    }

    if (p > 1e-4) edges.reserve(static_cast<std::size_t>(p * 0.55 * n * (n - 1) / 2));
    const double log_q = std::log1p(-p);
    std::uint64_t v = 1;
    std::uint64_t w = 0;
    bool first = true;
    while (v < n) {
        const double skip_d = std::floor(std::log(stream.uniform_open01()) / log_q);
        if (skip_d > 9.0e18) break; // skip larger than any remaining pair range
        std::uint64_t advance = static_cast<std::uint64_t>(skip_d) + (first ? 0 : 1);
        first = false;
        w += advance;
        while (v < n && w >= v) {
            w -= v;
            ++v;
        }
        if (v < n)
            edges.emplace_back(static_cast<Vertex>(w), static_cast<Vertex>(v));
    }
    return edges;
}

SparseGraph csr_from_row_ordered(std::uint64_t n,
                                 const std::vector<std::pair<Vertex, Vertex>>& edges) {
    std::vector<std::uint64_t> offsets(n + 1, 0);
    for (const auto& [w, v] : edges) {
        ++offsets[w + 1];
        ++offsets[v + 1];
    }
    for (std::uint64_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];

    std::vector<Vertex> adjacency(edges.size() * 2);
    std::vector<std::uint64_t> cursor(offsets.begin(), offsets.end() - 1);
    // edges arrive with v increasing and, within a row, w increasing; appending
    // in generation order therefore leaves every run sorted
    for (const auto& [w, v] : edges) {
        adjacency[cursor[v]++] = w;
        adjacency[cursor[w]++] = v;
    }
    return SparseGraph::adopt(n, std::move(offsets), std::move(adjacency));
}

} // namespace

SparseGraph sample_gnp_with_p(std::uint64_t n, double p, std::uint64_t seed) {
    if (n > kMaxVertices)
        throw CapacityError("vertex count exceeds 32-bit id capacity (2^31 - 2)");
    if (!(p >= 0.0) || p > 1.0)
        throw InvalidParameterError("edge probability must lie in [0, 1]");
    RandomStream stream(seed);
    return csr_from_row_ordered(n, skip_sample_pairs(n, p, stream));
}

SparseGraph sample_gnp(const GraphParams& params) {
    params.validate();
    const double p = params.c / static_cast<double>(params.n);
    return sample_gnp_with_p(params.n, p, params.seed);
}

namespace {

constexpr char kMagic[4] = {'G', 'P', 'W', '1'};

void write_u64(std::ofstream& out, std::uint64_t x) {
    unsigned char buf[8];
    for (int i = 0; i < 8; ++i) buf[i] = static_cast<unsigned char>(x >> (8 * i));
    out.write(reinterpret_cast<const char*>(buf), 8);
}

std::uint64_t read_u64(std::ifstream& in) {
    unsigned char buf[8];
    in.read(reinterpret_cast<char*>(buf), 8);
    std::uint64_t x = 0;
    for (int i = 0; i < 8; ++i) x |= static_cast<std::uint64_t>(buf[i]) << (8 * i);
    return x;
}

void write_u32(std::ofstream& out, std::uint32_t x) {
    unsigned char buf[4];
    for (int i = 0; i < 4; ++i) buf[i] = static_cast<unsigned char>(x >> (8 * i));
    out.write(reinterpret_cast<const char*>(buf), 4);
}

std::uint32_t read_u32(std::ifstream& in) {
    unsigned char buf[4];
    in.read(reinterpret_cast<char*>(buf), 4);
    std::uint32_t x = 0;
    for (int i = 0; i < 4; ++i) x |= static_cast<std::uint32_t>(buf[i]) << (8 * i);
    return x;
}

} // namespace

void save_graph(const SparseGraph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path);
    out.write(kMagic, 4);
    write_u64(out, g.vertex_count());
    write_u64(out, g.edge_count());
    for (std::uint64_t off : g.offsets()) write_u64(out, off);
    for (Vertex v : g.adjacency()) write_u32(out, v);
    if (!out) throw IoError("write failed: " + path);
}

SparseGraph load_graph(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open for reading: " + path);
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, kMagic, 4) != 0)
        throw IoError("not a graph dump (bad magic): " + path);
    const std::uint64_t n = read_u64(in);
    const std::uint64_t m = read_u64(in);
    if (n > kMaxVertices) throw IoError("corrupt graph dump (n too large): " + path);
    std::vector<std::uint64_t> offsets(n + 1);
    for (auto& off : offsets) off = read_u64(in);
    std::vector<Vertex> adjacency(2 * m);
    for (auto& v : adjacency) v = read_u32(in);
    if (!in) throw IoError("truncated graph dump: " + path);
    if (offsets.front() != 0 || offsets.back() != 2 * m)
        throw IoError("corrupt graph dump (offsets): " + path);
    return SparseGraph::adopt(n, std::move(offsets), std::move(adjacency));
}

void save_edgelist(const SparseGraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path);
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (Vertex v : g.neighbors(u))
            if (u < v) out << u << ' ' << v << '\n';
    if (!out) throw IoError("write failed: " + path);
}

SparseGraph load_edgelist(const std::string& path, std::uint64_t n) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open for reading: " + path);
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::uint64_t max_id = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        std::uint64_t u, v;
        if (!(row >> u >> v)) throw IoError("malformed edge line in " + path);
        max_id = std::max({max_id, u, v});
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (n == 0) n = edges.empty() ? 0 : max_id + 1;
    return SparseGraph::from_edges(n, edges);
}

} // namespace gpower
