#pragma once

// Graph data model: directed integer-weighted sparse graphs, their
// undirected support, deterministic generators for desk-scale test
// families, and DIMACS-style file I/O.

#include "rdiv/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rdiv {

inline constexpr const char* kToolVersion = "rdiv 0.1.0";

using VertexId = std::int32_t;
using Weight = std::int64_t;

/// Index into the undirected-support edge sequence. Divisions partition
/// EdgeIds; they are stable for the lifetime of a Graph.
using EdgeId = std::int32_t;

/// Sparsity validation knob: edge count must satisfy m <= c_sparse * n.
/// A knob rather than a claim; generators only emit families that are
/// sparse by construction.
inline constexpr double kDefaultSparsity = 4.0;

struct Edge {
    VertexId u = 0;
    VertexId v = 0;
    Weight w = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Immutable after construction; safe to share across concurrent readers.
///
/// Vertex ids are dense integers in [0, n). Self-loops are rejected.
/// Parallel edges are permitted only in directed graphs; undirected edges
/// are stored with u < v and must be distinct.
class Graph {
public:
    Graph() = default;

    Graph(VertexId n, std::vector<Edge> edges, bool directed)
        : n_(n), edges_(std::move(edges)), directed_(directed) {
        if (n_ < 0) {
            throw std::invalid_argument("negative vertex count");
        }
        for (auto& e : edges_) {
            if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_) {
                throw std::invalid_argument("edge endpoint out of range");
            }
            if (e.u == e.v) {
                throw std::invalid_argument("self-loops are not permitted");
            }
            if (!directed_) {
                if (e.u > e.v) {
                    std::swap(e.u, e.v);
                }
                e.w = 0;  // undirected graphs carry no edge weights
            }
        }
        if (!directed_) {
            auto sorted = edges_;
            std::sort(sorted.begin(), sorted.end(), [](const Edge& a, const Edge& b) {
                return std::pair(a.u, a.v) < std::pair(b.u, b.v);
            });
            for (std::size_t i = 1; i < sorted.size(); ++i) {
                if (sorted[i].u == sorted[i - 1].u && sorted[i].v == sorted[i - 1].v) {
                    throw std::invalid_argument("duplicate undirected edge");
                }
            }
        }
        build_adjacency();
    }

    VertexId vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    bool is_directed() const { return directed_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(std::size_t i) const { return edges_[i]; }

    /// (neighbor, edge index) pairs. Out-neighbors for directed graphs,
    /// all incident edges for undirected ones.
    const std::vector<std::pair<VertexId, std::int32_t>>& neighbors(VertexId v) const {
        return adjacency_[static_cast<std::size_t>(v)];
    }

    bool sparsity_ok(double c_sparse = kDefaultSparsity) const {
        return static_cast<double>(edges_.size()) <= c_sparse * static_cast<double>(n_);
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.directed_ == b.directed_ && a.edges_ == b.edges_;
    }

private:
    void build_adjacency() {
        adjacency_.assign(static_cast<std::size_t>(n_), {});
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            const Edge& e = edges_[i];
            adjacency_[static_cast<std::size_t>(e.u)].emplace_back(e.v, static_cast<std::int32_t>(i));
            if (!directed_) {
                adjacency_[static_cast<std::size_t>(e.v)].emplace_back(e.u, static_cast<std::int32_t>(i));
            }
        }
    }

    VertexId n_ = 0;
    std::vector<Edge> edges_;
    bool directed_ = true;
    std::vector<std::vector<std::pair<VertexId, std::int32_t>>> adjacency_;
};

/// Non-negative rational vertex weights with positive total.
class VertexWeighting {
public:
    explicit VertexWeighting(std::vector<Rat> weights) : weights_(std::move(weights)) {
        for (const auto& w : weights_) {
            if (w < Rat(0)) {
                throw std::invalid_argument("vertex weights must be non-negative");
            }
            total_ += w;
        }
        if (total_ <= Rat(0)) {
            throw std::invalid_argument("total vertex weight must be positive");
        }
    }

    static VertexWeighting unit(VertexId n) {
        return VertexWeighting(std::vector<Rat>(static_cast<std::size_t>(n), Rat(1)));
    }

    /// Weight 1 on `support`, 0 elsewhere.
    static VertexWeighting indicator(VertexId n, const std::vector<VertexId>& support) {
        std::vector<Rat> w(static_cast<std::size_t>(n), Rat(0));
        for (VertexId v : support) {
            w[static_cast<std::size_t>(v)] = Rat(1);
        }
        return VertexWeighting(std::move(w));
    }

    const Rat& operator[](VertexId v) const { return weights_[static_cast<std::size_t>(v)]; }
    VertexId size() const { return static_cast<VertexId>(weights_.size()); }
    const Rat& total() const { return total_; }

private:
    std::vector<Rat> weights_;
    Rat total_{0};
};

/// Undirected view of a graph: one weightless edge per unordered adjacent
/// pair. origin[e] lists the indices of the directed edges that collapse
/// onto support edge e (a single index when the input is undirected).
struct UndirectedSupport {
    Graph graph;
    std::vector<std::vector<std::int32_t>> origin;
};

/// Support edges are numbered by first occurrence in g.edges(), which makes
/// the operation an identity mapping (hence idempotent) on undirected input.
inline UndirectedSupport undirected_support(const Graph& g) {
    const VertexId n = g.vertex_count();
    std::vector<Edge> support_edges;
    std::vector<std::vector<std::int32_t>> origin;
    // first-occurrence id per unordered pair, via adjacency-bucketed probing
    std::vector<std::vector<std::pair<VertexId, EdgeId>>> seen(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edge(i);
        const VertexId lo = std::min(e.u, e.v);
        const VertexId hi = std::max(e.u, e.v);
        EdgeId id = -1;
        for (const auto& [other, eid] : seen[static_cast<std::size_t>(lo)]) {
            if (other == hi) {
                id = eid;
                break;
            }
        }
        if (id < 0) {
            id = static_cast<EdgeId>(support_edges.size());
            seen[static_cast<std::size_t>(lo)].emplace_back(hi, id);
            support_edges.push_back(Edge{lo, hi, 0});
            origin.emplace_back();
        }
        origin[static_cast<std::size_t>(id)].push_back(static_cast<std::int32_t>(i));
    }
    return UndirectedSupport{Graph(n, std::move(support_edges), false), std::move(origin)};
}

// ---------------------------------------------------------------------------
// Generators

struct WeightRange {
    Weight lo = 1;
    Weight hi = 1;
};

namespace detail {

/// splitmix64; hand-rolled so that generated families are byte-identical
/// across platforms and standard-library versions.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [lo, hi], rejection-sampled.
    std::int64_t bounded(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        if (span == 0) {  // full 64-bit range
            return static_cast<std::int64_t>(next());
        }
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                    std::numeric_limits<std::uint64_t>::max() % span;
        std::uint64_t x = next();
        while (x >= limit) {
            x = next();
        }
        return lo + static_cast<std::int64_t>(x % span);
    }
};

}  // namespace detail

/// width x height grid with deterministic pseudorandom integer weights.
/// Directed grids carry both orientations of every grid edge, each with an
/// independently drawn weight. Grids are planar, so they stay within the
/// sparsity budget by construction.
inline Graph generate_grid(int width, int height, WeightRange range, std::uint64_t seed,
                           bool directed = true) {
    if (width < 1 || height < 1) {
        throw std::invalid_argument("grid dimensions must be positive");
    }
    if (range.lo > range.hi) {
        throw std::invalid_argument("empty weight range");
    }
    detail::SplitMix64 rng(seed);
    const auto vertex = [width](int x, int y) {
        return static_cast<VertexId>(y * width + x);
    };
    std::vector<Edge> edges;
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            const VertexId a = vertex(x, y);
            if (x + 1 < width) {
                const VertexId b = vertex(x + 1, y);
                if (directed) {
                    edges.push_back(Edge{a, b, rng.bounded(range.lo, range.hi)});
                    edges.push_back(Edge{b, a, rng.bounded(range.lo, range.hi)});
                } else {
                    edges.push_back(Edge{a, b, 0});
                }
            }
            if (y + 1 < height) {
                const VertexId b = vertex(x, y + 1);
                if (directed) {
                    edges.push_back(Edge{a, b, rng.bounded(range.lo, range.hi)});
                    edges.push_back(Edge{b, a, rng.bounded(range.lo, range.hi)});
                } else {
                    edges.push_back(Edge{a, b, 0});
                }
            }
        }
    }
    return Graph(static_cast<VertexId>(width) * height, std::move(edges), directed);
}

/// m directed edges sampled uniformly (no self-loops; parallels possible).
inline Graph generate_random_directed(VertexId n, std::size_t m, WeightRange range,
                                      std::uint64_t seed) {
    if (n < 2) {
        throw std::invalid_argument("random graph needs at least two vertices");
    }
    if (range.lo > range.hi) {
        throw std::invalid_argument("empty weight range");
    }
    detail::SplitMix64 rng(seed);
    std::vector<Edge> edges;
    edges.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        const auto u = static_cast<VertexId>(rng.bounded(0, n - 1));
        auto v = static_cast<VertexId>(rng.bounded(0, n - 2));
        if (v >= u) {
            ++v;
        }
        edges.push_back(Edge{u, v, rng.bounded(range.lo, range.hi)});
    }
    return Graph(n, std::move(edges), true);
}

// ---------------------------------------------------------------------------
// DIMACS shortest-path style file format.
//
//   c <comment>
//   p sp <n> <m>          directed; arcs "a <u> <v> <w>", 1-based ids
//   p ud <n> <m>          undirected; edges "e <u> <v>", 1-based ids

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

enum class GraphFormat { autodetect, directed_sp, undirected_ud };

inline Graph load_graph(std::istream& in, GraphFormat format = GraphFormat::autodetect) {
    std::string line;
    int line_no = 0;
    VertexId n = -1;
    std::size_t m = 0;
    bool directed = true;
    bool have_header = false;
    std::vector<Edge> edges;

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag == "c") {
            continue;  // blank or comment
        }
        if (tag == "p") {
            if (have_header) {
                throw ParseError(line_no, "duplicate problem line");
            }
            std::string kind;
            long long hn = 0, hm = 0;
            if (!(ls >> kind >> hn >> hm)) {
                throw ParseError(line_no, "malformed problem line");
            }
            if (kind == "sp") {
                directed = true;
            } else if (kind == "ud") {
                directed = false;
            } else {
                throw ParseError(line_no, "unknown problem kind '" + kind + "'");
            }
            if (format == GraphFormat::directed_sp && !directed) {
                throw ParseError(line_no, "expected a directed (sp) graph");
            }
            if (format == GraphFormat::undirected_ud && directed) {
                throw ParseError(line_no, "expected an undirected (ud) graph");
            }
            if (hn < 0 || hm < 0) {
                throw ParseError(line_no, "negative counts in problem line");
            }
            n = static_cast<VertexId>(hn);
            m = static_cast<std::size_t>(hm);
            have_header = true;
            edges.reserve(m);
            continue;
        }
        if (!have_header) {
            throw ParseError(line_no, "edge data before problem line");
        }
        long long u = 0, v = 0, w = 0;
        if (tag == "a" && directed) {
            if (!(ls >> u >> v >> w)) {
                throw ParseError(line_no, "malformed arc line");
            }
        } else if (tag == "e" && !directed) {
            if (!(ls >> u >> v)) {
                throw ParseError(line_no, "malformed edge line");
            }
        } else {
            throw ParseError(line_no, "unexpected line tag '" + tag + "'");
        }
        std::string trailing;
        if (ls >> trailing) {
            throw ParseError(line_no, "trailing tokens after edge data");
        }
        if (u < 1 || u > n || v < 1 || v > n) {
            throw ParseError(line_no, "vertex id out of range (ids are 1-based)");
        }
        edges.push_back(Edge{static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1),
                             static_cast<Weight>(w)});
    }
    if (!have_header) {
        throw ParseError(line_no, "missing problem line");
    }
    if (edges.size() != m) {
        throw ParseError(line_no, "header announces " + std::to_string(m) + " edges, found " +
                                      std::to_string(edges.size()));
    }
    try {
        return Graph(n, std::move(edges), directed);
    } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
    }
}

/// Canonical form: problem line followed by edge lines, no comments.
inline void save_graph(const Graph& g, std::ostream& out) {
    if (g.is_directed()) {
        out << "p sp " << g.vertex_count() << ' ' << g.edge_count() << '\n';
        for (const Edge& e : g.edges()) {
            out << "a " << e.u + 1 << ' ' << e.v + 1 << ' ' << e.w << '\n';
        }
    } else {
        out << "p ud " << g.vertex_count() << ' ' << g.edge_count() << '\n';
        for (const Edge& e : g.edges()) {
            out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
        }
    }
}

inline Graph load_graph_file(const std::string& path, GraphFormat format = GraphFormat::autodetect) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open graph file: " + path);
    }
    return load_graph(in, format);
}

inline void save_graph_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write graph file: " + path);
    }
    save_graph(g, out);
}

inline std::string save_graph_string(const Graph& g) {
    std::ostringstream out;
    save_graph(g, out);
    return out.str();
}

}  // namespace rdiv
