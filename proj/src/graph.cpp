#include "twocore/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace twocore {

Graph Graph::from_edges(std::size_t n, std::vector<std::pair<VertexId, VertexId>> pairs,
                        NormalizeStats* stats) {
    NormalizeStats local;
    std::size_t kept = 0;
    for (auto& [u, v] : pairs) {
        if (u >= n || v >= n) throw std::out_of_range("edge endpoint exceeds vertex count");
        if (u == v) {
            ++local.self_loops;
            continue;
        }
        if (u > v) std::swap(u, v);
        pairs[kept++] = {u, v};
    }
    pairs.resize(kept);
    std::sort(pairs.begin(), pairs.end());
    auto last = std::unique(pairs.begin(), pairs.end());
    local.duplicates = static_cast<std::size_t>(pairs.end() - last);
    pairs.erase(last, pairs.end());
    if (stats) *stats = local;

    Graph g;
    g.n_ = n;
    g.edges_ = std::move(pairs);
    g.offsets_.assign(n + 1, 0);
    for (const auto& [u, v] : g.edges_) {
        ++g.offsets_[u + 1];
        ++g.offsets_[v + 1];
    }
    for (std::size_t i = 1; i <= n; ++i) g.offsets_[i] += g.offsets_[i - 1];
    g.adj_.resize(2 * g.edges_.size());
    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    // Lexicographic edge order fills every neighbor list in ascending order:
    // for vertex w, all (x, w) with x < w are scanned before any (w, v).
    for (const auto& [u, v] : g.edges_) {
        g.adj_[cursor[u]++] = v;
        g.adj_[cursor[v]++] = u;
    }
    return g;
}

ComponentLabeling connected_components(const Graph& g) {
    const std::size_t n = g.vertex_count();
    ComponentLabeling out;
    out.label.assign(n, kUnreachable);
    std::vector<VertexId> queue;
    for (VertexId start = 0; start < n; ++start) {
        if (out.label[start] != kUnreachable) continue;
        const auto id = static_cast<std::uint32_t>(out.sizes.size());
        out.label[start] = id;
        queue.assign(1, start);
        std::size_t head = 0, size = 0;
        while (head < queue.size()) {
            VertexId v = queue[head++];
            ++size;
            for (VertexId w : g.neighbors(v)) {
                if (out.label[w] == kUnreachable) {
                    out.label[w] = id;
                    queue.push_back(w);
                }
            }
        }
        out.sizes.push_back(size);
    }
    out.largest_id = 0;
    for (std::uint32_t id = 1; id < out.sizes.size(); ++id)
        if (out.sizes[id] > out.sizes[out.largest_id]) out.largest_id = id;
    return out;
}

std::vector<std::uint32_t> bfs_distances(const Graph& g, std::span<const VertexId> sources) {
    if (sources.empty()) throw std::invalid_argument("bfs_distances: empty source set");
    std::vector<std::uint32_t> dist(g.vertex_count(), kUnreachable);
    std::vector<VertexId> queue;
    queue.reserve(sources.size());
    for (VertexId s : sources) {
        if (s >= g.vertex_count()) throw std::out_of_range("bfs_distances: source out of range");
        if (dist[s] == 0) continue;
        dist[s] = 0;
        queue.push_back(s);
    }
    std::size_t head = 0;
    while (head < queue.size()) {
        VertexId v = queue[head++];
        for (VertexId w : g.neighbors(v)) {
            if (dist[w] == kUnreachable) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const VertexId> keep) {
    std::vector<VertexId> ids(keep.begin(), keep.end());
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    for (VertexId v : ids)
        if (v >= g.vertex_count()) throw std::out_of_range("induced_subgraph: vertex out of range");

    std::vector<std::uint32_t> remap(g.vertex_count(), kUnreachable);
    for (std::size_t i = 0; i < ids.size(); ++i) remap[ids[i]] = static_cast<std::uint32_t>(i);

    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (const auto& [u, v] : g.edges())
        if (remap[u] != kUnreachable && remap[v] != kUnreachable)
            pairs.emplace_back(remap[u], remap[v]);

    InducedSubgraph out;
    out.graph = Graph::from_edges(ids.size(), std::move(pairs));
    out.original_id = std::move(ids);
    return out;
}

Graph disjoint_union(std::span<const Graph> parts) {
    std::size_t n = 0;
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (const Graph& part : parts) {
        const auto base = static_cast<VertexId>(n);
        for (const auto& [u, v] : part.edges()) pairs.emplace_back(base + u, base + v);
        n += part.vertex_count();
    }
    return Graph::from_edges(n, std::move(pairs));
}

namespace {

bool parse_u64(const std::string& tok, std::uint64_t& out) {
    if (tok.empty()) return false;
    out = 0;
    for (char c : tok) {
        if (c < '0' || c > '9') return false;
        if (out > (UINT64_MAX - static_cast<std::uint64_t>(c - '0')) / 10) return false;
        out = out * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return true;
}

}  // namespace

Graph read_edge_list(std::istream& in, EdgeListStats* stats) {
    EdgeListStats local;
    std::vector<std::pair<VertexId, VertexId>> pairs;
    std::uint64_t declared_n = 0;
    bool have_n = false;
    std::uint64_t max_id = 0;
    bool any_edge = false;

    std::string line;
    std::size_t line_no = 0;
    bool first_content = true;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a)) continue;  // blank or comment-only line

        if (first_content && a == "n") {
            first_content = false;
            if (!(ls >> b) || (ls >> extra))
                throw std::runtime_error("edge list line " + std::to_string(line_no) +
                                         ": malformed header");
            if (!parse_u64(b, declared_n))
                throw std::runtime_error("edge list line " + std::to_string(line_no) +
                                         ": malformed header count");
            have_n = true;
            local.had_header = true;
            continue;
        }
        first_content = false;

        if (!(ls >> b) || (ls >> extra))
            throw std::runtime_error("edge list line " + std::to_string(line_no) +
                                     ": expected \"u v\"");
        std::uint64_t u, v;
        if (!parse_u64(a, u) || !parse_u64(b, v))
            throw std::runtime_error("edge list line " + std::to_string(line_no) +
                                     ": expected \"u v\"");
        if (u > std::numeric_limits<VertexId>::max() || v > std::numeric_limits<VertexId>::max())
            throw std::out_of_range("edge list line " + std::to_string(line_no) +
                                    ": vertex id overflows 32 bits");
        if (have_n && (u >= declared_n || v >= declared_n))
            throw std::out_of_range("edge list line " + std::to_string(line_no) +
                                    ": vertex id exceeds declared n");
        max_id = std::max({max_id, u, v});
        any_edge = true;
        pairs.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }

    std::size_t n = have_n ? declared_n : (any_edge ? max_id + 1 : 0);
    if (n > std::numeric_limits<VertexId>::max())
        throw std::out_of_range("edge list: vertex count overflows 32 bits");
    Graph::NormalizeStats norm;
    Graph g = Graph::from_edges(n, std::move(pairs), &norm);
    local.self_loops = norm.self_loops;
    local.duplicates = norm.duplicates;
    if (stats) *stats = local;
    return g;
}

Graph read_edge_list_file(const std::string& path, EdgeListStats* stats) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_edge_list(in, stats);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "n " << g.vertex_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_edge_list_file(const std::string& path, const Graph& g) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_edge_list(out, g);
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace twocore
