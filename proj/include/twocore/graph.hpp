#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace twocore {

using VertexId = std::uint32_t;

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

// Undirected simple graph in compressed sparse row form, immutable after
// construction. from_edges normalizes arbitrary pair lists: self-loops
// dropped, endpoints swapped to u < v, duplicates collapsed. Neighbor lists
// are sorted ascending. edges() is the canonical edge order (lexicographic,
// u < v) that percolation couplings index into.
class Graph {
public:
    struct NormalizeStats {
        std::size_t self_loops = 0;
        std::size_t duplicates = 0;
    };

    Graph() = default;

    static Graph from_edges(std::size_t n, std::vector<std::pair<VertexId, VertexId>> pairs,
                            NormalizeStats* stats = nullptr);

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }

    std::span<const VertexId> neighbors(VertexId v) const {
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }
    std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

    const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }

private:
    std::size_t n_ = 0;
    std::vector<std::size_t> offsets_ = {0};
    std::vector<VertexId> adj_;
    std::vector<std::pair<VertexId, VertexId>> edges_;
};

struct ComponentLabeling {
    // label[v] is dense in 0..count-1; component ids are assigned in order of
    // each component's smallest vertex, so labels are deterministic.
    std::vector<std::uint32_t> label;
    std::vector<std::size_t> sizes;
    // Maximum-size component; ties go to the smaller id.
    std::uint32_t largest_id = 0;

    std::size_t count() const { return sizes.size(); }
    std::size_t largest_size() const { return sizes.empty() ? 0 : sizes[largest_id]; }
};

ComponentLabeling connected_components(const Graph& g);

// Hop distance to the nearest source; kUnreachable where no path exists.
// sources must be nonempty.
std::vector<std::uint32_t> bfs_distances(const Graph& g, std::span<const VertexId> sources);

struct InducedSubgraph {
    Graph graph;
    // original_id[new] = old; ascending, so the mapping is order-preserving.
    std::vector<VertexId> original_id;
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const VertexId> keep);

// Vertex ids of part k are offset by the total size of parts 0..k-1.
Graph disjoint_union(std::span<const Graph> parts);

// Edge-list text format: optional first line "n <count>", then one "u v" pair
// per line; '#' starts a comment; blank lines ignored. Without a header,
// n = 1 + max id. The writer always emits the header and ascending u < v
// pairs, so write -> read -> write is byte-identical.
struct EdgeListStats {
    std::size_t self_loops = 0;
    std::size_t duplicates = 0;
    bool had_header = false;
};

Graph read_edge_list(std::istream& in, EdgeListStats* stats = nullptr);
Graph read_edge_list_file(const std::string& path, EdgeListStats* stats = nullptr);
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

}  // namespace twocore
