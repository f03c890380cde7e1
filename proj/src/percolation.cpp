#include "twocore/percolation.hpp"

#include <stdexcept>

namespace twocore {

PercolationCoupling draw_coupling(const Graph& g, std::uint64_t seed) {
    return {&g, seed};
}

Graph percolate_at(const PercolationCoupling& c, double p) {
    if (!c.base) throw std::invalid_argument("percolate_at: coupling has no base graph");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("percolate_at: p outside [0,1]");
    const Graph& base = *c.base;
    std::vector<std::pair<VertexId, VertexId>> kept;
    for (std::size_t i = 0; i < base.edges().size(); ++i)
        if (c.weight(i) < p) kept.push_back(base.edges()[i]);
    return Graph::from_edges(base.vertex_count(), std::move(kept));
}

Graph sprinkle(const PercolationCoupling& c, double p_low, double p_high,
               std::uint64_t aux_seed) {
    if (!c.base) throw std::invalid_argument("sprinkle: coupling has no base graph");
    if (!(p_low >= 0.0 && p_high <= 1.0 && p_low < p_high))
        throw std::invalid_argument("sprinkle: need 0 <= p_low < p_high <= 1");
    const Graph& base = *c.base;
    const double beta = 1.0 - (1.0 - p_high) / (1.0 - p_low);
    const PercolationCoupling aux{&base, aux_seed};
    std::vector<std::pair<VertexId, VertexId>> kept;
    for (std::size_t i = 0; i < base.edges().size(); ++i)
        if (c.weight(i) < p_low || aux.weight(i) < beta) kept.push_back(base.edges()[i]);
    return Graph::from_edges(base.vertex_count(), std::move(kept));
}

}  // namespace twocore
