#include "twocore/generators.hpp"

#include <cmath>
#include <stdexcept>

#include "twocore/rng.hpp"

namespace twocore {

Graph erdos_renyi(std::size_t n, double c, std::uint64_t seed) {
    if (c < 0.0 || (n > 0 && c >= static_cast<double>(n)))
        throw std::invalid_argument("erdos_renyi: need 0 <= c < n");
    if (n < 2 || c == 0.0) return Graph::from_edges(n, {});

    const double p = c / static_cast<double>(n - 1);
    rng::Engine eng(seed);
    std::vector<std::pair<VertexId, VertexId>> pairs;
    pairs.reserve(static_cast<std::size_t>(c * static_cast<double>(n) / 2.0 * 1.1) + 16);

    if (p >= 1.0) {
        for (VertexId u = 1; u < n; ++u)
            for (VertexId v = 0; v < u; ++v) pairs.emplace_back(v, u);
        return Graph::from_edges(n, std::move(pairs));
    }

    // Skip sampling over the column-major pair walk (v, u), v < u: each pair
    // is visited with probability p without touching the skipped ones.
    const double log_q = std::log1p(-p);
    std::uint64_t u = 1;
    std::int64_t v = -1;
    while (u < n) {
        const double r = 1.0 - eng.unit();  // (0, 1]; log of 0 never taken
        v += 1 + static_cast<std::int64_t>(std::floor(std::log(r) / log_q));
        while (v >= static_cast<std::int64_t>(u) && u < n) {
            v -= static_cast<std::int64_t>(u);
            ++u;
        }
        if (u < n) pairs.emplace_back(static_cast<VertexId>(v), static_cast<VertexId>(u));
    }
    return Graph::from_edges(n, std::move(pairs));
}

namespace {

// One stub per degree unit, shuffled, paired consecutively: a uniform random
// perfect matching on the stubs.
std::vector<std::pair<VertexId, VertexId>> match_stubs(const std::vector<std::uint32_t>& degrees,
                                                       rng::Engine& eng) {
    std::vector<VertexId> stubs;
    for (VertexId v = 0; v < degrees.size(); ++v)
        for (std::uint32_t k = 0; k < degrees[v]; ++k) stubs.push_back(v);
    eng.shuffle(stubs);
    std::vector<std::pair<VertexId, VertexId>> pairs;
    pairs.reserve(stubs.size() / 2);
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) pairs.emplace_back(stubs[i], stubs[i + 1]);
    return pairs;
}

void check_degree_sequence(const std::vector<std::uint32_t>& degrees) {
    std::uint64_t sum = 0;
    for (std::uint32_t d : degrees) {
        if (d >= degrees.size()) throw std::invalid_argument("configuration_model: degree >= n");
        sum += d;
    }
    if (sum % 2 != 0) throw std::invalid_argument("configuration_model: odd stub count");
}

}  // namespace

Graph configuration_model(const std::vector<std::uint32_t>& degrees, std::uint64_t seed) {
    check_degree_sequence(degrees);
    rng::Engine eng(seed);
    return Graph::from_edges(degrees.size(), match_stubs(degrees, eng));
}

Graph random_regular(std::size_t n, std::uint32_t d, std::uint64_t seed, bool* exact_regular,
                     int retry_cap) {
    if (d >= n && !(n == 0 && d == 0))
        throw std::invalid_argument("random_regular: need d < n");
    if ((n * static_cast<std::uint64_t>(d)) % 2 != 0)
        throw std::invalid_argument("random_regular: n*d must be even");
    const std::vector<std::uint32_t> degrees(n, d);
    Graph g;
    bool exact = false;
    for (int attempt = 0; attempt < retry_cap && !exact; ++attempt) {
        rng::Engine eng(rng::derive(seed, static_cast<std::uint64_t>(attempt)));
        Graph::NormalizeStats stats;
        g = Graph::from_edges(n, match_stubs(degrees, eng), &stats);
        exact = stats.self_loops == 0 && stats.duplicates == 0;
    }
    if (exact_regular) *exact_regular = exact;
    return g;
}

Graph household_triangle(const Graph& base, std::uint64_t seed) {
    const std::size_t nb = base.vertex_count();
    rng::Engine eng(seed);
    std::vector<std::pair<VertexId, VertexId>> pairs;
    pairs.reserve(3 * nb + base.edge_count());
    for (VertexId v = 0; v < nb; ++v) {
        pairs.emplace_back(3 * v, 3 * v + 1);
        pairs.emplace_back(3 * v, 3 * v + 2);
        pairs.emplace_back(3 * v + 1, 3 * v + 2);
    }
    for (const auto& [u, v] : base.edges()) {
        const auto a = static_cast<VertexId>(3 * u + eng.below(3));
        const auto b = static_cast<VertexId>(3 * v + eng.below(3));
        pairs.emplace_back(a, b);
    }
    return Graph::from_edges(3 * nb, std::move(pairs));
}

Graph disjoint_regular(std::size_t n, std::uint32_t d, std::uint64_t seed, bool* exact_regular) {
    std::size_t k = static_cast<std::size_t>(std::floor(std::sqrt(static_cast<double>(n))));
    while (k * k < n) ++k;
    std::vector<Graph> parts;
    parts.reserve(k);
    bool all_exact = true;
    for (std::size_t i = 0; i < k; ++i) {
        bool exact = false;
        parts.push_back(random_regular(k, d, rng::derive(seed, i), &exact));
        all_exact = all_exact && exact;
    }
    if (exact_regular) *exact_regular = all_exact;
    return disjoint_union(parts);
}

namespace {

std::uint64_t require_count(const nlohmann::json& params, const char* key) {
    if (!params.contains(key) || !params[key].is_number())
        throw std::invalid_argument(std::string("generator params: missing count ") + key);
    return params[key].get<std::uint64_t>();
}

double require_number(const nlohmann::json& params, const char* key) {
    if (!params.contains(key) || !params[key].is_number())
        throw std::invalid_argument(std::string("generator params: missing number ") + key);
    return params[key].get<double>();
}

}  // namespace

GeneratorSpec GeneratorSpec::from_json(const nlohmann::json& j) {
    GeneratorSpec spec;
    if (!j.contains("model") || !j["model"].is_string())
        throw std::invalid_argument("generator spec: missing model");
    spec.model = j["model"].get<std::string>();
    if (spec.model == "er") spec.model = "erdos_renyi";
    if (spec.model == "household") spec.model = "household_triangle";
    spec.params = j.value("params", nlohmann::json::object());
    spec.seed = j.value("seed", std::uint64_t{0});
    return spec;
}

nlohmann::json GeneratorSpec::to_json() const {
    return {{"model", model}, {"params", params}, {"seed", seed}};
}

Graph generate(const GeneratorSpec& spec) {
    const auto& p = spec.params;
    if (spec.model == "erdos_renyi")
        return erdos_renyi(require_count(p, "n"), require_number(p, "c"), spec.seed);
    if (spec.model == "configuration") {
        if (!p.contains("degrees") || !p["degrees"].is_array())
            throw std::invalid_argument("generator params: configuration needs degrees[]");
        return configuration_model(p["degrees"].get<std::vector<std::uint32_t>>(), spec.seed);
    }
    if (spec.model == "random_regular")
        return random_regular(require_count(p, "n"),
                              static_cast<std::uint32_t>(require_count(p, "d")), spec.seed);
    if (spec.model == "household_triangle") {
        Graph base = erdos_renyi(require_count(p, "n"), require_number(p, "c"),
                                 rng::derive(spec.seed, 1));
        return household_triangle(base, rng::derive(spec.seed, 2));
    }
    if (spec.model == "disjoint_regular")
        return disjoint_regular(require_count(p, "n"),
                                static_cast<std::uint32_t>(require_count(p, "d")), spec.seed);
    throw std::invalid_argument("generator spec: unknown model " + spec.model);
}

}  // namespace twocore
