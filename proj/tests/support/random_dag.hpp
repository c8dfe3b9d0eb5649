#pragma once

// Seeded random networks for property tests.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "snfc/network.hpp"

namespace testgen {

struct Shape {
    std::size_t max_sources = 3;
    std::size_t max_inner = 4;
    std::size_t max_edges = 12;
};

/// Nodes: sources, inner nodes, sink, in index order. Each non-sink node gets
/// one edge to a later non-source node, which makes every node reach the
/// sink; extra edges (parallel ones included) fill up to a random budget.
/// The edge list is shuffled so that tie-breaking by input order is exercised.
inline snfc::Network random_network(std::uint64_t seed, const Shape& shape = {}) {
    std::mt19937_64 rng(seed);
    auto pick = [&](std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    };
    const std::size_t s = pick(1, shape.max_sources);
    const std::size_t inner = pick(0, shape.max_inner);
    const std::size_t nv = s + inner + 1;
    const std::size_t sink = nv - 1;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < s; ++i) names.push_back("s" + std::to_string(i + 1));
    for (std::size_t i = 0; i < inner; ++i) names.push_back("v" + std::to_string(i + 1));
    names.push_back("rho");

    std::vector<std::pair<std::size_t, std::size_t>> arcs;
    for (std::size_t v = 0; v < sink; ++v) arcs.push_back({v, pick(std::max(v + 1, s), sink)});
    const std::size_t budget = pick(arcs.size(), std::max(arcs.size(), shape.max_edges));
    while (arcs.size() < budget) {
        const std::size_t u = pick(0, sink - 1);
        arcs.push_back({u, pick(std::max(u + 1, s), sink)});
    }
    std::shuffle(arcs.begin(), arcs.end(), rng);
    std::vector<snfc::Network::EdgeSpec> edges;
    for (std::size_t k = 0; k < arcs.size(); ++k)
        edges.push_back({"e" + std::to_string(k + 1), names[arcs[k].first], names[arcs[k].second]});
    std::vector<std::string> sources(names.begin(), names.begin() + static_cast<std::ptrdiff_t>(s));
    return snfc::Network::build(names, sources, "rho", edges);
}

}  // namespace testgen
