#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lcb/graph.hpp"

namespace lcb {

inline constexpr int kCanonicalCap = 10;
inline constexpr int kEnumerateCap = 8;

/// Relabelling that maximizes the upper-triangle adjacency string (graph6
/// column order) over all vertex orders compatible with the colour-refined
/// partition. Isomorphic inputs produce identical outputs.
Graph canonical_graph(const Graph& g);

/// graph6 text of canonical_graph(g); equal iff the graphs are isomorphic.
std::string canonical_form(const Graph& g);

/// One canonical representative per isomorphism class on n vertices, sorted
/// by edge count and then by canonical graph6. Larger n must come from an
/// external enumerator as a graph6 stream.
std::vector<Graph> enumerate_graphs(int n);

/// Seeded generators. Output is reproducible across platforms: the only
/// randomness is the raw std::mt19937_64 sequence.
Graph erdos_renyi(int n, double p, std::uint64_t seed);
/// Uniform pairing model, retried until simple. Requires 0 <= d < n and n*d even.
Graph random_regular(int n, int d, std::uint64_t seed);

}  // namespace lcb
