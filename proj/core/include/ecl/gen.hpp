#pragma once

#include <cstdint>
#include <vector>

#include "ecl/multigraph.hpp"

namespace ecl {

// Deterministic for a fixed seed: each unordered pair independently gets a
// positive multiplicity in [1, max_mult] with probability edge_prob, else 0.
Multigraph random_multigraph(std::uint64_t seed, int n, int max_mult, double edge_prob);

// Lexicographically least multiplicity vector over all vertex relabelings.
std::vector<std::uint8_t> canonical_code(const Multigraph& g);

// All simple graphs on exactly n vertices, one per isomorphism class.
std::vector<Multigraph> all_simple_graphs(int n);

// All loopless multigraphs on exactly n vertices with every multiplicity
// <= max_mult, one per isomorphism class. Intended for n <= 5.
std::vector<Multigraph> all_multigraphs(int n, int max_mult);

}  // namespace ecl
