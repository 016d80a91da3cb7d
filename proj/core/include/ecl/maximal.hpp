#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ecl/coloring.hpp"
#include "ecl/multigraph.hpp"

namespace ecl {

// A maximal k-edge-colorable subgraph M of the host graph, as a proper
// k-coloring over the host's edge instances, plus the uncolored remainder.
// certificate_grade means every uncolored edge was rejected by the exact
// decision procedure, so M is genuinely maximal (not merely greedy-maximal).
struct MaximalSubgraphCertificate {
    PartialColoring coloring;
    std::vector<EdgeInstance> uncolored;
    bool certificate_grade = false;

    const Multigraph& host() const { return coloring.host(); }
    int k() const { return coloring.k(); }
    int edges_in_M() const { return coloring.colored_count(); }
};

// Greedy construction in the given instance order; an edge joins M iff
// M + e stays k-edge-colorable per the exact decision. Monotonicity makes a
// single pass genuinely maximal; audit_certificate rechecks every rejection.
MaximalSubgraphCertificate maximal_colorable_subgraph(const Multigraph& g, int k,
                                                      std::span<const int> order);
MaximalSubgraphCertificate maximal_colorable_subgraph(const Multigraph& g, int k);

// Shuffled-order variant; deterministic for a fixed seed.
MaximalSubgraphCertificate maximal_colorable_subgraph_seeded(const Multigraph& g, int k,
                                                             std::uint64_t seed);

// Greedy-augmented mode: edges are added when a smallest free color exists,
// no exact decision, no certificate. For graphs past certificate scale.
MaximalSubgraphCertificate greedy_augmented_subgraph(const Multigraph& g, int k,
                                                     std::span<const int> order);

// Re-runs decide_k_colorable(M + e, k) for every uncolored e.
bool audit_certificate(const MaximalSubgraphCertificate& cert);

// Every maximal k-edge-colorable subgraph of g, as multiplicity functions
// (copies of a parallel class are interchangeable). Exhaustive; desk scale.
std::vector<MaximalSubgraphCertificate> all_maximal_subgraphs(const Multigraph& g, int k);

// Deliberately non-maximal control: drops one more colorable edge from a
// certificate-grade M, or returns nullopt if M is empty.
std::optional<MaximalSubgraphCertificate> non_maximal_control(
    const MaximalSubgraphCertificate& cert);

}  // namespace ecl
