#pragma once

#include <optional>
#include <vector>

#include "ecl/coloring.hpp"
#include "ecl/maximal.hpp"
#include "ecl/multigraph.hpp"

namespace ecl {

struct ScaleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool is_triangle_free(const Multigraph& g);

// Witness for phi_k(G): a k-dependent maximizer, flagged k-dominating.
struct KOptimalWitness {
    VertexSet D;
    int value = 0;  // k|D| - |E(G[D])|
    bool k_dependent = false;
    bool k_dominating = false;
};

int phi_k_of_set(const Multigraph& g, int k, VertexSet D);
std::pair<int, KOptimalWitness> phi_k(const Multigraph& g, int k);

// All k-dependent sets achieving phi_k(G).
std::vector<VertexSet> all_k_optimal_sets(const Multigraph& g, int k);

// Strip vertices of T-degree >= k until k-dependent; never lowers phi_k.
VertexSet reduce_to_k_dependent(const Multigraph& g, int k, VertexSet T);

// Exact maximum size of a k-edge-colorable subgraph, with a witness coloring.
struct AlphaPrimeResult {
    int value = 0;
    std::vector<EdgeInstance> edges;
};
AlphaPrimeResult alpha_prime_k(const Multigraph& g, int k);

// Exact triangle covering / packing numbers, independent of the join formulas.
int tau_exact(const Multigraph& g);
int nu_exact(const Multigraph& g);

struct TuzaInstance {
    int k;
    Multigraph h;
    Multigraph g;  // I_k v H
};
TuzaInstance make_tuza_instance(int k, const Multigraph& h);

// Closed forms on a join: tau = k|V(H)| - phi_k(H), nu = alpha'_k(H);
// tau <= 2 nu is asserted on the result (it is a theorem for joins).
struct JoinNumbers {
    int tau = 0;
    int nu = 0;
};
JoinNumbers tau_nu_join(const TuzaInstance& inst);

// 2 alpha'_k(G) >= k|V(G)| - phi_k(G), via the exact value and via each
// supplied maximal subgraph.
bool check_alphi(const Multigraph& g, int k,
                 const std::vector<MaximalSubgraphCertificate>& sampled_maximal = {});

// Subgraph with Delta(M) <= k and d_M(v) = k for every v outside D, if any.
std::optional<std::vector<EdgeInstance>> degree_constrained_subgraph(const Multigraph& g,
                                                                     int k, VertexSet D);

struct ConjectureOutcome {
    bool all_witnessed = true;
    // Per k-optimal D: the witness subgraph, when found.
    std::vector<std::pair<VertexSet, std::vector<EdgeInstance>>> witnesses;
    std::optional<VertexSet> counterexample_set;  // first D with no witness
};

// k-cover conjecture search: for every k-optimal D, look for a k-edge-colorable M
// with d_M(v) = k off D.
ConjectureOutcome conjecture_kcover_search(const Multigraph& g, int k);

}  // namespace ecl
