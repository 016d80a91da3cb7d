#pragma once

#include <vector>

#include "ecl/maximal.hpp"

namespace ecl {

// Per-vertex record for a vertex v with d_M(v) < k.
struct DeficiencyRecord {
    int v = 0;
    int d_M = 0;
    int d_F_global = 0;     // edges from v into the global set F
    VertexSet Fk;           // F^k(v)
    VertexSet Uk;           // U^k(v)
    int dF_local = 0;       // d_{F^k(v)}(v)
    int u_sum = 0;          // sum over w in U^k(v) of k - d_M(w) - mu_G(v,w)
    int slack_simple = 0;   // d_M(v) - d_F_global         (plain degree bound)
    int slack_main = 0;     // d_M(v) - u_sum - dF_local   (refined degree bound)
};

struct DeficiencyReport {
    int k = 0;
    VertexSet F;
    std::vector<DeficiencyRecord> records;
    bool simple_ok = true;  // plain bound holds everywhere
    bool main_ok = true;    // refined bound holds everywhere
};

// F = {v : d_M(v) <= k - mu(v)}.
VertexSet global_deficient_set(const MaximalSubgraphCertificate& cert);

struct LocalSets {
    VertexSet Fk;
    VertexSet Uk;
    int dF = 0;
};
LocalSets local_sets(const MaximalSubgraphCertificate& cert, int v);

// Both verifiers fill the full report; the *_ok flags are the verdicts.
// Certificate-grade input required.
DeficiencyReport check_theorem_simple(const MaximalSubgraphCertificate& cert);
DeficiencyReport check_theorem_main(const MaximalSubgraphCertificate& cert);

// Observational variant for greedy-augmented subgraphs: same report, no
// certificate requirement, never throws on failure.
DeficiencyReport observe_deficiency(const MaximalSubgraphCertificate& cert);

// Delta(G[F]) <= k - 1 for simple host graphs (corollary of the plain bound).
bool check_corollary_maxdelta(const MaximalSubgraphCertificate& cert);

// Parallel classes {v,w} where removing one copy drops the chromatic index.
std::vector<std::pair<int, int>> critical_edges(const Multigraph& g);

struct ValResult {
    bool precondition_ok = false;  // simple, class-2, xy critical
    bool bound_holds = false;
    int neighbor_count = 0;  // neighbors z != x of y with d(z) = Delta
    int required = 0;        // chi' - t + 1 with t = d(x) + 1
};

// Vizing Adjacency Lemma check at a critical edge xy of a simple class-2 graph.
ValResult check_val_simple(const Multigraph& g, int x, int y);

}  // namespace ecl
