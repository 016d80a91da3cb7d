#pragma once

#include <iosfwd>
#include <vector>

#include "ecl/deficiency.hpp"
#include "ecl/maximal.hpp"

namespace ecl {

// Auxiliary multidigraph H_u on N_M(y) + {u}: the arc count from w to z is
// |O(w) ∩ psi(y,z)|.
struct AuxDigraph {
    int y = 0;
    int u = 0;
    std::vector<int> verts;             // host vertex ids, u included
    std::vector<std::vector<int>> arc;  // arc[i][j] = multiplicity, indices into verts

    int index_of(int v) const;  // -1 if absent
};

AuxDigraph build_aux(const MaximalSubgraphCertificate& cert, int y, int u);

// Vertices reachable from u by a directed path; u itself counts (empty path).
VertexSet reachable(const AuxDigraph& h);

// z in N_M(y) is remote when no u in U^k(y) reaches it; with U^k(y) empty the
// quantifier is vacuous and all of N_M(y) is remote.
VertexSet remote_vertices(const MaximalSubgraphCertificate& cert, int y);

struct CertificateEntry {
    int w = 0;
    bool remote = false;
    ColorMask C = 0;  // psi(y,w) when remote, O(w) otherwise
};

struct CertificateMap {
    int y = 0;
    std::vector<CertificateEntry> entries;  // over U^k(y) + N_M(y) + {y}
    const CertificateEntry* find(int w) const;
};

CertificateMap certificates(const MaximalSubgraphCertificate& cert, int y);

// Lemma verifiers; all require d_M(y) < k.
bool verify_lemma_oy(const MaximalSubgraphCertificate& cert, int y);
bool verify_lemma_path(const MaximalSubgraphCertificate& cert, int y);
bool verify_lemma_disjoint(const MaximalSubgraphCertificate& cert, int y);

// Aggregate the disjoint color certificates along the proof chain: recompute
// the refined degree bound at y from the certificate map and return its slack
// (negative = violated).
int aggregate_slack(const MaximalSubgraphCertificate& cert, int y);

// Debug dump: "arc <w> <z> <mult>", "remote <z>", "cert <w> {colors}" lines.
void dump_aux(std::ostream& out, const MaximalSubgraphCertificate& cert, int y);

}  // namespace ecl
