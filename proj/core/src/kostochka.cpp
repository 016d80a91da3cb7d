#include "ecl/kostochka.hpp"

#include <algorithm>
#include <ostream>

namespace ecl {

namespace {

VertexSet colored_neighbors(const MaximalSubgraphCertificate& cert, int y) {
    VertexSet s;
    for (int w = 0; w < cert.host().n(); ++w)
        if (w != y && cert.coloring.mu_M(y, w) > 0) s.add(w);
    return s;
}

void require_deficient(const MaximalSubgraphCertificate& cert, int y) {
    if (cert.coloring.d_M(y) >= cert.k())
        throw std::invalid_argument("vertex y must have d_M(y) < k");
}

}  // namespace

int AuxDigraph::index_of(int v) const {
    auto it = std::find(verts.begin(), verts.end(), v);
    return it == verts.end() ? -1 : static_cast<int>(it - verts.begin());
}

AuxDigraph build_aux(const MaximalSubgraphCertificate& cert, int y, int u) {
    require_deficient(cert, y);
    LocalSets ls = local_sets(cert, y);
    if (!ls.Uk.contains(u))
        throw std::invalid_argument("u must belong to U^k(y)");
    AuxDigraph h;
    h.y = y;
    h.u = u;
    VertexSet vs = colored_neighbors(cert, y);
    vs.add(u);
    h.verts = vs.members();
    int t = static_cast<int>(h.verts.size());
    h.arc.assign(t, std::vector<int>(t, 0));
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j) {
            if (i == j) continue;
            ColorMask ow = cert.coloring.missing_mask(h.verts[i]);
            ColorMask psi_yz = cert.coloring.psi_between(y, h.verts[j]);
            h.arc[i][j] = __builtin_popcountll(ow & psi_yz);
        }
    return h;
}

VertexSet reachable(const AuxDigraph& h) {
    int t = static_cast<int>(h.verts.size());
    int start = h.index_of(h.u);
    std::vector<bool> seen(t, false);
    std::vector<int> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (int j = 0; j < t; ++j)
            if (!seen[j] && h.arc[i][j] > 0) {
                seen[j] = true;
                stack.push_back(j);
            }
    }
    VertexSet out;
    for (int i = 0; i < t; ++i)
        if (seen[i]) out.add(h.verts[i]);
    return out;
}

VertexSet remote_vertices(const MaximalSubgraphCertificate& cert, int y) {
    require_deficient(cert, y);
    VertexSet nm = colored_neighbors(cert, y);
    LocalSets ls = local_sets(cert, y);
    VertexSet reached;
    for (int u : ls.Uk.members()) reached = reached | reachable(build_aux(cert, y, u));
    return nm - reached;
}

const CertificateEntry* CertificateMap::find(int w) const {
    for (const auto& e : entries)
        if (e.w == w) return &e;
    return nullptr;
}

CertificateMap certificates(const MaximalSubgraphCertificate& cert, int y) {
    require_deficient(cert, y);
    LocalSets ls = local_sets(cert, y);
    VertexSet nm = colored_neighbors(cert, y);
    VertexSet remote = remote_vertices(cert, y);
    CertificateMap out;
    out.y = y;
    VertexSet domain = ls.Uk | nm;
    domain.add(y);
    for (int w : domain.members()) {
        CertificateEntry e;
        e.w = w;
        e.remote = w != y && remote.contains(w);
        e.C = e.remote ? cert.coloring.psi_between(y, w) : cert.coloring.missing_mask(w);
        out.entries.push_back(e);
    }
    return out;
}

bool verify_lemma_oy(const MaximalSubgraphCertificate& cert, int y) {
    require_deficient(cert, y);
    LocalSets ls = local_sets(cert, y);
    ColorMask oy = cert.coloring.missing_mask(y);
    for (int u : ls.Uk.members()) {
        AuxDigraph h = build_aux(cert, y, u);
        for (int v : reachable(h).members())
            if (cert.coloring.missing_mask(v) & oy) return false;
    }
    return true;
}

bool verify_lemma_path(const MaximalSubgraphCertificate& cert, int y) {
    require_deficient(cert, y);
    LocalSets ls = local_sets(cert, y);
    for (int u : ls.Uk.members()) {
        AuxDigraph h = build_aux(cert, y, u);
        for (int v : reachable(h).members()) {
            for (int alpha : cert.coloring.missing_colors(y)) {
                for (int beta : cert.coloring.missing_colors(v)) {
                    if (alpha == beta) return false;  // shared missing color: maximality broken
                    KempePath p = kempe_path_from(cert.coloring, y, alpha, beta);
                    if (p.endpoint() != v) return false;
                }
            }
        }
    }
    return true;
}

bool verify_lemma_disjoint(const MaximalSubgraphCertificate& cert, int y) {
    require_deficient(cert, y);
    CertificateMap cm = certificates(cert, y);
    VertexSet nm = colored_neighbors(cert, y);
    nm.add(y);
    std::vector<const CertificateEntry*> quantified;
    for (const auto& e : cm.entries)
        if (nm.contains(e.w)) quantified.push_back(&e);
    for (std::size_t i = 0; i < quantified.size(); ++i)
        for (std::size_t j = i + 1; j < quantified.size(); ++j)
            if (quantified[i]->C & quantified[j]->C) return false;
    // Aggregate consequence: sum over F^k(y) of |C(z)| fits below k - |C(y)|.
    LocalSets ls = local_sets(cert, y);
    int total = 0;
    for (int z : ls.Fk.members()) {
        const CertificateEntry* e = cm.find(z);
        if (!e) return false;
        total += __builtin_popcountll(e->C);
    }
    int cy = __builtin_popcountll(cert.coloring.missing_mask(y));
    return total <= cert.k() - cy;
}

int aggregate_slack(const MaximalSubgraphCertificate& cert, int y) {
    require_deficient(cert, y);
    CertificateMap cm = certificates(cert, y);
    LocalSets ls = local_sets(cert, y);
    const Multigraph& g = cert.host();
    int sum = 0;
    for (int z : ls.Uk.members()) {
        const CertificateEntry* e = cm.find(z);
        sum += __builtin_popcountll(e->C) - g.mult(z, y);
    }
    return cert.coloring.d_M(y) - sum - ls.dF;
}

void dump_aux(std::ostream& out, const MaximalSubgraphCertificate& cert, int y) {
    LocalSets ls = local_sets(cert, y);
    for (int u : ls.Uk.members()) {
        AuxDigraph h = build_aux(cert, y, u);
        out << "# H_u for u=" << u << "\n";
        int t = static_cast<int>(h.verts.size());
        for (int i = 0; i < t; ++i)
            for (int j = 0; j < t; ++j)
                if (h.arc[i][j] > 0)
                    out << "arc " << h.verts[i] << " " << h.verts[j] << " " << h.arc[i][j]
                        << "\n";
    }
    for (int z : remote_vertices(cert, y).members()) out << "remote " << z << "\n";
    for (const auto& e : certificates(cert, y).entries) {
        out << "cert " << e.w << " {";
        bool first = true;
        for (int c : mask_colors(e.C)) {
            if (!first) out << ",";
            out << c + 1;
            first = false;
        }
        out << "}\n";
    }
}

}  // namespace ecl
