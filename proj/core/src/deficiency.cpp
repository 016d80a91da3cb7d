#include "ecl/deficiency.hpp"

#include <algorithm>

namespace ecl {

VertexSet global_deficient_set(const MaximalSubgraphCertificate& cert) {
    const Multigraph& g = cert.host();
    VertexSet F;
    for (int v = 0; v < g.n(); ++v)
        if (cert.coloring.d_M(v) <= cert.k() - g.mu(v)) F.add(v);
    return F;
}

LocalSets local_sets(const MaximalSubgraphCertificate& cert, int v) {
    const Multigraph& g = cert.host();
    int k = cert.k();
    LocalSets out;
    for (int w = 0; w < g.n(); ++w) {
        int muG = g.mult(v, w);
        if (muG == 0) continue;
        if (cert.coloring.d_M(w) <= k - muG) {
            out.Fk.add(w);
            if (cert.coloring.mu_M(v, w) < muG) out.Uk.add(w);
        }
    }
    out.dF = g.d_F(v, out.Fk);
    return out;
}

namespace {

DeficiencyReport build_report(const MaximalSubgraphCertificate& cert) {
    const Multigraph& g = cert.host();
    int k = cert.k();
    DeficiencyReport rep;
    rep.k = k;
    rep.F = global_deficient_set(cert);
    for (int v = 0; v < g.n(); ++v) {
        if (cert.coloring.d_M(v) >= k) continue;
        DeficiencyRecord r;
        r.v = v;
        r.d_M = cert.coloring.d_M(v);
        r.d_F_global = g.d_F(v, rep.F);
        LocalSets ls = local_sets(cert, v);
        r.Fk = ls.Fk;
        r.Uk = ls.Uk;
        r.dF_local = ls.dF;
        for (int w : ls.Uk.members()) r.u_sum += k - cert.coloring.d_M(w) - g.mult(v, w);
        r.slack_simple = r.d_M - r.d_F_global;
        r.slack_main = r.d_M - r.u_sum - r.dF_local;
        if (r.slack_simple < 0) rep.simple_ok = false;
        if (r.slack_main < 0) rep.main_ok = false;
        rep.records.push_back(r);
    }
    return rep;
}

}  // namespace

DeficiencyReport check_theorem_simple(const MaximalSubgraphCertificate& cert) {
    if (!cert.certificate_grade)
        throw std::invalid_argument("theorem verifiers need a certificate-grade subgraph");
    return build_report(cert);
}

DeficiencyReport check_theorem_main(const MaximalSubgraphCertificate& cert) {
    if (!cert.certificate_grade)
        throw std::invalid_argument("theorem verifiers need a certificate-grade subgraph");
    return build_report(cert);
}

DeficiencyReport observe_deficiency(const MaximalSubgraphCertificate& cert) {
    return build_report(cert);
}

bool check_corollary_maxdelta(const MaximalSubgraphCertificate& cert) {
    if (!cert.host().is_simple())
        throw std::invalid_argument("corollary check is for simple graphs");
    if (!cert.certificate_grade)
        throw std::invalid_argument("theorem verifiers need a certificate-grade subgraph");
    VertexSet F = global_deficient_set(cert);
    return cert.host().induced_max_degree(F) <= cert.k() - 1;
}

std::vector<std::pair<int, int>> critical_edges(const Multigraph& g) {
    if (g.edge_count() == 0) throw std::invalid_argument("critical_edges needs an edge");
    int chi = chromatic_index(g);
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < g.n(); ++v)
        for (int w = v + 1; w < g.n(); ++w) {
            if (g.mult(v, w) == 0) continue;
            Multigraph minus = g.with_mult_delta(v, w, -1);
            int chi2 = minus.edge_count() == 0 ? 0 : chromatic_index(minus);
            if (chi2 < chi) out.emplace_back(v, w);
        }
    return out;
}

ValResult check_val_simple(const Multigraph& g, int x, int y) {
    ValResult res;
    if (!g.is_simple() || g.mult(x, y) == 0) return res;
    int chi = chromatic_index(g);
    if (chi != g.delta() + 1) return res;  // class-1 graphs are not evaluated
    Multigraph minus = g.with_mult_delta(x, y, -1);
    int chi_minus = minus.edge_count() == 0 ? 0 : chromatic_index(minus);
    if (chi_minus >= chi) return res;  // xy not critical
    res.precondition_ok = true;
    int t = g.degree(x) + 1;
    res.required = chi - t + 1;
    for (int z = 0; z < g.n(); ++z)
        if (z != x && g.mult(y, z) > 0 && g.degree(z) == g.delta()) ++res.neighbor_count;
    res.bound_holds = res.neighbor_count >= res.required;
    return res;
}

}  // namespace ecl
