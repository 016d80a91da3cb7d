#include "ecl/multigraph.hpp"

#include <algorithm>

namespace ecl {

void Multigraph::init() {
    if (n_ < 0 || n_ > 64)
        throw std::invalid_argument("vertex count must be in [0, 64]");
    mult_.assign(static_cast<std::size_t>(n_) * n_, 0);
    degree_.assign(n_, 0);
    first_instance_.assign(static_cast<std::size_t>(n_) * n_, -1);
}

Multigraph::Multigraph(int n, std::span<const EdgeSpec> edges) : n_(n) {
    init();
    for (const auto& e : edges) {
        if (e.v < 0 || e.v >= n_ || e.w < 0 || e.w >= n_)
            throw std::invalid_argument("edge endpoint out of range: (" +
                                        std::to_string(e.v) + "," + std::to_string(e.w) + ")");
        if (e.v == e.w)
            throw std::invalid_argument("loop rejected at vertex " + std::to_string(e.v));
        if (e.mult < 1)
            throw std::invalid_argument("edge multiplicity must be >= 1");
        mult_[static_cast<std::size_t>(e.v) * n_ + e.w] += e.mult;
        mult_[static_cast<std::size_t>(e.w) * n_ + e.v] += e.mult;
    }
    for (int v = 0; v < n_; ++v) {
        int d = 0;
        for (int w = 0; w < n_; ++w) d += mult(v, w);
        degree_[v] = d;
    }
    rebuild_instances();
}

void Multigraph::rebuild_instances() {
    instances_.clear();
    std::fill(first_instance_.begin(), first_instance_.end(), -1);
    for (int v = 0; v < n_; ++v)
        for (int w = v + 1; w < n_; ++w) {
            int m = mult(v, w);
            if (m == 0) continue;
            first_instance_[static_cast<std::size_t>(v) * n_ + w] =
                static_cast<int>(instances_.size());
            for (int c = 0; c < m; ++c) instances_.push_back({v, w, c});
        }
}

int Multigraph::instance_id(int v, int w, int copy) const {
    if (v > w) std::swap(v, w);
    int base = first_instance_[static_cast<std::size_t>(v) * n_ + w];
    if (base < 0 || copy < 0 || copy >= mult(v, w))
        throw std::out_of_range("no such edge instance");
    return base + copy;
}

int Multigraph::mu(int v) const {
    int best = 0;
    for (int w = 0; w < n_; ++w) best = std::max(best, mult(v, w));
    return best;
}

int Multigraph::mu_max() const {
    int best = 0;
    for (int v = 0; v < n_; ++v) best = std::max(best, mu(v));
    return best;
}

int Multigraph::delta() const {
    int best = 0;
    for (int v = 0; v < n_; ++v) best = std::max(best, degree_[v]);
    return best;
}

int Multigraph::d_mu_max() const {
    if (n_ == 0) throw std::invalid_argument("Dmu of the empty graph is undefined");
    int best = 0;
    for (int v = 0; v < n_; ++v) best = std::max(best, degree_[v] + mu(v));
    return best;
}

std::vector<int> Multigraph::neighbors(int v) const {
    std::vector<int> out;
    for (int w = 0; w < n_; ++w)
        if (mult(v, w) > 0) out.push_back(w);
    return out;
}

VertexSet Multigraph::neighbor_set(int v) const {
    VertexSet s;
    for (int w = 0; w < n_; ++w)
        if (mult(v, w) > 0) s.add(w);
    return s;
}

bool Multigraph::is_simple() const {
    for (int v = 0; v < n_; ++v)
        for (int w = v + 1; w < n_; ++w)
            if (mult(v, w) > 1) return false;
    return true;
}

int Multigraph::d_F(int v, VertexSet F) const {
    int d = 0;
    for (int w : F.members()) d += mult(v, w);
    return d;
}

Multigraph Multigraph::induced(VertexSet D) const {
    auto verts = D.members();
    Multigraph out(static_cast<int>(verts.size()));
    std::vector<EdgeSpec> edges;
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            int m = mult(verts[i], verts[j]);
            if (m > 0)
                edges.push_back({static_cast<int>(i), static_cast<int>(j), m});
        }
    return Multigraph(static_cast<int>(verts.size()), edges);
}

int Multigraph::induced_edge_count(VertexSet D) const {
    auto verts = D.members();
    int total = 0;
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            total += mult(verts[i], verts[j]);
    return total;
}

int Multigraph::induced_max_degree(VertexSet D) const {
    int best = 0;
    for (int v : D.members()) best = std::max(best, d_F(v, D));
    return best;
}

Multigraph Multigraph::join(int k, const Multigraph& h) {
    if (k < 1) throw std::invalid_argument("join requires k >= 1");
    int n = k + h.n();
    std::vector<EdgeSpec> edges;
    for (int v = 0; v < h.n(); ++v)
        for (int w = v + 1; w < h.n(); ++w)
            if (h.mult(v, w) > 0) edges.push_back({k + v, k + w, h.mult(v, w)});
    for (int i = 0; i < k; ++i)
        for (int v = 0; v < h.n(); ++v) edges.push_back({i, k + v, 1});
    return Multigraph(n, edges);
}

Multigraph Multigraph::with_mult_delta(int v, int w, int delta) const {
    Multigraph out = *this;
    if (v == w || v < 0 || w < 0 || v >= n_ || w >= n_)
        throw std::invalid_argument("bad edge for with_mult_delta");
    int cur = mult(v, w);
    if (cur + delta < 0) throw std::invalid_argument("multiplicity would go negative");
    out.mult_[static_cast<std::size_t>(v) * n_ + w] = cur + delta;
    out.mult_[static_cast<std::size_t>(w) * n_ + v] = cur + delta;
    out.degree_[v] += delta;
    out.degree_[w] += delta;
    out.rebuild_instances();
    return out;
}

StarSubgraphs star_subgraphs(const Multigraph& g) {
    if (g.n() == 0) throw std::invalid_argument("star subgraphs of the empty graph are undefined");
    int dmax = g.delta();
    int mumax = g.mu_max();
    int dmu = g.d_mu_max();
    VertexSet vd, vdm, vs;
    for (int v = 0; v < g.n(); ++v) {
        if (g.degree(v) == dmax) vd.add(v);
        if (g.degree(v) == dmax && g.mu(v) == mumax) vdm.add(v);
        if (g.degree(v) + g.mu(v) == dmu) vs.add(v);
    }
    return StarSubgraphs{vd,  g.induced(vd), vdm, g.induced(vdm), vs, g.induced(vs)};
}

}  // namespace ecl
