#include "ecl/coloring.hpp"

#include <algorithm>
#include <numeric>

namespace ecl {

PartialColoring::PartialColoring(const Multigraph& host, int k) : host_(host), k_(k) {
    if (k < 0 || k > 63) throw std::invalid_argument("color count must be in [0, 63]");
    color_.assign(host.edge_count(), -1);
    used_.assign(host.n(), 0);
    dM_.assign(host.n(), 0);
}

void PartialColoring::set_color(int id, int c) {
    if (c < 0 || c >= k_) throw std::invalid_argument("color out of range");
    if (color_[id] >= 0) clear_color(id);
    const auto& e = host_.instance(id);
    color_[id] = c;
    used_[e.v] |= 1ULL << c;
    used_[e.w] |= 1ULL << c;
    ++dM_[e.v];
    ++dM_[e.w];
    ++colored_count_;
}

void PartialColoring::clear_color(int id) {
    if (color_[id] < 0) return;
    const auto& e = host_.instance(id);
    int c = color_[id];
    color_[id] = -1;
    --dM_[e.v];
    --dM_[e.w];
    --colored_count_;
    // Recompute the masks: another edge at the endpoint may carry the same
    // color only in an improper coloring, which set_color never produces, but
    // builders go through transient states.
    for (int v : {e.v, e.w}) {
        ColorMask m = 0;
        for (int i = 0; i < host_.edge_count(); ++i) {
            const auto& f = host_.instance(i);
            if (color_[i] >= 0 && (f.v == v || f.w == v)) m |= 1ULL << color_[i];
        }
        used_[v] = m;
    }
    (void)c;
}

ColorMask PartialColoring::missing_mask(int v) const {
    ColorMask all = k_ >= 64 ? ~0ULL : ((1ULL << k_) - 1);
    return all & ~used_[v];
}

ColorMask PartialColoring::psi_between(int v, int w) const {
    if (v > w) std::swap(v, w);
    ColorMask m = 0;
    int mult = host_.mult(v, w);
    if (mult == 0) return 0;
    int base = host_.instance_id(v, w, 0);
    for (int c = 0; c < mult; ++c)
        if (color_[base + c] >= 0) m |= 1ULL << color_[base + c];
    return m;
}

int PartialColoring::mu_M(int v, int w) const {
    if (v == w) return 0;
    if (v > w) std::swap(v, w);
    int mult = host_.mult(v, w);
    if (mult == 0) return 0;
    int base = host_.instance_id(v, w, 0);
    int cnt = 0;
    for (int c = 0; c < mult; ++c)
        if (color_[base + c] >= 0) ++cnt;
    return cnt;
}

bool PartialColoring::is_proper() const {
    std::vector<ColorMask> seen(host_.n(), 0);
    for (int i = 0; i < host_.edge_count(); ++i) {
        if (color_[i] < 0) continue;
        ColorMask bit = 1ULL << color_[i];
        const auto& e = host_.instance(i);
        if ((seen[e.v] & bit) || (seen[e.w] & bit)) return false;
        seen[e.v] |= bit;
        seen[e.w] |= bit;
    }
    return true;
}

int PartialColoring::colors_used() const {
    ColorMask all = 0;
    for (int v = 0; v < host_.n(); ++v) all |= used_[v];
    return __builtin_popcountll(all);
}

Multigraph PartialColoring::domain_subgraph() const {
    std::vector<EdgeSpec> edges;
    for (int v = 0; v < host_.n(); ++v)
        for (int w = v + 1; w < host_.n(); ++w) {
            int m = mu_M(v, w);
            if (m > 0) edges.push_back({v, w, m});
        }
    return Multigraph(host_.n(), edges);
}

namespace {

// The unique colored edge instance at v with the given color, or -1.
int edge_at_with_color(const PartialColoring& c, int v, int color) {
    const auto& g = c.host();
    for (int w = 0; w < g.n(); ++w) {
        int mult = g.mult(v, w);
        if (mult == 0) continue;
        int base = g.instance_id(v, w, 0);
        for (int i = 0; i < mult; ++i)
            if (c.color(base + i) == color) return base + i;
    }
    return -1;
}

}  // namespace

KempePath kempe_path_from(const PartialColoring& c, int v, int alpha, int beta) {
    if (alpha == beta) throw std::invalid_argument("kempe colors must differ");
    bool has_a = c.used_mask(v) & (1ULL << alpha);
    bool has_b = c.used_mask(v) & (1ULL << beta);
    if (has_a && has_b)
        throw std::invalid_argument("start vertex is interior to the alpha/beta subgraph");
    KempePath p;
    p.alpha = alpha;
    p.beta = beta;
    p.vertices.push_back(v);
    int want = has_a ? alpha : (has_b ? beta : -1);
    int cur = v;
    while (want >= 0) {
        int id = edge_at_with_color(c, cur, want);
        if (id < 0) break;
        const auto& e = c.host().instance(id);
        cur = e.v == cur ? e.w : e.v;
        p.instances.push_back(id);
        p.vertices.push_back(cur);
        want = want == alpha ? beta : alpha;
        if (!(c.used_mask(cur) & (1ULL << want))) break;
    }
    return p;
}

PartialColoring kempe_swap(const PartialColoring& c, const KempePath& p) {
    // A swap on a non-maximal path can break properness; re-trace and compare.
    KempePath check = kempe_path_from(c, p.vertices.front(), p.alpha, p.beta);
    if (check.instances != p.instances)
        throw std::invalid_argument("kempe_swap requires a maximal alternating path");
    PartialColoring out = c;
    for (int id : p.instances) {
        int cc = out.color(id);
        out.set_color(id, cc == p.alpha ? p.beta : p.alpha);
    }
    return out;
}

namespace {

struct DecideState {
    const Multigraph* g;
    int k;
    std::vector<int> order;       // instance ids, by decreasing endpoint-degree sum
    std::vector<ColorMask> used;  // per-vertex masks
    std::vector<int> assign;      // per-instance color (by order position), -1
    bool found = false;

    bool rec(std::size_t pos, int max_used) {
        if (pos == order.size()) return true;
        const auto& e = g->instance(order[pos]);
        ColorMask free = ~(used[e.v] | used[e.w]);
        // Canonical pruning: a fresh color may only be the next unused one.
        int limit = std::min(k - 1, max_used + 1);
        for (int c = 0; c <= limit; ++c) {
            if (!((free >> c) & 1)) continue;
            used[e.v] |= 1ULL << c;
            used[e.w] |= 1ULL << c;
            assign[pos] = c;
            if (rec(pos + 1, std::max(max_used, c))) return true;
            used[e.v] &= ~(1ULL << c);
            used[e.w] &= ~(1ULL << c);
            assign[pos] = -1;
        }
        return false;
    }
};

}  // namespace

std::optional<PartialColoring> decide_k_colorable(const Multigraph& g, int k) {
    if (k < 1) throw std::invalid_argument("decide_k_colorable requires k >= 1");
    if (k > 63) throw std::invalid_argument("color count must be <= 63");
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) > k) return std::nullopt;
    DecideState st;
    st.g = &g;
    st.k = k;
    st.order.resize(g.edge_count());
    std::iota(st.order.begin(), st.order.end(), 0);
    std::stable_sort(st.order.begin(), st.order.end(), [&](int a, int b) {
        const auto& ea = g.instance(a);
        const auto& eb = g.instance(b);
        return g.degree(ea.v) + g.degree(ea.w) > g.degree(eb.v) + g.degree(eb.w);
    });
    st.used.assign(g.n(), 0);
    st.assign.assign(g.edge_count(), -1);
    if (!st.rec(0, -1)) return std::nullopt;
    PartialColoring out(g, k);
    for (std::size_t i = 0; i < st.order.size(); ++i) out.set_color(st.order[i], st.assign[i]);
    return out;
}

bool is_k_colorable(const Multigraph& g, int k) { return decide_k_colorable(g, k).has_value(); }

int chromatic_index(const Multigraph& g) {
    if (g.edge_count() == 0) return 0;
    for (int k = g.delta(); ; ++k)
        if (is_k_colorable(g, k)) return k;
}

}  // namespace ecl
