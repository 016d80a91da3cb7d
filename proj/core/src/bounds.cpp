#include "ecl/bounds.hpp"

#include <algorithm>

namespace ecl {

namespace {

std::vector<std::uint8_t> colored_mult_vector(const PartialColoring& c) {
    const Multigraph& g = c.host();
    std::vector<std::uint8_t> m;
    m.reserve(static_cast<std::size_t>(g.n()) * (g.n() - 1) / 2);
    for (int v = 0; v < g.n(); ++v)
        for (int w = v + 1; w < g.n(); ++w)
            m.push_back(static_cast<std::uint8_t>(c.mu_M(v, w)));
    return m;
}

Multigraph graph_from_mult(int n, const std::vector<std::uint8_t>& m) {
    std::vector<EdgeSpec> edges;
    int idx = 0;
    for (int v = 0; v < n; ++v)
        for (int w = v + 1; w < n; ++w, ++idx)
            if (m[idx] > 0) edges.push_back({v, w, m[idx]});
    return Multigraph(n, edges);
}

// Recolor the colored edge set plus one extra copy of {v,w} from scratch.
bool exact_recolor_with(PartialColoring& c, int extra_id) {
    const Multigraph& g = c.host();
    const auto& e = g.instance(extra_id);
    auto m = colored_mult_vector(c);
    int idx = 0;
    for (int a = 0; a < g.n(); ++a)
        for (int b = a + 1; b < g.n(); ++b, ++idx)
            if (a == std::min(e.v, e.w) && b == std::max(e.v, e.w)) ++m[idx];
    Multigraph sub = graph_from_mult(g.n(), m);
    auto colored = decide_k_colorable(sub, c.k());
    if (!colored) return false;
    PartialColoring fresh(g, c.k());
    for (int id = 0; id < sub.edge_count(); ++id) {
        const auto& f = sub.instance(id);
        fresh.set_color(g.instance_id(f.v, f.w, f.copy), colored->color(id));
    }
    c = std::move(fresh);
    return true;
}

struct FanEntry {
    int id;  // colored instance at x (except entry 0, the uncolored edge)
    int y;   // far endpoint
};

// Misra-Gries-style fan augmentation at x for the uncolored instance id.
// Returns false when the rotation would break properness; the caller falls
// back to the exact recolorer.
bool fan_augment(PartialColoring& c, int x, int id) {
    const Multigraph& g = c.host();
    const auto& e = g.instance(id);
    int y0 = e.v == x ? e.w : e.v;

    std::vector<FanEntry> fan{{id, y0}};
    std::vector<bool> in_fan(g.edge_count(), false);
    in_fan[id] = true;
    // Maximal fan: each next edge's color is missing at the previous endpoint.
    while (true) {
        ColorMask want = c.missing_mask(fan.back().y);
        int next = -1, next_y = -1;
        for (int w = 0; w < g.n() && next < 0; ++w) {
            int mult = g.mult(x, w);
            if (mult == 0) continue;
            int base = g.instance_id(x, w, 0);
            for (int i = 0; i < mult; ++i) {
                int f = base + i;
                int col = c.color(f);
                if (col >= 0 && !in_fan[f] && ((want >> col) & 1)) {
                    next = f;
                    next_y = w;
                    break;
                }
            }
        }
        if (next < 0) break;
        fan.push_back({next, next_y});
        in_fan[next] = true;
    }

    ColorMask ox = c.missing_mask(x);
    if (!ox) return false;
    int cc = __builtin_ctzll(ox);
    ColorMask oy = c.missing_mask(fan.back().y);
    if (!oy) return false;
    int d = __builtin_ctzll(oy);

    PartialColoring work = c;
    if (!((ox >> d) & 1)) {
        // Invert the maximal [cc,d]-path from x, making d missing at x.
        KempePath p = kempe_path_from(work, x, cc, d);
        if (p.length() > 0) work = kempe_swap(work, p);
    }
    // Largest fan prefix still valid after inversion whose tip misses d.
    int j = -1;
    for (int i = 0; i < static_cast<int>(fan.size()); ++i) {
        if (i > 0) {
            int col = work.color(fan[i].id);
            if (col < 0 || !((work.missing_mask(fan[i - 1].y) >> col) & 1)) break;
        }
        if ((work.missing_mask(fan[i].y) >> d) & 1) j = i;
    }
    if (j < 0) return false;
    // Rotate: each fan edge takes the next one's color; the tip takes d.
    std::vector<int> cols(j + 1, -1);
    for (int i = 1; i <= j; ++i) cols[i] = work.color(fan[i].id);
    for (int i = 1; i <= j; ++i) work.clear_color(fan[i].id);
    for (int i = 0; i < j; ++i) work.set_color(fan[i].id, cols[i + 1]);
    work.set_color(fan[j].id, d);
    if (!work.is_proper()) return false;
    c = std::move(work);
    return true;
}

}  // namespace

ColorerResult color_with_k(const Multigraph& g, int k) {
    if (g.edge_count() > 0 && k < 1)
        throw std::invalid_argument("coloring a nonempty graph needs k >= 1");
    ColorerResult res{PartialColoring(g, std::max(k, 1)), 0};
    for (int id = 0; id < g.edge_count(); ++id) {
        const auto& e = g.instance(id);
        ColorMask free = res.coloring.missing_mask(e.v) & res.coloring.missing_mask(e.w);
        if (free) {
            res.coloring.set_color(id, __builtin_ctzll(free));
            continue;
        }
        if (fan_augment(res.coloring, e.v, id)) continue;
        if (fan_augment(res.coloring, e.w, id)) continue;
        ++res.exact_fallbacks;
        if (!exact_recolor_with(res.coloring, id)) {
            // k below the subgraph's chromatic index; leave the edge uncolored.
        }
    }
    return res;
}

ColorerResult color_vizing(const Multigraph& g) {
    if (g.edge_count() == 0) throw std::invalid_argument("color_vizing needs an edge");
    auto res = color_with_k(g, g.delta() + g.mu_max());
    if (!res.coloring.total()) throw std::logic_error("Vizing bound coloring incomplete");
    return res;
}

ColorerResult color_ore(const Multigraph& g) {
    if (g.edge_count() == 0) throw std::invalid_argument("color_ore needs an edge");
    auto res = color_with_k(g, g.d_mu_max());
    if (!res.coloring.total()) throw std::logic_error("Ore bound coloring incomplete");
    return res;
}

bool check_star_forest_hypothesis(const Multigraph& g) {
    if (g.n() == 0) return true;
    StarSubgraphs ss = star_subgraphs(g);
    const Multigraph& s = ss.g_star;
    // Cycle check on the simple graph obtained by collapsing parallel classes.
    std::vector<int> parent(s.n(), -2);
    for (int root = 0; root < s.n(); ++root) {
        if (parent[root] != -2) continue;
        parent[root] = -1;
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w = 0; w < s.n(); ++w) {
                if (s.mult(v, w) == 0 || w == parent[v]) continue;
                if (parent[w] != -2) return false;
                parent[w] = v;
                stack.push_back(w);
            }
        }
    }
    return true;
}

ColorerResult color_forest_bound(const Multigraph& g) {
    if (g.n() == 0 || g.d_mu_max() < 2)
        throw std::invalid_argument("color_forest_bound needs Dmu >= 2");
    if (!check_star_forest_hypothesis(g))
        throw std::invalid_argument("G* has a cycle of length greater than 2");
    int k = g.d_mu_max() - 1;

    // Peel one parallel copy at a leaf of the max-degree/max-multiplicity
    // core while the target bound is still exceeded.
    std::vector<std::pair<int, int>> peeled;
    Multigraph work = g;
    while (work.d_mu_max() > k) {
        StarSubgraphs ss = star_subgraphs(work);
        auto core = ss.delta_mu_verts;
        int leaf = -1, mate = -1;
        for (int v : core.members()) {
            int nb = 0, last = -1;
            for (int w : core.members())
                if (w != v && work.mult(v, w) > 0) {
                    ++nb;
                    last = w;
                }
            if (nb == 1) {
                leaf = v;
                mate = last;
                break;
            }
        }
        if (leaf < 0) break;  // core edgeless: base case
        peeled.emplace_back(leaf, mate);
        work = work.with_mult_delta(leaf, mate, -1);
    }

    ColorerResult res{PartialColoring(work, k), 0};
    if (work.d_mu_max() <= k) {
        res = color_with_k(work, k);
    } else {
        auto colored = decide_k_colorable(work, k);
        if (!colored) throw std::logic_error("forest-bound base case not k-colorable");
        res.coloring = *colored;
    }
    if (!res.coloring.total()) throw std::logic_error("forest-bound base coloring incomplete");

    // Re-add peeled copies in reverse order, extending the coloring.
    for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) {
        auto [v, w] = *it;
        Multigraph next = work.with_mult_delta(v, w, +1);
        PartialColoring lifted(next, k);
        for (int id = 0; id < work.edge_count(); ++id) {
            const auto& f = work.instance(id);
            lifted.set_color(next.instance_id(f.v, f.w, f.copy), res.coloring.color(id));
        }
        int new_id = next.instance_id(std::min(v, w), std::max(v, w), next.mult(v, w) - 1);
        ColorMask free = lifted.missing_mask(v) & lifted.missing_mask(w);
        if (free) {
            lifted.set_color(new_id, __builtin_ctzll(free));
        } else if (!fan_augment(lifted, v, new_id) && !fan_augment(lifted, w, new_id)) {
            ++res.exact_fallbacks;
            if (!exact_recolor_with(lifted, new_id))
                throw std::logic_error("forest-bound extension not k-colorable");
        }
        work = std::move(next);
        res.coloring = std::move(lifted);
    }
    if (!res.coloring.total() || !res.coloring.is_proper())
        throw std::logic_error("forest-bound coloring invalid");
    return res;
}

}  // namespace ecl
