#include "ecl/maximal.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_map>

namespace ecl {

namespace {

std::vector<int> default_order(const Multigraph& g) {
    std::vector<int> order(g.edge_count());
    std::iota(order.begin(), order.end(), 0);
    return order;
}

Multigraph subgraph_from_mult(const Multigraph& g, const std::vector<std::uint8_t>& m) {
    std::vector<EdgeSpec> edges;
    int idx = 0;
    for (int v = 0; v < g.n(); ++v)
        for (int w = v + 1; w < g.n(); ++w, ++idx)
            if (m[idx] > 0) edges.push_back({v, w, m[idx]});
    return Multigraph(g.n(), edges);
}

int pair_index(const Multigraph& g, int v, int w) {
    if (v > w) std::swap(v, w);
    // index of (v,w) in the row-major upper triangle
    return v * g.n() - v * (v + 1) / 2 + (w - v - 1);
}

// Lift a total coloring of the M-subgraph back onto host instances: the first
// m(v,w) host copies of each pair receive the subgraph colors.
MaximalSubgraphCertificate make_certificate(const Multigraph& g, int k,
                                            const std::vector<std::uint8_t>& m,
                                            bool grade) {
    Multigraph sub = subgraph_from_mult(g, m);
    auto colored = decide_k_colorable(sub, k);
    if (!colored) throw std::logic_error("maximal subgraph lost k-colorability");
    PartialColoring lifted(g, k);
    for (int id = 0; id < sub.edge_count(); ++id) {
        const auto& e = sub.instance(id);
        lifted.set_color(g.instance_id(e.v, e.w, e.copy), colored->color(id));
    }
    MaximalSubgraphCertificate cert{std::move(lifted), {}, grade};
    for (int id = 0; id < g.edge_count(); ++id)
        if (!cert.coloring.colored(id)) cert.uncolored.push_back(g.instance(id));
    return cert;
}

struct MultHash {
    std::size_t operator()(const std::vector<std::uint8_t>& c) const {
        std::size_t h = 1469598103934665603ULL;
        for (auto b : c) h = (h ^ b) * 1099511628211ULL;
        return h;
    }
};

}  // namespace

MaximalSubgraphCertificate maximal_colorable_subgraph(const Multigraph& g, int k,
                                                      std::span<const int> order) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    int pairs = g.n() * (g.n() - 1) / 2;
    std::vector<std::uint8_t> m(pairs, 0);
    for (int id : order) {
        const auto& e = g.instance(id);
        int p = pair_index(g, e.v, e.w);
        ++m[p];
        if (!is_k_colorable(subgraph_from_mult(g, m), k)) --m[p];
    }
    return make_certificate(g, k, m, true);
}

MaximalSubgraphCertificate maximal_colorable_subgraph(const Multigraph& g, int k) {
    auto order = default_order(g);
    return maximal_colorable_subgraph(g, k, order);
}

MaximalSubgraphCertificate maximal_colorable_subgraph_seeded(const Multigraph& g, int k,
                                                             std::uint64_t seed) {
    auto order = default_order(g);
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
    return maximal_colorable_subgraph(g, k, order);
}

MaximalSubgraphCertificate greedy_augmented_subgraph(const Multigraph& g, int k,
                                                     std::span<const int> order) {
    PartialColoring c(g, k);
    for (int id : order) {
        const auto& e = g.instance(id);
        ColorMask free = c.missing_mask(e.v) & c.missing_mask(e.w);
        if (free) {
            c.set_color(id, __builtin_ctzll(free));
            continue;
        }
        // One Kempe attempt: free up a color of v at w by swapping a path.
        bool done = false;
        for (int a : mask_colors(c.missing_mask(e.v) & ~c.missing_mask(e.w))) {
            for (int b : mask_colors(c.missing_mask(e.w) & ~c.missing_mask(e.v))) {
                KempePath p = kempe_path_from(c, e.w, a, b);
                bool touches_v = std::find(p.vertices.begin(), p.vertices.end(), e.v) !=
                                 p.vertices.end();
                if (touches_v) continue;
                c = kempe_swap(c, p);
                c.set_color(id, a);
                done = true;
                break;
            }
            if (done) break;
        }
    }
    MaximalSubgraphCertificate cert{std::move(c), {}, false};
    for (int id = 0; id < g.edge_count(); ++id)
        if (!cert.coloring.colored(id)) cert.uncolored.push_back(g.instance(id));
    return cert;
}

bool audit_certificate(const MaximalSubgraphCertificate& cert) {
    const Multigraph& g = cert.host();
    if (!cert.coloring.is_proper()) return false;
    Multigraph m = cert.coloring.domain_subgraph();
    for (const auto& e : cert.uncolored)
        if (is_k_colorable(m.with_mult_delta(e.v, e.w, +1), cert.k())) return false;
    return true;
}

std::vector<MaximalSubgraphCertificate> all_maximal_subgraphs(const Multigraph& g, int k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    int pairs = g.n() * (g.n() - 1) / 2;
    std::vector<std::uint8_t> cap(pairs, 0);
    {
        int idx = 0;
        for (int v = 0; v < g.n(); ++v)
            for (int w = v + 1; w < g.n(); ++w, ++idx)
                cap[idx] = static_cast<std::uint8_t>(g.mult(v, w));
    }
    std::unordered_map<std::vector<std::uint8_t>, bool, MultHash> memo;
    auto colorable = [&](const std::vector<std::uint8_t>& m) {
        auto it = memo.find(m);
        if (it != memo.end()) return it->second;
        bool ok = is_k_colorable(subgraph_from_mult(g, m), k);
        memo.emplace(m, ok);
        return ok;
    };

    std::vector<MaximalSubgraphCertificate> out;
    std::vector<std::uint8_t> m(pairs, 0);
    auto rec = [&](auto&& self, int p) -> void {
        if (p == pairs) {
            for (int q = 0; q < pairs; ++q) {
                if (m[q] >= cap[q]) continue;
                ++m[q];
                bool extends = colorable(m);
                --m[q];
                if (extends) return;  // not maximal
            }
            out.push_back(make_certificate(g, k, m, true));
            return;
        }
        for (int c = 0; c <= cap[p]; ++c) {
            m[p] = static_cast<std::uint8_t>(c);
            if (c > 0 && !colorable(m)) break;  // supersets stay uncolorable
            self(self, p + 1);
        }
        m[p] = 0;
    };
    rec(rec, 0);
    return out;
}

std::optional<MaximalSubgraphCertificate> non_maximal_control(
    const MaximalSubgraphCertificate& cert) {
    const Multigraph& g = cert.host();
    for (int id = g.edge_count() - 1; id >= 0; --id) {
        if (!cert.coloring.colored(id)) continue;
        PartialColoring c = cert.coloring;
        c.clear_color(id);
        MaximalSubgraphCertificate out{std::move(c), {}, false};
        for (int j = 0; j < g.edge_count(); ++j)
            if (!out.coloring.colored(j)) out.uncolored.push_back(g.instance(j));
        return out;
    }
    return std::nullopt;
}

}  // namespace ecl
