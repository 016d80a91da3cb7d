#include "ecl/tuza.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace ecl {

bool is_triangle_free(const Multigraph& g) {
    for (int a = 0; a < g.n(); ++a)
        for (int b = a + 1; b < g.n(); ++b) {
            if (g.mult(a, b) == 0) continue;
            for (int c = b + 1; c < g.n(); ++c)
                if (g.mult(a, c) > 0 && g.mult(b, c) > 0) return false;
        }
    return true;
}

int phi_k_of_set(const Multigraph& g, int k, VertexSet D) {
    return k * D.size() - g.induced_edge_count(D);
}

namespace {

struct PhiSearch {
    const Multigraph* g;
    int k;
    int best = 0;
    VertexSet best_set;

    void rec(int v, VertexSet D, int val) {
        if (val > best) {
            best = val;
            best_set = D;
        }
        if (v == g->n()) return;
        if (val + k * (g->n() - v) <= best) return;  // each vertex adds at most k
        int gain = k - g->d_F(v, D);
        VertexSet D2 = D;
        D2.add(v);
        rec(v + 1, D2, val + gain);
        rec(v + 1, D, val);
    }
};

bool is_k_dependent(const Multigraph& g, int k, VertexSet D) {
    return g.induced_max_degree(D) <= k - 1;
}

bool is_k_dominating(const Multigraph& g, int k, VertexSet D) {
    for (int v = 0; v < g.n(); ++v) {
        if (D.contains(v)) continue;
        if ((g.neighbor_set(v) & D).size() < k) return false;
    }
    return true;
}

}  // namespace

std::pair<int, KOptimalWitness> phi_k(const Multigraph& g, int k) {
    if (!g.is_simple()) throw std::invalid_argument("phi_k is defined for simple graphs");
    if (g.n() > 22) throw ScaleError("phi_k scale guard: n <= 22");
    if (k < 1) throw std::invalid_argument("phi_k requires k >= 1");
    PhiSearch s{&g, k};
    s.rec(0, VertexSet(), 0);
    KOptimalWitness w;
    w.D = reduce_to_k_dependent(g, k, s.best_set);
    w.value = phi_k_of_set(g, k, w.D);
    if (w.value != s.best) throw std::logic_error("k-dependent reduction changed phi_k");
    w.k_dependent = is_k_dependent(g, k, w.D);
    w.k_dominating = is_k_dominating(g, k, w.D);
    return {s.best, w};
}

std::vector<VertexSet> all_k_optimal_sets(const Multigraph& g, int k) {
    if (g.n() > 16) throw ScaleError("all_k_optimal_sets scale guard: n <= 16");
    int best = phi_k(g, k).first;
    std::vector<VertexSet> out;
    for (std::uint64_t bits = 0; bits < (1ULL << g.n()); ++bits) {
        VertexSet D(bits);
        if (phi_k_of_set(g, k, D) == best && is_k_dependent(g, k, D)) out.push_back(D);
    }
    return out;
}

VertexSet reduce_to_k_dependent(const Multigraph& g, int k, VertexSet T) {
    VertexSet D = T;
    while (true) {
        int victim = -1;
        for (int v : D.members())
            if (g.d_F(v, D) >= k) {
                victim = v;
                break;
            }
        if (victim < 0) break;
        D.remove(victim);
    }
    return D;
}

namespace {

struct AlphaSearch {
    const Multigraph* g;
    int k;
    std::vector<int> order;
    std::vector<std::array<int, 2>> ends;  // endpoints per position
    std::vector<ColorMask> used;
    std::vector<int> rem_inc;  // unprocessed incident instances per vertex
    int best = -1;
    std::vector<int> assign;       // per position, -1 = skipped
    std::vector<int> best_assign;

    int capacity_bound() const {
        int total = 0;
        for (int v = 0; v < g->n(); ++v)
            total += std::min(k - __builtin_popcountll(used[v]), rem_inc[v]);
        return total / 2;
    }

    void rec(std::size_t pos, int colored, int max_used) {
        if (colored > best) {
            best = colored;
            best_assign = assign;
        }
        if (pos == order.size()) return;
        int remaining = static_cast<int>(order.size() - pos);
        if (colored + std::min(remaining, capacity_bound()) <= best) return;
        auto [a, b] = ends[pos];
        --rem_inc[a];
        --rem_inc[b];
        ColorMask free = ~(used[a] | used[b]);
        int limit = std::min(k - 1, max_used + 1);
        for (int c = 0; c <= limit; ++c) {
            if (!((free >> c) & 1)) continue;
            used[a] |= 1ULL << c;
            used[b] |= 1ULL << c;
            assign[pos] = c;
            rec(pos + 1, colored + 1, std::max(max_used, c));
            used[a] &= ~(1ULL << c);
            used[b] &= ~(1ULL << c);
            assign[pos] = -1;
        }
        rec(pos + 1, colored, max_used);
        ++rem_inc[a];
        ++rem_inc[b];
    }
};

}  // namespace

AlphaPrimeResult alpha_prime_k(const Multigraph& g, int k) {
    if (k < 1) throw std::invalid_argument("alpha_prime_k requires k >= 1");
    if (g.edge_count() > 48) throw ScaleError("alpha_prime_k scale guard: |E| <= 48");
    AlphaSearch s;
    s.g = &g;
    s.k = std::min(k, 63);
    s.order.resize(g.edge_count());
    std::iota(s.order.begin(), s.order.end(), 0);
    std::stable_sort(s.order.begin(), s.order.end(), [&](int x, int y) {
        const auto& ex = g.instance(x);
        const auto& ey = g.instance(y);
        return g.degree(ex.v) + g.degree(ex.w) > g.degree(ey.v) + g.degree(ey.w);
    });
    s.ends.reserve(s.order.size());
    s.rem_inc.assign(g.n(), 0);
    for (int id : s.order) {
        const auto& e = g.instance(id);
        s.ends.push_back({e.v, e.w});
        ++s.rem_inc[e.v];
        ++s.rem_inc[e.w];
    }
    s.used.assign(g.n(), 0);
    s.assign.assign(s.order.size(), -1);
    // Greedy seed: smallest free color per edge.
    {
        std::vector<ColorMask> u(g.n(), 0);
        int cnt = 0;
        std::vector<int> seed(s.order.size(), -1);
        for (std::size_t i = 0; i < s.order.size(); ++i) {
            auto [a, b] = s.ends[i];
            ColorMask free = ~(u[a] | u[b]) & ((s.k >= 64) ? ~0ULL : ((1ULL << s.k) - 1));
            if (!free) continue;
            int c = __builtin_ctzll(free);
            u[a] |= 1ULL << c;
            u[b] |= 1ULL << c;
            seed[i] = c;
            ++cnt;
        }
        s.best = cnt - 1;  // strictly-better search still reproduces the witness
        s.best_assign = seed;
    }
    s.rec(0, 0, -1);
    AlphaPrimeResult out;
    for (std::size_t i = 0; i < s.order.size(); ++i)
        if (s.best_assign[i] >= 0) {
            out.edges.push_back(g.instance(s.order[i]));
            ++out.value;
        }
    return out;
}

namespace {

struct TriangleList {
    std::vector<std::array<int, 3>> tris;        // vertex triples
    std::vector<std::uint64_t> edge_masks;       // bits over pair indices
    int pair_index(const Multigraph& g, int v, int w) const {
        if (v > w) std::swap(v, w);
        return v * g.n() - v * (v + 1) / 2 + (w - v - 1);
    }
};

TriangleList list_triangles(const Multigraph& g) {
    if (!g.is_simple())
        throw std::invalid_argument("triangle oracles are defined for simple graphs");
    if (g.n() > 11) throw ScaleError("triangle oracle scale guard: n <= 11");
    TriangleList tl;
    for (int a = 0; a < g.n(); ++a)
        for (int b = a + 1; b < g.n(); ++b) {
            if (g.mult(a, b) == 0) continue;
            for (int c = b + 1; c < g.n(); ++c)
                if (g.mult(a, c) > 0 && g.mult(b, c) > 0) {
                    tl.tris.push_back({a, b, c});
                    std::uint64_t m = 0;
                    m |= 1ULL << tl.pair_index(g, a, b);
                    m |= 1ULL << tl.pair_index(g, a, c);
                    m |= 1ULL << tl.pair_index(g, b, c);
                    tl.edge_masks.push_back(m);
                }
        }
    if (tl.tris.size() > 64) throw ScaleError("triangle oracle scale guard: <= 64 triangles");
    return tl;
}

// Greedy edge-disjoint packing among triangles avoiding the given edges.
int greedy_packing_bound(const TriangleList& tl, std::uint64_t hit_edges) {
    std::uint64_t used = hit_edges;
    int cnt = 0;
    for (std::size_t i = 0; i < tl.tris.size(); ++i)
        if (!(tl.edge_masks[i] & used)) {
            used |= tl.edge_masks[i];
            ++cnt;
        }
    return cnt;
}

struct TauSearch {
    const TriangleList* tl;
    int best;

    void rec(std::uint64_t chosen, int count) {
        if (count >= best) return;
        int first = -1;
        for (std::size_t i = 0; i < tl->tris.size(); ++i)
            if (!(tl->edge_masks[i] & chosen)) {
                first = static_cast<int>(i);
                break;
            }
        if (first < 0) {
            best = count;
            return;
        }
        // Every remaining edge-disjoint triangle still needs its own edge.
        std::uint64_t mask = tl->edge_masks[first];
        int lb = 0;
        {
            std::uint64_t used = chosen;
            for (std::size_t i = 0; i < tl->tris.size(); ++i)
                if (!(tl->edge_masks[i] & used)) {
                    used |= tl->edge_masks[i];
                    ++lb;
                }
        }
        if (count + lb >= best) return;
        for (std::uint64_t m = mask; m; m &= m - 1)
            rec(chosen | (m & -m), count + 1);
    }
};

struct NuSearch {
    const TriangleList* tl;
    int best = 0;

    void rec(std::size_t i, std::uint64_t used, int count) {
        best = std::max(best, count);
        if (i == tl->tris.size()) return;
        if (count + static_cast<int>(tl->tris.size() - i) <= best) return;
        if (!(tl->edge_masks[i] & used)) rec(i + 1, used | tl->edge_masks[i], count + 1);
        rec(i + 1, used, count);
    }
};

}  // namespace

int tau_exact(const Multigraph& g) {
    TriangleList tl = list_triangles(g);
    if (tl.tris.empty()) return 0;
    TauSearch s{&tl, static_cast<int>(tl.tris.size() * 3 + 1)};
    s.rec(0, 0);
    return s.best;
}

int nu_exact(const Multigraph& g) {
    TriangleList tl = list_triangles(g);
    NuSearch s{&tl};
    s.rec(0, 0, 0);
    return s.best;
}

TuzaInstance make_tuza_instance(int k, const Multigraph& h) {
    if (k < 1) throw std::invalid_argument("tuza instance needs k >= 1");
    if (!h.is_simple()) throw std::invalid_argument("H must be simple");
    if (!is_triangle_free(h)) throw std::invalid_argument("H must be triangle-free");
    return TuzaInstance{k, h, Multigraph::join(k, h)};
}

JoinNumbers tau_nu_join(const TuzaInstance& inst) {
    JoinNumbers out;
    out.tau = inst.k * inst.h.n() - phi_k(inst.h, inst.k).first;
    out.nu = alpha_prime_k(inst.h, inst.k).value;
    if (out.tau > 2 * out.nu)
        throw std::logic_error("join numbers violate tau <= 2 nu");
    return out;
}

bool check_alphi(const Multigraph& g, int k,
                 const std::vector<MaximalSubgraphCertificate>& sampled_maximal) {
    int phi = phi_k(g, k).first;
    int rhs = k * g.n() - phi;
    if (2 * alpha_prime_k(g, k).value < rhs) return false;
    for (const auto& cert : sampled_maximal)
        if (2 * cert.edges_in_M() < rhs) return false;
    return true;
}

namespace {

struct DcsSearch {
    const Multigraph* g;
    int k;
    VertexSet D;
    bool need_coloring;  // check k-edge-colorability at the leaves
    std::vector<int> deg;
    std::vector<int> rem_inc;
    std::vector<char> take;  // per instance id
    std::optional<std::vector<EdgeInstance>> found;

    bool feasible() const {
        for (int v = 0; v < g->n(); ++v)
            if (!D.contains(v) && deg[v] + rem_inc[v] < k) return false;
        return true;
    }

    void rec(int id) {
        if (found) return;
        if (id == g->edge_count()) {
            for (int v = 0; v < g->n(); ++v)
                if (!D.contains(v) && deg[v] != k) return;
            if (need_coloring) {
                std::vector<EdgeSpec> edges;
                for (int i = 0; i < g->edge_count(); ++i)
                    if (take[i]) {
                        const auto& e = g->instance(i);
                        edges.push_back({e.v, e.w, 1});
                    }
                if (!is_k_colorable(Multigraph(g->n(), edges), k)) return;
            }
            std::vector<EdgeInstance> out;
            for (int i = 0; i < g->edge_count(); ++i)
                if (take[i]) out.push_back(g->instance(i));
            found = out;
            return;
        }
        const auto& e = g->instance(id);
        --rem_inc[e.v];
        --rem_inc[e.w];
        if (deg[e.v] < k && deg[e.w] < k) {
            ++deg[e.v];
            ++deg[e.w];
            take[id] = 1;
            if (feasible()) rec(id + 1);
            take[id] = 0;
            --deg[e.v];
            --deg[e.w];
        }
        if (!found && feasible()) rec(id + 1);
        ++rem_inc[e.v];
        ++rem_inc[e.w];
    }
};

std::optional<std::vector<EdgeInstance>> dcs_search(const Multigraph& g, int k, VertexSet D,
                                                    bool need_coloring) {
    DcsSearch s;
    s.g = &g;
    s.k = k;
    s.D = D;
    s.need_coloring = need_coloring;
    s.deg.assign(g.n(), 0);
    s.rem_inc.assign(g.n(), 0);
    for (int i = 0; i < g.edge_count(); ++i) {
        const auto& e = g.instance(i);
        ++s.rem_inc[e.v];
        ++s.rem_inc[e.w];
    }
    s.take.assign(g.edge_count(), 0);
    if (s.feasible()) s.rec(0);
    return s.found;
}

}  // namespace

std::optional<std::vector<EdgeInstance>> degree_constrained_subgraph(const Multigraph& g,
                                                                     int k, VertexSet D) {
    return dcs_search(g, k, D, false);
}

ConjectureOutcome conjecture_kcover_search(const Multigraph& g, int k) {
    if (!g.is_simple()) throw std::invalid_argument("conjecture search is for simple graphs");
    ConjectureOutcome out;
    for (VertexSet D : all_k_optimal_sets(g, k)) {
        // The degree-constrained subgraph alone is not enough: require the
        // colorable strengthening of the conjecture at every optimal set.
        auto witness = dcs_search(g, k, D, true);
        if (witness) {
            out.witnesses.emplace_back(D, *witness);
        } else {
            out.all_witnessed = false;
            if (!out.counterexample_set) out.counterexample_set = D;
        }
    }
    return out;
}

}  // namespace ecl
