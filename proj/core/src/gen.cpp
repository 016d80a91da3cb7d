#include "ecl/gen.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_set>

namespace ecl {

Multigraph random_multigraph(std::uint64_t seed, int n, int max_mult, double edge_prob) {
    if (n < 1 || max_mult < 1 || edge_prob < 0.0 || edge_prob > 1.0)
        throw std::invalid_argument("bad random_multigraph parameters");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<int> mdist(1, max_mult);
    std::vector<EdgeSpec> edges;
    for (int v = 0; v < n; ++v)
        for (int w = v + 1; w < n; ++w) {
            // Draw both values unconditionally so the stream layout does not
            // depend on edge_prob.
            double c = coin(rng);
            int m = mdist(rng);
            if (c < edge_prob) edges.push_back({v, w, m});
        }
    return Multigraph(n, edges);
}

namespace {

std::vector<std::uint8_t> code_under_perm(const Multigraph& g, const std::vector<int>& perm) {
    int n = g.n();
    std::vector<std::uint8_t> code;
    code.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int v = 0; v < n; ++v)
        for (int w = v + 1; w < n; ++w)
            code.push_back(static_cast<std::uint8_t>(g.mult(perm[v], perm[w])));
    return code;
}

Multigraph from_code(int n, const std::vector<std::uint8_t>& code) {
    std::vector<EdgeSpec> edges;
    int idx = 0;
    for (int v = 0; v < n; ++v)
        for (int w = v + 1; w < n; ++w, ++idx)
            if (code[idx] > 0) edges.push_back({v, w, code[idx]});
    return Multigraph(n, edges);
}

struct CodeHash {
    std::size_t operator()(const std::vector<std::uint8_t>& c) const {
        std::size_t h = 1469598103934665603ULL;
        for (auto b : c) h = (h ^ b) * 1099511628211ULL;
        return h;
    }
};

}  // namespace

std::vector<std::uint8_t> canonical_code(const Multigraph& g) {
    int n = g.n();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::uint8_t> best = code_under_perm(g, perm);
    while (std::next_permutation(perm.begin(), perm.end())) {
        auto code = code_under_perm(g, perm);
        if (code < best) best = code;
    }
    return best;
}

std::vector<Multigraph> all_simple_graphs(int n) {
    if (n < 1 || n > 7) throw std::invalid_argument("all_simple_graphs supports n in [1, 7]");
    // Grow by one vertex at a time, deduplicating by canonical code.
    std::vector<Multigraph> cur;
    cur.push_back(Multigraph(1));
    for (int m = 2; m <= n; ++m) {
        std::unordered_set<std::vector<std::uint8_t>, CodeHash> seen;
        std::vector<Multigraph> next;
        for (const auto& g : cur) {
            for (std::uint32_t nb = 0; nb < (1u << (m - 1)); ++nb) {
                std::vector<EdgeSpec> edges;
                for (int v = 0; v < m - 1; ++v)
                    for (int w = v + 1; w < m - 1; ++w)
                        if (g.mult(v, w) > 0) edges.push_back({v, w, 1});
                for (int v = 0; v < m - 1; ++v)
                    if ((nb >> v) & 1) edges.push_back({v, m - 1, 1});
                Multigraph cand(m, edges);
                auto code = canonical_code(cand);
                if (seen.insert(code).second) next.push_back(from_code(m, code));
            }
        }
        cur = std::move(next);
    }
    return cur;
}

std::vector<Multigraph> all_multigraphs(int n, int max_mult) {
    if (n < 1 || n > 5) throw std::invalid_argument("all_multigraphs supports n in [1, 5]");
    if (max_mult < 1 || max_mult > 3) throw std::invalid_argument("max_mult in [1, 3]");
    int pairs = n * (n - 1) / 2;
    std::unordered_set<std::vector<std::uint8_t>, CodeHash> seen;
    std::vector<Multigraph> out;
    std::vector<std::uint8_t> code(pairs, 0);
    while (true) {
        Multigraph g = from_code(n, code);
        auto canon = canonical_code(g);
        if (seen.insert(canon).second) out.push_back(from_code(n, canon));
        // next mixed-radix value
        int i = 0;
        while (i < pairs && code[i] == max_mult) code[i++] = 0;
        if (i == pairs) break;
        ++code[i];
    }
    return out;
}

}  // namespace ecl
