#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ecl/multigraph.hpp"

namespace ecl {

using ColorMask = std::uint64_t;

inline std::vector<int> mask_colors(ColorMask m) {
    std::vector<int> out;
    for (ColorMask b = m; b; b &= b - 1) out.push_back(__builtin_ctzll(b));
    return out;
}

// A proper partial k-edge-coloring of a host multigraph. Colors are 0-based
// internally (0..k-1); file formats print them 1-based. The coloring keeps its
// own copy of the host, so it stays valid past the argument's lifetime.
class PartialColoring {
public:
    PartialColoring(const Multigraph& host, int k);

    const Multigraph& host() const { return host_; }
    int k() const { return k_; }

    int color(int instance_id) const { return color_[instance_id]; }  // -1 = uncolored
    bool colored(int instance_id) const { return color_[instance_id] >= 0; }
    void set_color(int instance_id, int c);
    void clear_color(int instance_id);

    ColorMask used_mask(int v) const { return used_[v]; }
    ColorMask missing_mask(int v) const;                // O(v)
    std::vector<int> missing_colors(int v) const { return mask_colors(missing_mask(v)); }
    ColorMask psi_between(int v, int w) const;          // psi(v,w)
    int d_M(int v) const { return dM_[v]; }
    int mu_M(int v, int w) const;
    int colored_count() const { return colored_count_; }
    bool total() const { return colored_count_ == host_.edge_count(); }

    bool is_proper() const;
    int colors_used() const;  // number of distinct colors present

    // Edge set M = domain of the coloring, as a host subgraph.
    Multigraph domain_subgraph() const;

private:
    Multigraph host_;
    int k_;
    std::vector<int> color_;
    std::vector<ColorMask> used_;
    std::vector<int> dM_;
    int colored_count_ = 0;
};

// Maximal alternating path in the two colors alpha/beta, starting at a vertex
// where at most one of the two colors is present.
struct KempePath {
    int alpha = 0;
    int beta = 0;
    std::vector<int> vertices;   // v0 .. vt (t >= 0)
    std::vector<int> instances;  // edge instance ids along the path (size t)
    int length() const { return static_cast<int>(instances.size()); }
    int endpoint() const { return vertices.back(); }
};

KempePath kempe_path_from(const PartialColoring& c, int v, int alpha, int beta);
PartialColoring kempe_swap(const PartialColoring& c, const KempePath& p);

// Exact decision: a total proper k-edge-coloring of g, or nullopt if none
// exists. Complete backtracking with canonical color-introduction pruning.
std::optional<PartialColoring> decide_k_colorable(const Multigraph& g, int k);
bool is_k_colorable(const Multigraph& g, int k);

// Least k admitting a total proper k-edge-coloring; 0 for an edgeless graph.
int chromatic_index(const Multigraph& g);

}  // namespace ecl
