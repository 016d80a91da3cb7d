#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ecl {

// Subset of vertex indices 0..63, stored as a bitmask.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static VertexSet full(int n) {
        return VertexSet(n >= 64 ? ~0ULL : ((1ULL << n) - 1));
    }

    bool contains(int v) const { return (bits_ >> v) & 1; }
    void add(int v) { bits_ |= 1ULL << v; }
    void remove(int v) { bits_ &= ~(1ULL << v); }
    int size() const { return __builtin_popcountll(bits_); }
    bool empty() const { return bits_ == 0; }
    std::uint64_t bits() const { return bits_; }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint64_t b = bits_; b; b &= b - 1)
            out.push_back(__builtin_ctzll(b));
        return out;
    }

    friend VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    friend bool operator==(VertexSet a, VertexSet b) { return a.bits_ == b.bits_; }
    bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

private:
    std::uint64_t bits_ = 0;
};

// One parallel copy of an edge: endpoints v < w plus a copy index below mult(v,w).
struct EdgeInstance {
    int v = 0;
    int w = 0;
    int copy = 0;

    friend bool operator==(const EdgeInstance&, const EdgeInstance&) = default;
};

struct EdgeSpec {
    int v;
    int w;
    int mult;
};

// Loopless multigraph on vertices 0..n-1 with a dense symmetric multiplicity
// table. Immutable after construction.
class Multigraph {
public:
    explicit Multigraph(int n) : n_(n) { init(); }
    Multigraph(int n, std::span<const EdgeSpec> edges);
    Multigraph(int n, std::initializer_list<EdgeSpec> edges)
        : Multigraph(n, std::span<const EdgeSpec>(edges.begin(), edges.size())) {}

    int n() const { return n_; }
    int mult(int v, int w) const { return mult_[static_cast<std::size_t>(v) * n_ + w]; }
    int degree(int v) const { return degree_[v]; }

    // mu(v) = max_w mult(v,w); 0 for an isolated vertex.
    int mu(int v) const;
    int mu_max() const;       // mu(G)
    int delta() const;        // Delta(G), max degree
    int d_mu_max() const;     // max_v [d(v) + mu(v)]; rejects the empty graph

    int edge_count() const { return static_cast<int>(instances_.size()); }
    const std::vector<EdgeInstance>& instances() const { return instances_; }
    int instance_id(int v, int w, int copy) const;
    const EdgeInstance& instance(int id) const { return instances_[id]; }

    std::vector<int> neighbors(int v) const;
    VertexSet neighbor_set(int v) const;
    bool is_simple() const;

    // d_F(v) = sum over w in F of mult(v,w); v need not belong to F.
    int d_F(int v, VertexSet F) const;

    // Induced subgraph on the members of D, relabeled to 0..|D|-1 in
    // increasing order of original index.
    Multigraph induced(VertexSet D) const;
    int induced_edge_count(VertexSet D) const;
    int induced_max_degree(VertexSet D) const;

    static Multigraph join(int k, const Multigraph& h);

    // Copy with the multiplicity of {v,w} changed by delta (>= -mult).
    Multigraph with_mult_delta(int v, int w, int delta) const;

private:
    void init();
    void rebuild_instances();

    int n_;
    std::vector<int> mult_;
    std::vector<int> degree_;
    std::vector<EdgeInstance> instances_;
    std::vector<int> first_instance_;  // per (v,w) pair, -1 if no edge
};

struct StarSubgraphs {
    VertexSet delta_verts;   // vertices of maximum degree
    Multigraph g_delta;
    VertexSet delta_mu_verts;  // max degree AND max multiplicity (may be empty)
    Multigraph g_delta_mu;
    VertexSet star_verts;    // d(v) + mu(v) = Dmu(G)
    Multigraph g_star;
};

StarSubgraphs star_subgraphs(const Multigraph& g);

}  // namespace ecl
