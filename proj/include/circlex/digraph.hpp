#pragma once

#include <cstdint>
#include <vector>

namespace circlex {

// Dense digraph on vertex set {0, ..., order-1}. Arcs are ordered pairs;
// loops are representable. Both the adjacency rows and their transpose are
// kept so that out- and in-neighborhoods compare at word speed.
class DenseDigraph {
public:
    explicit DenseDigraph(int order);

    int order() const { return order_; }
    bool arc(int u, int v) const;
    void set_arc(int u, int v, bool present = true);
    int arc_count() const;
    int out_degree(int v) const;
    int in_degree(int v) const;
    bool has_loop() const;

    bool operator==(const DenseDigraph& other) const;

    int words_per_row() const { return words_; }
    const std::uint64_t* out_row(int v) const { return &out_bits_[static_cast<std::size_t>(v) * words_]; }
    const std::uint64_t* in_row(int v) const { return &in_bits_[static_cast<std::size_t>(v) * words_]; }

private:
    void check_vertex(int v) const;

    int order_;
    int words_;
    std::vector<std::uint64_t> out_bits_;
    std::vector<std::uint64_t> in_bits_;
};

std::vector<int> out_neighborhood(const DenseDigraph& g, int v);
std::vector<int> in_neighborhood(const DenseDigraph& g, int v);

// Ordered partition of {0, ..., order-1} into disjoint nonempty blocks.
struct VertexPartition {
    std::vector<std::vector<int>> blocks;
};

bool is_valid_partition(const VertexPartition& p, int order);

// Tensor (direct) product: vertex (u, w) is serialized as u * g2.order() + w;
// arc iff both coordinates are arcs.
DenseDigraph tensor_product(const DenseDigraph& g1, const DenseDigraph& g2);

// Lexicographic blow-up g[empty_b]: vertex (u, i) is serialized as u * b + i;
// arc (u, i) -> (v, j) iff u -> v in g. Copies within a block are independent.
DenseDigraph lex_product(const DenseDigraph& g, int b);

// Quotient digraph: one vertex per block, in the order given; arc B1 -> B2
// iff some u in B1, w in B2 has an arc u -> w (loops allowed when a block
// contains an internal arc).
DenseDigraph quotient(const DenseDigraph& g, const VertexPartition& p);

// Partition into classes of vertices with identical out- AND in-neighborhoods.
// Blocks are ordered by smallest member; members ascending.
VertexPartition thickness_classes(const DenseDigraph& g);

// True iff every thickness class is a singleton.
bool is_r_thin(const DenseDigraph& g);

// Weak connectivity (arc directions ignored).
bool is_connected(const DenseDigraph& g);

DenseDigraph complete_digraph(int n);  // arcs both ways between distinct vertices
DenseDigraph directed_cycle(int n);    // arcs v -> v+1 mod n
DenseDigraph single_loop();            // one vertex, one loop

}  // namespace circlex
