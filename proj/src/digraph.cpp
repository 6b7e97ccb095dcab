#include "circlex/digraph.hpp"

#include <bit>
#include <cstring>
#include <stdexcept>
#include <string>

namespace circlex {

DenseDigraph::DenseDigraph(int order) : order_(order) {
    if (order < 1) throw std::invalid_argument("digraph order must be >= 1");
    words_ = (order + 63) / 64;
    out_bits_.assign(static_cast<std::size_t>(order) * words_, 0);
    in_bits_.assign(static_cast<std::size_t>(order) * words_, 0);
}

void DenseDigraph::check_vertex(int v) const {
    if (v < 0 || v >= order_)
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
}

bool DenseDigraph::arc(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (out_row(u)[v >> 6] >> (v & 63)) & 1;
}

void DenseDigraph::set_arc(int u, int v, bool present) {
    check_vertex(u);
    check_vertex(v);
    std::uint64_t ubit = 1ULL << (v & 63), vbit = 1ULL << (u & 63);
    std::size_t uo = static_cast<std::size_t>(u) * words_ + (v >> 6);
    std::size_t vi = static_cast<std::size_t>(v) * words_ + (u >> 6);
    if (present) {
        out_bits_[uo] |= ubit;
        in_bits_[vi] |= vbit;
    } else {
        out_bits_[uo] &= ~ubit;
        in_bits_[vi] &= ~vbit;
    }
}

int DenseDigraph::arc_count() const {
    int count = 0;
    for (std::uint64_t w : out_bits_) count += std::popcount(w);
    return count;
}

int DenseDigraph::out_degree(int v) const {
    check_vertex(v);
    int count = 0;
    for (int w = 0; w < words_; ++w) count += std::popcount(out_row(v)[w]);
    return count;
}

int DenseDigraph::in_degree(int v) const {
    check_vertex(v);
    int count = 0;
    for (int w = 0; w < words_; ++w) count += std::popcount(in_row(v)[w]);
    return count;
}

bool DenseDigraph::has_loop() const {
    for (int v = 0; v < order_; ++v)
        if ((out_row(v)[v >> 6] >> (v & 63)) & 1) return true;
    return false;
}

bool DenseDigraph::operator==(const DenseDigraph& other) const {
    return order_ == other.order_ && out_bits_ == other.out_bits_;
}

std::vector<int> out_neighborhood(const DenseDigraph& g, int v) {
    std::vector<int> out;
    for (int u = 0; u < g.order(); ++u)
        if (g.arc(v, u)) out.push_back(u);
    return out;
}

std::vector<int> in_neighborhood(const DenseDigraph& g, int v) {
    std::vector<int> out;
    for (int u = 0; u < g.order(); ++u)
        if (g.arc(u, v)) out.push_back(u);
    return out;
}

bool is_valid_partition(const VertexPartition& p, int order) {
    std::vector<char> seen(order, 0);
    int total = 0;
    for (const auto& block : p.blocks) {
        if (block.empty()) return false;
        for (int v : block) {
            if (v < 0 || v >= order || seen[v]) return false;
            seen[v] = 1;
            ++total;
        }
    }
    return total == order;
}

DenseDigraph tensor_product(const DenseDigraph& g1, const DenseDigraph& g2) {
    int n1 = g1.order(), n2 = g2.order();
    if (static_cast<long long>(n1) * n2 > 1 << 20)
        throw std::invalid_argument("tensor product order too large");
    DenseDigraph out(n1 * n2);
    for (int u = 0; u < n1; ++u)
        for (int v = 0; v < n1; ++v) {
            if (!g1.arc(u, v)) continue;
            for (int w = 0; w < n2; ++w)
                for (int x = 0; x < n2; ++x)
                    if (g2.arc(w, x)) out.set_arc(u * n2 + w, v * n2 + x);
        }
    return out;
}

DenseDigraph lex_product(const DenseDigraph& g, int b) {
    if (b < 1) throw std::invalid_argument("block size must be >= 1");
    int n = g.order();
    if (static_cast<long long>(n) * b > 1 << 20)
        throw std::invalid_argument("lexicographic product order too large");
    DenseDigraph out(n * b);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (!g.arc(u, v)) continue;
            for (int i = 0; i < b; ++i)
                for (int j = 0; j < b; ++j) out.set_arc(u * b + i, v * b + j);
        }
    return out;
}

DenseDigraph quotient(const DenseDigraph& g, const VertexPartition& p) {
    if (!is_valid_partition(p, g.order()))
        throw std::invalid_argument("not a partition of the vertex set");
    int m = static_cast<int>(p.blocks.size());
    std::vector<int> block_of(g.order());
    for (int b = 0; b < m; ++b)
        for (int v : p.blocks[b]) block_of[v] = b;
    DenseDigraph out(m);
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < g.order(); ++v)
            if (g.arc(u, v)) out.set_arc(block_of[u], block_of[v]);
    return out;
}

VertexPartition thickness_classes(const DenseDigraph& g) {
    int n = g.order(), words = g.words_per_row();
    VertexPartition p;
    std::vector<char> assigned(n, 0);
    for (int v = 0; v < n; ++v) {
        if (assigned[v]) continue;
        std::vector<int> block{v};
        assigned[v] = 1;
        for (int u = v + 1; u < n; ++u) {
            if (assigned[u]) continue;
            if (std::memcmp(g.out_row(v), g.out_row(u), words * 8) == 0 &&
                std::memcmp(g.in_row(v), g.in_row(u), words * 8) == 0) {
                block.push_back(u);
                assigned[u] = 1;
            }
        }
        p.blocks.push_back(std::move(block));
    }
    return p;
}

bool is_r_thin(const DenseDigraph& g) {
    for (const auto& block : thickness_classes(g).blocks)
        if (block.size() > 1) return false;
    return true;
}

bool is_connected(const DenseDigraph& g) {
    int n = g.order(), words = g.words_per_row();
    std::vector<std::uint64_t> reached(words, 0), frontier(words, 0);
    reached[0] = frontier[0] = 1;
    int count = 1;
    while (true) {
        std::vector<std::uint64_t> next(words, 0);
        for (int v = 0; v < n; ++v) {
            if (!((frontier[v >> 6] >> (v & 63)) & 1)) continue;
            for (int w = 0; w < words; ++w)
                next[w] |= g.out_row(v)[w] | g.in_row(v)[w];
        }
        bool grew = false;
        for (int w = 0; w < words; ++w) {
            std::uint64_t fresh = next[w] & ~reached[w];
            if (fresh) {
                grew = true;
                count += std::popcount(fresh);
                reached[w] |= fresh;
            }
            frontier[w] = fresh;
        }
        if (!grew) break;
    }
    return count == n;
}

DenseDigraph complete_digraph(int n) {
    DenseDigraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) g.set_arc(u, v);
    return g;
}

DenseDigraph directed_cycle(int n) {
    DenseDigraph g(n);
    for (int v = 0; v < n; ++v) g.set_arc(v, (v + 1) % n);
    return g;
}

DenseDigraph single_loop() {
    DenseDigraph g(1);
    g.set_arc(0, 0);
    return g;
}

}  // namespace circlex
