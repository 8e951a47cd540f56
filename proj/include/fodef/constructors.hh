#pragma once

#include <fodef/graph.hh>

#include <cstdint>

// Vertex orders are part of the contract; tests compare labeled graphs.

namespace fodef
{
    auto empty_graph(int n) -> Graph;
    auto complete(int n) -> Graph;
    /// 0 - 1 - ... - (n-1).
    auto path(int n) -> Graph;
    /// path(n) plus the edge (n-1, 0); requires n >= 3.
    auto cycle(int n) -> Graph;
    /// K_{1,s}: centre 0, leaves 1..s.
    auto star(int s) -> Graph;
    /// K_{1,3}, centre 0.
    auto claw() -> Graph;
    /// Triangle 0,1,2 with pendant vertex 3 attached to 2.
    auto paw() -> Graph;
    /// K_4 minus the edge {0,1}.
    auto diamond() -> Graph;
    /// m x m rook graph; square (a,b) is vertex a*m + b.
    auto rook(int m) -> Graph;
    /// Complete k-partite graph with parts of size n; vertex v is in part v / n.
    auto turan(int k, int n) -> Graph;
    /// Paley graph on Z_q: x ~ y iff x - y is a nonzero square. Requires q
    /// prime and q = 1 (mod 4).
    auto paley(int q) -> Graph;
    /// d-dimensional cube; vertices are bit vectors, adjacent at Hamming distance 1.
    auto hypercube(int d) -> Graph;

    /// G(n, p): pairs (u, v), u < v, visited in lexicographic order; each is an
    /// edge iff Rng(seed).bernoulli(p).
    auto gnp(int n, double p, std::uint64_t seed) -> Graph;

    /// Random half-density subgraph of turan(k, n): the edges of turan(k, n) in
    /// lexicographic order, each kept iff Rng(seed).coin().
    auto turan_random(int k, int n, std::uint64_t seed) -> Graph;

    /// Labeled graph on n vertices from an edge mask. Bit j(j-1)/2 + i encodes
    /// the pair (i, j), i < j, matching graph6 bit order.
    auto graph_from_mask(int n, std::uint64_t mask) -> Graph;
}
