#pragma once

#include <fodef/graph.hh>

namespace fodef
{
    auto complement(const Graph & g) -> Graph;

    /// G + H: H's vertices follow G's, offset by |V(G)|.
    auto disjoint_union(const Graph & g, const Graph & h) -> Graph;

    /// sG, copy c occupying vertices c*|V(G)| .. (c+1)*|V(G)|-1.
    auto multiple(int s, const Graph & g) -> Graph;

    /// A * B: disjoint union plus every edge between the two sides.
    auto join(const Graph & a, const Graph & b) -> Graph;

    /// A . B: vertex (u, v) has index u*|V(B)| + v; (u,v) ~ (x,y) iff u ~ x,
    /// or u = x and v ~ y.
    auto lex_product(const Graph & a, const Graph & b) -> Graph;

    /// X^1 = X, X^(i+1) = complement(X^i + X^i), with union indexing, so
    /// X^i has |V(X)| * 2^(i-1) vertices.
    auto power(const Graph & x, int i) -> Graph;

    /// f(X) = complement(X + X), applied j times.
    auto double_complement(const Graph & x, int j = 1) -> Graph;
}
