#pragma once

#include <vector>

#include "eo/gamma_poly.hpp"

namespace eo {

// Brute-force ground truth: rooted 4-valent maps as dart structures, with
// exhaustive Eulerian orientation counting.
//
// Darts are 0..4n-1. The rotation sigma is fixed structurally: vertex v owns
// the block of darts 4v..4v+3, and sigma cycles counterclockwise inside the
// block (d -> next dart in its block). alpha is the edge involution. The root
// dart is 0. Maps are generated directly in breadth-first canonical labeling:
// processing darts in increasing order, an unmatched dart either opens the
// next fresh vertex block or matches a later unmatched dart in an existing
// block. That discovery order *is* the canonical relabeling, so every rooted
// map on the chosen genus appears exactly once and deduplication is
// structural. Rooted maps have no nontrivial automorphisms, hence this
// enumerates rooted isomorphism classes.
struct DartMap {
    int n = 0;                // vertices; edges = 2n, darts = 4n
    std::vector<int> alpha;   // involution, alpha[d] = partner dart
    int sigma(int d) const { return (d & ~3) | ((d + 1) & 3); }
    int genus() const;        // from V - E + F = 2 - 2g, faces = cycles of sigma o alpha
};

inline constexpr int kDefaultVertexCap = 4;

// All rooted 4-valent maps with n vertices of the given genus. n above the
// cap throws CapExceeded unless allow_slow is set.
std::vector<DartMap> gen_quartic_maps(int n, int genus = 0,
                                      int cap = kDefaultVertexCap, bool allow_slow = false);

// Total map count over all genera is (4n-1)!! per matching structure; the
// planar count must match 2*3^n (2n)! / (n! (n+2)!). Exposed for the
// cross-check oracle.
Rational planar_quartic_count_formula(int n);

// Sum over planar maps and valid Eulerian orientations of gamma^(#alternating
// vertices). An orientation is valid when every vertex has out-degree 2 and
// the root dart is outgoing; a vertex is alternating when its two outgoing
// darts are opposite in its rotation cycle.
GammaPoly count_eo_gamma(int n, int cap = kDefaultVertexCap, bool allow_slow = false);

// Per-map orientation polynomial (exposed for tests).
GammaPoly eo_polynomial(const DartMap& m);

}  // namespace eo
