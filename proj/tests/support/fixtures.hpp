#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "quiver/forms.hpp"
#include "quiver/quiver.hpp"

namespace fixtures {

using quiver::Index;
using quiver::Quiver;
using quiver::QuiverType;

// Undirected multigraph on vertices 0..n-1; a repeated edge is a multiple edge.
struct Diagram {
    std::string name;
    Index n = 0;
    std::vector<std::pair<Index, Index>> edges;
    // Ground truth from the ADE / extended ADE tables.
    QuiverType type = QuiverType::Finite;
};

Diagram dynkin_a(Index n);
Diagram dynkin_d(Index n);
Diagram dynkin_e(Index n);
Diagram euclidean_a(Index n); // n + 1 vertices, a cycle (n = 1: Kronecker)
Diagram euclidean_d(Index n); // n + 1 vertices
Diagram euclidean_e(Index n); // n + 1 vertices
Diagram kronecker(Index k);   // two vertices, k edges

/// Every Dynkin and Euclidean diagram with at most 9 vertices plus a set of
/// wild diagrams.
std::vector<Diagram> all_diagrams();

/// Orients each edge from the endpoint ranked higher by a random permutation
/// to the lower one, which never creates an oriented cycle.
Quiver orient(const Diagram& d, std::mt19937_64& rng);
/// Orientation where every edge points from the larger to the smaller index.
Quiver orient_descending(const Diagram& d);

struct FixtureQuiver {
    std::string name;
    Quiver quiver;
    QuiverType type;
};

/// All diagrams, each in the descending orientation and two random ones,
/// plus the five-vertex double-arrow quiver.
std::vector<FixtureQuiver> fixture_quivers(std::uint64_t seed = 7);

Quiver double5_quiver();
Quiver kronecker_quiver(Index k);
Quiver a2_quiver();

/// Random connected acyclic quiver: a random spanning tree plus extra
/// edges, some with multiplicity, oriented by a random permutation.
Quiver random_quiver(std::mt19937_64& rng, Index max_vertices = 6, Index max_extra = 3);

quiver::DimVector random_vector(std::mt19937_64& rng, Index n, long lo, long hi);

} // namespace fixtures
