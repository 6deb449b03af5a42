#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace csg {

/// Simple undirected graph on vertices 1..n.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // a < b, sorted, no duplicates
  std::vector<std::uint32_t> adj;          // neighbour mask, bit i ~ vertex i+1

  bool has_edge(int a, int b) const {
    if (a == b) return false;
    return (adj[a - 1] >> (b - 1)) & 1u;
  }
  int degree(int v) const;
};

Graph make_graph(int n, std::vector<std::pair<int, int>> edges);

bool is_connected(const Graph& g);

/// All nonempty vertex sets I with G[I] connected, in (size, lexicographic)
/// order. Grow-from-seed enumeration, each set produced once from its
/// minimum vertex.
std::vector<std::vector<int>> connected_subsets(const Graph& g,
                                                std::size_t budget = std::size_t(1) << 22);

/// Induced subgraph on S, relabelled to 1..|S|. Second component maps new
/// label -> old vertex (ascending).
std::pair<Graph, std::vector<int>> induced(const Graph& g, const std::vector<int>& S);

/// Contraction of an edge; the smaller endpoint survives, labels above the
/// removed vertex shift down, loops and duplicate edges are discarded.
Graph contract(const Graph& g, std::pair<int, int> e);

bool isomorphic(const Graph& a, const Graph& b);

enum class FamilyKind { Path, Cycle, AlmostPath, PathWithTriangle, Complete, Named, Other };

struct FamilyTag {
  FamilyKind kind = FamilyKind::Other;
  int n = 0;  // family parameter, not vertex count for A/T
  int k = 0;

  std::string str() const;
};

/// Recognizes P_n, C_n, A_{n,k}, Delta_{n,k} (canonical parameters), K_n.
/// Degree-sequence screening first, then explicit isomorphism with the
/// family template.
FamilyTag classify_family(const Graph& g);

/// Parses the family mini-language: P:n | C:n | A:n,k | T:n,k | K:n | G1..G8.
Graph build_family(const std::string& spec);

/// Named graphs from the non-free / non-aspherical catalogs: G1..G8,
/// G9..G15, K5, K5m1 (one edge removed), K5m2 (two adjacent edges removed),
/// K4P (K4 plus pendant), K5mT (triangle removed).
Graph catalog_graph(const std::string& name);
std::vector<std::string> catalog_names();

}  // namespace csg
