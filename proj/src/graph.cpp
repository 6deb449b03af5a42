#include "csg/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace csg {

namespace {

constexpr int kMaxVertices = 31;

std::uint32_t lowbit(std::uint32_t x) { return x & (~x + 1); }

}  // namespace

int Graph::degree(int v) const { return std::popcount(adj[v - 1]); }

Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 0 || n > kMaxVertices) throw std::invalid_argument("graph: vertex count out of range");
  Graph g;
  g.n = n;
  g.adj.assign(n, 0);
  for (auto& [a, b] : edges) {
    if (a == b) throw std::invalid_argument("graph: loop edge");
    if (a > b) std::swap(a, b);
    if (a < 1 || b > n) throw std::invalid_argument("graph: edge endpoint out of range");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  g.edges = std::move(edges);
  for (auto [a, b] : g.edges) {
    g.adj[a - 1] |= 1u << (b - 1);
    g.adj[b - 1] |= 1u << (a - 1);
  }
  return g;
}

namespace {

bool mask_connected(const Graph& g, std::uint32_t mask) {
  if (!mask) return false;
  std::uint32_t seen = lowbit(mask);
  std::uint32_t frontier = seen;
  while (frontier) {
    std::uint32_t next = 0;
    std::uint32_t f = frontier;
    while (f) {
      int v = std::countr_zero(f);
      f &= f - 1;
      next |= g.adj[v] & mask;
    }
    next &= ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == mask;
}

void grow(const Graph& g, std::uint32_t allowed, std::uint32_t S, std::uint32_t cand,
          std::vector<std::uint32_t>& out, std::size_t budget) {
  if (out.size() >= budget) throw std::length_error("connected_subsets: budget exceeded");
  out.push_back(S);
  std::uint32_t processed = 0;
  std::uint32_t X = cand;
  while (X) {
    std::uint32_t u = lowbit(X);
    X ^= u;
    int ui = std::countr_zero(u);
    std::uint32_t newS = S | u;
    std::uint32_t newcand = (X | (g.adj[ui] & allowed & ~newS)) & ~processed;
    grow(g, allowed, newS, newcand, out, budget);
    processed |= u;
  }
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.n == 0) return false;
  return mask_connected(g, g.n == 31 ? 0x7fffffffu : ((1u << g.n) - 1));
}

std::vector<std::vector<int>> connected_subsets(const Graph& g, std::size_t budget) {
  std::vector<std::uint32_t> masks;
  for (int v = 1; v <= g.n; ++v) {
    std::uint32_t vb = 1u << (v - 1);
    std::uint32_t allowed = 0;
    for (int u = v; u <= g.n; ++u) allowed |= 1u << (u - 1);
    grow(g, allowed, vb, g.adj[v - 1] & allowed & ~vb, masks, budget);
  }
  std::vector<std::vector<int>> out;
  out.reserve(masks.size());
  for (auto m : masks) {
    std::vector<int> s;
    while (m) {
      s.push_back(std::countr_zero(m) + 1);
      m &= m - 1;
    }
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::pair<Graph, std::vector<int>> induced(const Graph& g, const std::vector<int>& S) {
  if (S.empty()) throw std::invalid_argument("induced: empty vertex set");
  std::vector<int> verts = S;
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  for (int v : verts)
    if (v < 1 || v > g.n) throw std::invalid_argument("induced: vertex out of range");
  std::vector<int> newlab(g.n + 1, 0);
  for (std::size_t i = 0; i < verts.size(); ++i) newlab[verts[i]] = static_cast<int>(i) + 1;
  std::vector<std::pair<int, int>> edges;
  for (auto [a, b] : g.edges)
    if (newlab[a] && newlab[b]) edges.emplace_back(newlab[a], newlab[b]);
  return {make_graph(static_cast<int>(verts.size()), std::move(edges)), verts};
}

Graph contract(const Graph& g, std::pair<int, int> e) {
  auto [a, b] = e;
  if (a > b) std::swap(a, b);
  if (!g.has_edge(a, b)) throw std::invalid_argument("contract: not an edge");
  auto relabel = [&](int v) {
    if (v == b) return a;
    return v > b ? v - 1 : v;
  };
  std::vector<std::pair<int, int>> edges;
  for (auto [x, y] : g.edges) {
    int u = relabel(x), v = relabel(y);
    if (u != v) edges.emplace_back(u, v);
  }
  return make_graph(g.n - 1, std::move(edges));
}

namespace {

bool iso_backtrack(const Graph& a, const Graph& b, std::vector<int>& map,
                   std::vector<bool>& used, int v) {
  if (v > a.n) return true;
  for (int w = 1; w <= b.n; ++w) {
    if (used[w]) continue;
    if (a.degree(v) != b.degree(w)) continue;
    bool ok = true;
    for (int u = 1; u < v && ok; ++u)
      if (a.has_edge(u, v) != b.has_edge(map[u], w)) ok = false;
    if (!ok) continue;
    map[v] = w;
    used[w] = true;
    if (iso_backtrack(a, b, map, used, v + 1)) return true;
    used[w] = false;
  }
  return false;
}

}  // namespace

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.n != b.n || a.edges.size() != b.edges.size()) return false;
  std::vector<int> da, db;
  for (int v = 1; v <= a.n; ++v) da.push_back(a.degree(v));
  for (int v = 1; v <= b.n; ++v) db.push_back(b.degree(v));
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  std::vector<int> map(a.n + 1, 0);
  std::vector<bool> used(b.n + 1, false);
  return iso_backtrack(a, b, map, used, 1);
}

std::string FamilyTag::str() const {
  switch (kind) {
    case FamilyKind::Path:
      return "P_" + std::to_string(n);
    case FamilyKind::Cycle:
      return "C_" + std::to_string(n);
    case FamilyKind::AlmostPath:
      return "A_{" + std::to_string(n) + "," + std::to_string(k) + "}";
    case FamilyKind::PathWithTriangle:
      return "Delta_{" + std::to_string(n) + "," + std::to_string(k) + "}";
    case FamilyKind::Complete:
      return "K_" + std::to_string(n);
    case FamilyKind::Named:
      return "named";
    case FamilyKind::Other:
      return "other";
  }
  return "other";
}

namespace {

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  return make_graph(n, std::move(e));
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle graph needs n >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(1, n);
  return make_graph(n, std::move(e));
}

Graph almost_path_graph(int n, int k) {
  if (n < 1 || k < 1 || k > n) throw std::invalid_argument("A_{n,k} needs 1 <= k <= n");
  Graph p = path_graph(n);
  auto e = p.edges;
  e.emplace_back(k, n + 1);
  return make_graph(n + 1, std::move(e));
}

Graph path_with_triangle_graph(int n, int k) {
  if (n < 2 || k < 1 || k > n - 1)
    throw std::invalid_argument("Delta_{n,k} needs n >= 2 and 1 <= k <= n-1");
  Graph p = path_graph(n);
  auto e = p.edges;
  e.emplace_back(k, n + 1);
  e.emplace_back(k + 1, n + 1);
  return make_graph(n + 1, std::move(e));
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) e.emplace_back(i, j);
  return make_graph(n, std::move(e));
}

Graph complete_minus(int n, const std::vector<std::pair<int, int>>& removed) {
  Graph k = complete_graph(n);
  std::vector<std::pair<int, int>> e;
  for (auto edge : k.edges)
    if (std::find(removed.begin(), removed.end(), edge) == removed.end()) e.push_back(edge);
  return make_graph(n, std::move(e));
}

}  // namespace

Graph catalog_graph(const std::string& name) {
  // Edge lists transcribed from the two figures of minimal graphs with
  // non-free / non-aspherical connected subgraph arrangements.
  if (name == "G1") return make_graph(4, {{1, 2}, {2, 3}, {1, 4}, {3, 4}, {2, 4}});
  if (name == "G2") return complete_graph(4);
  if (name == "G3") return make_graph(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}});
  if (name == "G4") return make_graph(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}});
  if (name == "G5") return make_graph(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {4, 5}});
  if (name == "G6") return make_graph(5, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 5}});
  if (name == "G7") return make_graph(6, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 5}, {3, 6}});
  if (name == "G8") return make_graph(7, {{1, 2}, {1, 3}, {1, 4}, {2, 5}, {3, 6}, {4, 7}});
  if (name == "G9")
    return make_graph(5, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 4}, {3, 5}});
  if (name == "G10")
    return make_graph(5, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 5}, {3, 4}, {3, 5}});
  if (name == "G11")
    return make_graph(5, {{1, 2}, {2, 5}, {4, 5}, {1, 4}, {1, 3}, {2, 3}, {3, 4}, {3, 5}});
  if (name == "G12") return make_graph(5, {{1, 2}, {2, 5}, {4, 5}, {1, 4}, {2, 3}, {3, 4}});
  if (name == "G13") return make_graph(5, {{1, 2}, {2, 5}, {4, 5}, {1, 4}, {2, 3}, {3, 5}});
  if (name == "G14")
    return make_graph(5, {{1, 2}, {2, 5}, {4, 5}, {1, 4}, {2, 3}, {3, 5}, {1, 3}});
  if (name == "G15")
    return make_graph(5, {{1, 2}, {2, 4}, {3, 4}, {1, 3}, {2, 3}, {4, 5}});
  if (name == "K5") return complete_graph(5);
  if (name == "K5m1") return complete_minus(5, {{2, 5}});
  if (name == "K5m2") return complete_minus(5, {{1, 5}, {2, 5}});
  if (name == "K4P") return make_graph(5, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {3, 5}});
  if (name == "K5mT") return complete_minus(5, {{1, 2}, {1, 5}, {2, 5}});
  throw std::invalid_argument("unknown catalog graph: " + name);
}

std::vector<std::string> catalog_names() {
  return {"G1", "G2", "G3", "G4", "G5", "G6", "G7", "G8", "G9", "G10", "G11",
          "G12", "G13", "G14", "G15", "K5", "K5m1", "K5m2", "K4P", "K5mT"};
}

Graph build_family(const std::string& spec) {
  if (spec.size() >= 2 && spec[0] == 'G' && spec.find(':') == std::string::npos)
    return catalog_graph(spec);
  auto colon = spec.find(':');
  if (colon == std::string::npos || colon == 0)
    throw std::invalid_argument("family spec must look like P:n, C:n, A:n,k, T:n,k, K:n or G1..G8");
  std::string kind = spec.substr(0, colon);
  std::string rest = spec.substr(colon + 1);
  auto comma = rest.find(',');
  int n = 0, k = 0;
  try {
    if (comma == std::string::npos) {
      n = std::stoi(rest);
    } else {
      n = std::stoi(rest.substr(0, comma));
      k = std::stoi(rest.substr(comma + 1));
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("bad family parameters: " + spec);
  }
  if (kind == "P") return path_graph(n);
  if (kind == "C") return cycle_graph(n);
  if (kind == "A") return almost_path_graph(n, k);
  if (kind == "T") return path_with_triangle_graph(n, k);
  if (kind == "K") return complete_graph(n);
  throw std::invalid_argument("unknown family kind: " + kind);
}

FamilyTag classify_family(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("classify_family: graph is disconnected");
  int n = g.n;
  int m = static_cast<int>(g.edges.size());
  std::vector<int> deg;
  for (int v = 1; v <= n; ++v) deg.push_back(g.degree(v));
  int maxdeg = *std::max_element(deg.begin(), deg.end());

  if (m == n - 1 && maxdeg <= 2) return {FamilyKind::Path, n, 0};
  if (m == n && maxdeg == 2 && n >= 3) return {FamilyKind::Cycle, n, 0};

  if (m == n - 1 && maxdeg == 3 &&
      std::count(deg.begin(), deg.end(), 3) == 1) {
    // Tree with one branch vertex: legs must include one of length 1.
    for (int nn = n - 1, k = 1; k <= nn; ++k) {
      if (2 * k > nn + 1) break;  // canonical k <= (n+1)/2
      Graph tmpl = almost_path_graph(nn, k);
      if (isomorphic(g, tmpl)) return {FamilyKind::AlmostPath, nn, k};
    }
  }

  if (m == n && maxdeg == 3 && n >= 3) {
    for (int nn = n - 1, k = 1; k <= nn - 1; ++k) {
      if (2 * k > nn) break;  // canonical k <= n/2
      Graph tmpl = path_with_triangle_graph(nn, k);
      if (isomorphic(g, tmpl)) return {FamilyKind::PathWithTriangle, nn, k};
    }
  }

  if (maxdeg == n - 1 && m == n * (n - 1) / 2 && n >= 4) return {FamilyKind::Complete, n, 0};
  return {FamilyKind::Other, 0, 0};
}

}  // namespace csg
