#include "csg/arrangement.hpp"

#include <algorithm>
#include <stdexcept>

namespace csg {

int Arrangement::index_of(const RowVec& normal) const {
  RowVec p = primitive(normal);
  for (int i = 0; i < size(); ++i)
    if (hyps[i].normal == p) return i;
  return -1;
}

int Arrangement::push_unique(RowVec normal, std::optional<std::vector<int>> label) {
  RowVec p = primitive(normal);
  if (row_is_zero(p)) throw std::invalid_argument("hyperplane normal must be nonzero");
  int i = index_of(p);
  if (i >= 0) return i;
  hyps.push_back(Hyperplane{std::move(p), std::move(label)});
  return size() - 1;
}

int Arrangement::rank() const {
  Mat m(size(), dim);
  for (int i = 0; i < size(); ++i) m.row(i) = hyps[i].normal;
  return rank_of_matrix(m);
}

Subspace Arrangement::center() const {
  std::vector<int> all(hyps.size());
  for (int i = 0; i < size(); ++i) all[i] = i;
  return flat_subspace(all);
}

Subspace Arrangement::flat_subspace(const std::vector<int>& idx) const {
  Mat m(idx.size(), dim);
  for (std::size_t i = 0; i < idx.size(); ++i) m.row(i) = hyps[idx[i]].normal;
  return nullspace(m, dim);
}

std::string Arrangement::key() const {
  std::vector<std::string> parts;
  parts.reserve(hyps.size());
  for (const auto& h : hyps) parts.push_back(to_string(h.normal));
  std::sort(parts.begin(), parts.end());
  std::string s = std::to_string(dim) + "#";
  for (auto& p : parts) s += p + ";";
  return s;
}

Arrangement make_arrangement(int dim, const std::vector<RowVec>& normals, int var_base) {
  Arrangement a;
  a.dim = dim;
  a.var_base = var_base;
  for (const auto& v : normals) {
    if (v.size() != dim) throw DimensionMismatch("make_arrangement: normal length mismatch");
    a.push_unique(v);
  }
  return a;
}

namespace {

RowVec indicator(int dim, const std::vector<int>& I, int var_base) {
  RowVec v = RowVec::Zero(dim);
  for (int i : I) v(i - var_base) = 1;
  return v;
}

}  // namespace

Arrangement build_csg(const Graph& g) {
  Arrangement a;
  a.dim = g.n;
  a.var_base = 1;
  for (const auto& I : connected_subsets(g)) a.push_unique(indicator(g.n, I, 1), I);
  return a;
}

std::vector<int> localization_indices(const Arrangement& a, const Subspace& x) {
  std::vector<int> out;
  for (int i = 0; i < a.size(); ++i) {
    // X lies in H exactly when the defining form vanishes on X's basis.
    bool inside = true;
    for (Eigen::Index r = 0; r < x.basis.rows() && inside; ++r)
      if (x.basis.row(r).dot(a.hyps[i].normal) != 0) inside = false;
    if (inside) out.push_back(i);
  }
  return out;
}

Arrangement localization(const Arrangement& a, const Subspace& x) {
  Arrangement out;
  out.dim = a.dim;
  out.var_base = a.var_base;
  for (int i : localization_indices(a, x)) out.hyps.push_back(a.hyps[i]);
  return out;
}

Arrangement restriction(const Arrangement& a, int h, std::vector<int>* source_image) {
  if (h < 0 || h >= a.size()) throw std::invalid_argument("restriction: hyperplane not in A");
  Mat normal_row(1, a.dim);
  normal_row.row(0) = a.hyps[h].normal;
  Subspace basis = nullspace(normal_row, a.dim);  // (dim-1) x dim
  Arrangement out;
  out.dim = a.dim - 1;
  out.var_base = 1;
  if (source_image) source_image->assign(a.size(), -1);
  for (int j = 0; j < a.size(); ++j) {
    if (j == h) continue;
    RowVec v = (basis.basis * a.hyps[j].normal.transpose()).transpose();
    int idx = out.push_unique(v);
    if (source_image) (*source_image)[j] = idx;
  }
  return out;
}

Arrangement restriction_to(const Arrangement& a, const Subspace& x) {
  Arrangement out;
  out.dim = x.dim();
  out.var_base = 1;
  for (int j = 0; j < a.size(); ++j) {
    RowVec v = (x.basis * a.hyps[j].normal.transpose()).transpose();
    if (row_is_zero(v)) continue;  // hyperplane contains X
    out.push_unique(v);
  }
  return out;
}

Arrangement deletion(const Arrangement& a, int h) {
  Arrangement out;
  out.dim = a.dim;
  out.var_base = a.var_base;
  for (int j = 0; j < a.size(); ++j)
    if (j != h) out.hyps.push_back(a.hyps[j]);
  return out;
}

std::tuple<Arrangement, Arrangement, Arrangement> triple(const Arrangement& a, int h) {
  return {a, deletion(a, h), restriction(a, h)};
}

Arrangement ideal_subarrangement(const Graph& g, const std::vector<std::vector<int>>& ideal,
                                 IdealViolation* violation) {
  auto norm = [](std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  std::vector<std::vector<int>> members;
  for (const auto& I : ideal) members.push_back(norm(I));
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());

  auto in_ideal = [&](const std::vector<int>& s) {
    return std::binary_search(members.begin(), members.end(), s);
  };

  for (const auto& I : members) {
    if (I.empty()) throw std::invalid_argument("ideal members must be nonempty");
    auto [gi, verts] = induced(g, I);
    if (!is_connected(gi))
      throw std::invalid_argument("ideal member does not induce a connected subgraph");
    if (I.size() == 1) continue;
    // Downward closure: removing one vertex while staying connected must
    // stay inside the ideal; chains of such removals reach every connected
    // subset.
    for (std::size_t drop = 0; drop < I.size(); ++drop) {
      std::vector<int> J;
      for (std::size_t t = 0; t < I.size(); ++t)
        if (t != drop) J.push_back(I[t]);
      auto [gj, v2] = induced(g, J);
      if (!is_connected(gj)) continue;
      if (!in_ideal(J)) {
        if (violation) *violation = IdealViolation{I, J};
        throw std::invalid_argument("ideal is not downward closed: member {" +
                                    std::to_string(I[drop]) + "-removal} is missing");
      }
    }
  }

  Arrangement full = build_csg(g);
  Arrangement out;
  out.dim = full.dim;
  out.var_base = full.var_base;
  for (const auto& h : full.hyps)
    if (h.label && in_ideal(*h.label)) out.hyps.push_back(h);
  return out;
}

Arrangement size_truncated_csg(const Graph& g, int s) {
  Arrangement full = build_csg(g);
  Arrangement out;
  out.dim = full.dim;
  out.var_base = full.var_base;
  for (const auto& h : full.hyps)
    if (h.label && static_cast<int>(h.label->size()) <= s) out.hyps.push_back(h);
  return out;
}

Arrangement bn_arrangement(int n) {
  if (n < 2) throw std::invalid_argument("bn_arrangement needs n >= 2");
  Arrangement a;
  a.dim = n;
  a.var_base = 0;  // the defining forms are written in x_0..x_{n-1}
  // A_{P_n}: all consecutive sums, by (size, lex).
  for (int len = 1; len <= n; ++len)
    for (int start = 0; start + len <= n; ++start) {
      RowVec v = RowVec::Zero(n);
      std::vector<int> label;
      for (int i = start; i < start + len; ++i) {
        v(i) = 1;
        label.push_back(i);
      }
      a.push_unique(v, label);
    }
  for (int k = 1; k <= n - 1; ++k) {
    RowVec v = RowVec::Zero(n);
    v(0) = 2;
    for (int i = 1; i <= k; ++i) v(i) = 1;
    a.push_unique(v);
  }
  return a;
}

bool is_generic(const Arrangement& a) {
  int r = a.rank();
  if (a.size() <= r) return false;
  // DFS over r-subsets with prefix-rank pruning; any dependent r-subset
  // refutes genericity.
  Mat stack(r, a.dim);
  std::vector<int> piv;
  std::function<bool(int, int)> rec = [&](int start, int depth) -> bool {
    if (depth == r) return true;
    for (int i = start; i < a.size(); ++i) {
      Mat m(depth + 1, a.dim);
      m.topRows(depth) = stack.topRows(depth);
      m.row(depth) = a.hyps[i].normal;
      if (rank_of_matrix(m) != depth + 1) return false;  // dependent subset found
      stack.row(depth) = a.hyps[i].normal;
      if (!rec(i + 1, depth + 1)) return false;
    }
    return true;
  };
  return rec(0, 0);
}

Arrangement essentialize(const Arrangement& a) {
  Mat m(a.size(), a.dim);
  for (int i = 0; i < a.size(); ++i) m.row(i) = a.hyps[i].normal;
  Subspace span = canonical_form(m, a.dim);
  int r = span.dim();
  if (r == a.dim) return a;
  auto piv = pivot_columns(span.basis);
  Arrangement out;
  out.dim = r;
  out.var_base = 1;
  for (int i = 0; i < a.size(); ++i) {
    RowVec c(r);
    for (int j = 0; j < r; ++j) c(j) = a.hyps[i].normal(piv[j]);
    out.push_unique(c, a.hyps[i].label);
  }
  return out;
}

}  // namespace csg
