#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "csg/exactlin.hpp"
#include "csg/graph.hpp"

namespace csg {

struct Hyperplane {
  RowVec normal;                          // primitive integer form
  std::optional<std::vector<int>> label;  // vertex set I when the plane is H_I

  std::string form(int var_base = 1) const { return form_string(normal, var_base); }
};

/// Central arrangement: ordered, duplicate-free list of hyperplanes.
struct Arrangement {
  int dim = 0;
  int var_base = 1;  // display offset for variable names
  std::vector<Hyperplane> hyps;

  int size() const { return static_cast<int>(hyps.size()); }
  int index_of(const RowVec& normal) const;
  bool contains_normal(const RowVec& normal) const { return index_of(normal) >= 0; }

  /// Appends if not present; returns the index either way.
  int push_unique(RowVec normal, std::optional<std::vector<int>> label = std::nullopt);

  int rank() const;
  Subspace center() const;
  /// Geometric subspace cut out by the hyperplanes with the given indices.
  Subspace flat_subspace(const std::vector<int>& idx) const;

  /// Canonical content key (sorted primitive normals), independent of order.
  std::string key() const;
  std::string form(int i) const { return hyps[i].form(var_base); }
};

Arrangement make_arrangement(int dim, const std::vector<RowVec>& normals, int var_base = 1);

/// The connected subgraph arrangement A_G: one labelled hyperplane
/// ker(sum_{i in I} x_i) per connected I, in (size, lex) order.
Arrangement build_csg(const Graph& g);

/// Hyperplanes containing X; labels and ambient dimension preserved.
Arrangement localization(const Arrangement& a, const Subspace& x);
std::vector<int> localization_indices(const Arrangement& a, const Subspace& x);

/// Restriction A^H inside the hyperplane at index h, written in the
/// canonical basis of H (reduced echelon form of its nullspace).
/// `source_image`, when given, receives for every index j != h the index
/// of H_j's trace in the result.
Arrangement restriction(const Arrangement& a, int h, std::vector<int>* source_image = nullptr);

/// Restriction to an arbitrary subspace X (used for flats of any rank).
Arrangement restriction_to(const Arrangement& a, const Subspace& x);

/// (A, A', A'') for the hyperplane at index h.
std::tuple<Arrangement, Arrangement, Arrangement> triple(const Arrangement& a, int h);

Arrangement deletion(const Arrangement& a, int h);

struct IdealViolation {
  std::vector<int> member;   // set in the ideal
  std::vector<int> missing;  // connected subset that is absent
};

/// Subarrangement of A_G on a lower order ideal of connected vertex sets.
/// Throws std::invalid_argument with a witness-formatted message if the
/// ideal is not downward closed; `violation` receives the witness.
Arrangement ideal_subarrangement(const Graph& g, const std::vector<std::vector<int>>& ideal,
                                 IdealViolation* violation = nullptr);

/// A_G^s: connected subsets of size at most s.
Arrangement size_truncated_csg(const Graph& g, int s);

/// B_n = A_{P_n} in variables x_0..x_{n-1} together with
/// ker(2x_0 + x_1 + ... + x_k) for k = 1..n-1.
Arrangement bn_arrangement(int n);

/// Every rank-many subset independent and |A| > rank.
bool is_generic(const Arrangement& a);

/// Same arrangement written in coordinates of the span of its normals.
Arrangement essentialize(const Arrangement& a);

}  // namespace csg
