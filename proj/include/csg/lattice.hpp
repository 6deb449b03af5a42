#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "csg/arrangement.hpp"
#include "csg/bitset.hpp"
#include "csg/polynomial.hpp"

namespace csg {

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Flat {
  Bitset closed;  // indices of hyperplanes containing the flat
  int rank = 0;
  Int mobius = 0;
};

/// Intersection lattice of a central arrangement, rank-stratified, ordered
/// by (rank, closed-set lex). Flat 0 is the full space V.
struct IntersectionLattice {
  Arrangement arr;
  std::vector<Flat> flats;
  std::vector<std::vector<int>> by_rank;
  std::unordered_map<Bitset, int, BitsetHash> index;

  int rank() const { return static_cast<int>(by_rank.size()) - 1; }
  int size() const { return static_cast<int>(flats.size()); }
  /// Flat id for a closed hyperplane set, -1 if absent.
  int flat_of(const Bitset& closed) const {
    auto it = index.find(closed);
    return it == index.end() ? -1 : it->second;
  }
  /// Geometric subspace of a flat (computed on demand).
  Subspace subspace_of(int id) const { return arr.flat_subspace(flats[id].closed.to_indices()); }
  /// Hyperplane count of the localization at a flat.
  int localization_size(int id) const { return flats[id].closed.count(); }
};

IntersectionLattice intersection_lattice(const Arrangement& a,
                                         std::size_t max_flats = 2000000);

/// chi(A,t) = sum_X mu(X) t^{dim X}.
IntPoly characteristic_polynomial(const IntersectionLattice& L);

/// pi(A,t) = sum_X mu(X) (-t)^{r(X)}; non-negative coefficients.
IntPoly poincare_polynomial(const IntersectionLattice& L);

/// Independent evaluation of chi by counting complement points over n+1
/// prime fields beyond the subdeterminant bound, then interpolating.
IntPoly char_poly_finite_field(const Arrangement& a);

/// Ids of flats X with r(X) + r(Y) = r(X v Y) + r(X ^ Y) for every Y.
/// Quadratic in the lattice size; guarded by max_size.
std::vector<int> modular_flats(const IntersectionLattice& L, std::size_t max_size = 60000);

/// Maximal chain V = X_0 < ... < X_r of modular flats, as flat ids, if one
/// exists.
std::optional<std::vector<int>> supersolvable_chain(const IntersectionLattice& L);

}  // namespace csg
