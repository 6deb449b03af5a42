#include "csg/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace csg {

namespace {

struct LevelFlat {
  Mat rref;  // annihilator row space of the flat, reduced echelon form
  std::vector<int> pivots;
  int id;
};

std::string matrix_key(const Mat& m) {
  std::string s;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      s += m(i, j).get_str();
      s += ',';
    }
  return s;
}

}  // namespace

IntersectionLattice intersection_lattice(const Arrangement& a, std::size_t max_flats) {
  const int m = a.size();
  const int n = a.dim;
  IntersectionLattice L;
  L.arr = a;

  // Level 0: the full space.
  Flat top;
  top.closed = Bitset(m);
  top.rank = 0;
  L.flats.push_back(top);

  std::vector<LevelFlat> level;
  level.push_back(LevelFlat{Mat(0, n), {}, 0});
  std::vector<int> level_ids{0};

  while (!level.empty()) {
    std::vector<LevelFlat> next;
    std::unordered_map<std::string, int> seen;  // matrix key -> position in next
    for (const auto& lf : level) {
      const Bitset& closed = L.flats[lf.id].closed;
      for (int j = 0; j < m; ++j) {
        if (closed.test(j)) continue;
        RowVec r = reduce_against(lf.rref, lf.pivots, a.hyps[j].normal);
        // j not in the closed set, so the residual is nonzero.
        int lead = -1;
        for (int c = 0; c < n; ++c)
          if (r(c) != 0) {
            lead = c;
            break;
          }
        r /= r(lead);
        Mat nm(lf.rref.rows() + 1, n);
        nm.topRows(lf.rref.rows()) = lf.rref;
        nm.row(lf.rref.rows()) = r;
        for (Eigen::Index i = 0; i < nm.rows() - 1; ++i)
          if (nm(i, lead) != 0) nm.row(i) -= nm(i, lead) * r;
        // Sort rows by pivot column to restore canonical order.
        std::vector<int> piv = lf.pivots;
        piv.push_back(lead);
        std::vector<int> order(piv.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int x, int y) { return piv[x] < piv[y]; });
        Mat sorted(nm.rows(), n);
        std::vector<int> spiv(piv.size());
        for (std::size_t t = 0; t < order.size(); ++t) {
          sorted.row(t) = nm.row(order[t]);
          spiv[t] = piv[order[t]];
        }
        std::string key = matrix_key(sorted);
        if (seen.count(key)) continue;
        // New flat: compute its closed set.
        Bitset cl(m);
        for (int t = 0; t < m; ++t) {
          if (row_is_zero(reduce_against(sorted, spiv, a.hyps[t].normal))) cl.set(t);
        }
        if (L.flats.size() + next.size() + 1 > max_flats)
          throw BudgetExceeded("intersection lattice exceeds the flat budget");
        seen.emplace(std::move(key), static_cast<int>(next.size()));
        next.push_back(LevelFlat{std::move(sorted), std::move(spiv), -1});
        Flat f;
        f.closed = cl;
        f.rank = static_cast<int>(next.back().pivots.size());
        next.back().id = static_cast<int>(L.flats.size());
        L.flats.push_back(std::move(f));
      }
    }
    level = std::move(next);
  }

  // Deterministic order: by rank, then closed-set lexicographic.
  std::vector<int> order(L.flats.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    if (L.flats[x].rank != L.flats[y].rank) return L.flats[x].rank < L.flats[y].rank;
    return L.flats[x].closed < L.flats[y].closed;
  });
  std::vector<Flat> sorted_flats;
  sorted_flats.reserve(L.flats.size());
  for (int id : order) sorted_flats.push_back(std::move(L.flats[id]));
  L.flats = std::move(sorted_flats);

  int maxrank = 0;
  for (const auto& f : L.flats) maxrank = std::max(maxrank, f.rank);
  L.by_rank.assign(maxrank + 1, {});
  for (int i = 0; i < L.size(); ++i) {
    L.by_rank[L.flats[i].rank].push_back(i);
    L.index.emplace(L.flats[i].closed, i);
  }

  // Moebius function by the defining recursion over lower intervals.
  for (int i = 0; i < L.size(); ++i) {
    Flat& x = L.flats[i];
    if (x.rank == 0) {
      x.mobius = 1;
      continue;
    }
    Int acc = 0;
    for (int j = 0; j < L.size(); ++j) {
      if (L.flats[j].rank >= x.rank) break;
      if (x.closed.contains(L.flats[j].closed)) acc += L.flats[j].mobius;
    }
    x.mobius = -acc;
  }
  return L;
}

IntPoly characteristic_polynomial(const IntersectionLattice& L) {
  std::vector<Int> c(L.arr.dim + 1, Int(0));
  for (const auto& f : L.flats) c[L.arr.dim - f.rank] += f.mobius;
  return IntPoly(std::move(c));
}

IntPoly poincare_polynomial(const IntersectionLattice& L) {
  int r = L.rank();
  std::vector<Int> c(r + 1, Int(0));
  for (const auto& f : L.flats) {
    Int v = f.mobius;
    if (f.rank % 2) v = -v;
    c[f.rank] += v;
  }
  return IntPoly(std::move(c));
}

namespace {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// Upper bound for |det| of any square submatrix of the normal matrix.
Int subdeterminant_bound(const Arrangement& a) {
  std::vector<Int> norms2;
  for (const auto& h : a.hyps) {
    Int s = 0;
    for (Eigen::Index j = 0; j < h.normal.size(); ++j) {
      Int num = h.normal(j).get_num();
      s += num * num;
    }
    norms2.push_back(s);
  }
  std::sort(norms2.rbegin(), norms2.rend());
  Int prod = 1;
  for (int k = 0; k < std::min<int>(a.dim, static_cast<int>(norms2.size())); ++k)
    prod *= norms2[k];
  Int root = sqrt(prod);
  return root + 1;
}

using ModRow = std::vector<long>;

void normalize_mod(ModRow& r, long p) {
  long lead = 0;
  for (long v : r)
    if (v) {
      lead = v;
      break;
    }
  if (!lead) return;
  // Multiply by lead^{-1} mod p.
  long inv = 1, base = lead, e = p - 2;
  while (e) {
    if (e & 1) inv = inv * base % p;
    base = base * base % p;
    e >>= 1;
  }
  for (auto& v : r) v = v * inv % p;
}

Int complement_count(int dim, std::vector<ModRow> normals, long p) {
  std::sort(normals.begin(), normals.end());
  normals.erase(std::unique(normals.begin(), normals.end()), normals.end());
  if (normals.empty()) {
    Int r = 1;
    for (int i = 0; i < dim; ++i) r *= p;
    return r;
  }
  ModRow h = normals.back();
  normals.pop_back();
  // Deletion count minus count inside the removed hyperplane.
  Int del = complement_count(dim, normals, p);
  int t = 0;
  while (h[t] == 0) ++t;  // leading coefficient is 1 after normalization
  std::vector<ModRow> restricted;
  for (const auto& al : normals) {
    ModRow r;
    r.reserve(dim - 1);
    long at = al[t];
    for (int i = 0; i < dim; ++i) {
      if (i == t) continue;
      long v = (al[i] - at * h[i]) % p;
      if (v < 0) v += p;
      r.push_back(v);
    }
    bool zero = std::all_of(r.begin(), r.end(), [](long v) { return v == 0; });
    if (zero) continue;
    normalize_mod(r, p);
    restricted.push_back(std::move(r));
  }
  return del - complement_count(dim - 1, restricted, p);
}

}  // namespace

IntPoly char_poly_finite_field(const Arrangement& a) {
  const int n = a.dim;
  Int bound = subdeterminant_bound(a);
  std::vector<long> primes;
  long p = bound.fits_slong_p() ? bound.get_si() + 1 : 0;
  if (p == 0) throw std::runtime_error("char_poly_finite_field: bound too large");
  while (static_cast<int>(primes.size()) < n + 1) {
    while (!is_prime(p)) ++p;
    primes.push_back(p);
    ++p;
  }

  std::vector<Int> values;
  for (long q : primes) {
    std::vector<ModRow> normals;
    for (const auto& h : a.hyps) {
      ModRow r(n);
      for (int j = 0; j < n; ++j) {
        Int num = h.normal(j).get_num();
        long v = static_cast<long>(mpz_fdiv_ui(num.get_mpz_t(), q));
        r[j] = v;
      }
      normalize_mod(r, q);
      normals.push_back(std::move(r));
    }
    values.push_back(complement_count(n, std::move(normals), q));
  }

  // Exact Lagrange interpolation through (p_i, N_i).
  std::vector<Rat> coeffs(n + 1, Rat(0));
  for (int i = 0; i <= n; ++i) {
    // Basis polynomial prod_{j != i} (t - p_j) / (p_i - p_j).
    std::vector<Rat> basis{Rat(1)};
    Rat denom(1);
    for (int j = 0; j <= n; ++j) {
      if (j == i) continue;
      std::vector<Rat> nb(basis.size() + 1, Rat(0));
      for (std::size_t k = 0; k < basis.size(); ++k) {
        nb[k + 1] += basis[k];
        nb[k] -= basis[k] * Rat(primes[j]);
      }
      basis = std::move(nb);
      denom *= Rat(primes[i]) - Rat(primes[j]);
    }
    Rat scale = Rat(values[i]) / denom;
    for (std::size_t k = 0; k < basis.size(); ++k) coeffs[k] += basis[k] * scale;
  }
  std::vector<Int> out(n + 1);
  for (int k = 0; k <= n; ++k) {
    if (coeffs[k].get_den() != 1)
      throw std::runtime_error("char_poly_finite_field: interpolation is not integral");
    out[k] = coeffs[k].get_num();
  }
  return IntPoly(std::move(out));
}

std::vector<int> modular_flats(const IntersectionLattice& L, std::size_t max_size) {
  const std::size_t sz = L.size();
  if (sz > max_size)
    throw BudgetExceeded("modular_flats: lattice too large for the quadratic test");
  // Ancestor bitsets: up[x] holds all flats >= x; flats are rank-sorted, so
  // the first common ancestor in id order is the join.
  std::size_t words = (sz + 63) / 64;
  std::vector<std::uint64_t> up(sz * words, 0);
  for (std::size_t x = 0; x < sz; ++x)
    for (std::size_t z = 0; z < sz; ++z)
      if (L.flats[z].closed.contains(L.flats[x].closed))
        up[x * words + (z >> 6)] |= std::uint64_t{1} << (z & 63);

  std::vector<int> ranks(sz);
  for (std::size_t i = 0; i < sz; ++i) ranks[i] = L.flats[i].rank;

  auto join_rank = [&](std::size_t x, std::size_t y) {
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t common = up[x * words + w] & up[y * words + w];
      if (common) {
        int z = static_cast<int>(w * 64 + std::countr_zero(common));
        return ranks[z];
      }
    }
    return -1;  // unreachable for central arrangements
  };

  std::vector<int> out;
  for (std::size_t x = 0; x < sz; ++x) {
    bool modular = true;
    for (std::size_t y = 0; y < sz && modular; ++y) {
      Bitset meet_closed = L.flats[x].closed & L.flats[y].closed;
      int meet_id = L.flat_of(meet_closed);
      // The intersection of two closed sets is closed, so the lookup hits.
      int rm = L.flats[meet_id].rank;
      if (ranks[x] + ranks[y] != join_rank(x, y) + rm) modular = false;
    }
    if (modular) out.push_back(static_cast<int>(x));
  }
  return out;
}

std::optional<std::vector<int>> supersolvable_chain(const IntersectionLattice& L) {
  std::vector<int> mods = modular_flats(L);
  int r = L.rank();
  std::vector<std::vector<int>> by_rank(r + 1);
  for (int id : mods) by_rank[L.flats[id].rank].push_back(id);
  if (by_rank[0].empty() || by_rank[r].empty()) return std::nullopt;

  std::vector<int> chain{L.by_rank[0][0]};
  std::vector<char> dead(L.size(), 0);
  std::function<bool(int)> extend = [&](int cur) -> bool {
    int k = L.flats[cur].rank;
    if (k == r) return true;
    for (int cand : by_rank[k + 1]) {
      if (dead[cand]) continue;
      if (!L.flats[cand].closed.contains(L.flats[cur].closed)) continue;
      chain.push_back(cand);
      if (extend(cand)) return true;
      chain.pop_back();
    }
    dead[cur] = 1;
    return false;
  };
  if (!extend(chain[0])) return std::nullopt;
  return chain;
}

}  // namespace csg
