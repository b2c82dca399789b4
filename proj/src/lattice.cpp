#include "schubert/lattice.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "schubert/error.hpp"

namespace schubert::incidence {

int PointSet::count() const {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

int PointSet::intersection_count(const PointSet& other) const {
  int c = 0;
  for (std::size_t k = 0; k < words_.size(); ++k) c += std::popcount(words_[k] & other.words_[k]);
  return c;
}

PointSet& PointSet::operator|=(const PointSet& other) {
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
  return *this;
}

std::vector<int> PointSet::members() const {
  std::vector<int> out;
  for (int k = 0; k < size_; ++k) {
    if (test(k)) out.push_back(k);
  }
  return out;
}

int SubspaceLattice::index_of(const SubspaceCanonical& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) throw Error(ErrorCode::KeyNotFound, "subspace " + s.to_string() + " not in lattice");
  return it->second;
}

int SubspaceLattice::point_position(int element) const { return point_position_[element]; }

namespace {

// Appends every reduced echelon matrix with the given pivot columns.
void enumerate_pattern(const FieldPtr& field, int n, const std::vector<int>& pivots,
                       std::vector<SubspaceCanonical>& out) {
  const int k = static_cast<int>(pivots.size());
  std::vector<bool> is_pivot(n, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::pair<int, int>> free_slots;  // (row, col)
  for (int r = 0; r < k; ++r) {
    for (int c = pivots[r] + 1; c < n; ++c) {
      if (!is_pivot[c]) free_slots.emplace_back(r, c);
    }
  }
  const std::uint32_t q = field->q();
  std::vector<std::uint32_t> digits(free_slots.size(), 0);
  for (;;) {
    std::vector<Vector> rows(k, Vector(n, 0));
    for (int r = 0; r < k; ++r) rows[r][pivots[r]] = 1;
    for (std::size_t s = 0; s < free_slots.size(); ++s) rows[free_slots[s].first][free_slots[s].second] = digits[s];
    out.push_back(SubspaceCanonical::span(field, n, rows));
    std::size_t pos = 0;
    while (pos < digits.size() && ++digits[pos] == q) digits[pos++] = 0;
    if (pos == digits.size()) break;
  }
}

void enumerate_pivots(const FieldPtr& field, int n, int k, int start, std::vector<int>& pivots,
                      std::vector<SubspaceCanonical>& out) {
  if (static_cast<int>(pivots.size()) == k) {
    enumerate_pattern(field, n, pivots, out);
    return;
  }
  for (int c = start; c < n; ++c) {
    pivots.push_back(c);
    enumerate_pivots(field, n, k, c + 1, pivots, out);
    pivots.pop_back();
  }
}

}  // namespace

SubspaceLattice lattice_make(const FieldPtr& field, int n, std::uint64_t guard) {
  if (n < 0) throw Error(ErrorCode::IndexError, "negative dimension");
  std::uint64_t vectors = 1;
  for (int i = 0; i < n; ++i) {
    vectors *= field->q();
    if (vectors > guard) {
      throw Error(ErrorCode::TooLarge, field->name() + "^" + std::to_string(n) + " exceeds lattice guard " +
                                           std::to_string(guard));
    }
  }
  SubspaceLattice lat;
  lat.field_ = field;
  lat.n_ = n;
  for (int k = 0; k <= n; ++k) {
    std::vector<int> pivots;
    enumerate_pivots(field, n, k, 0, pivots, lat.elements_);
  }
  std::sort(lat.elements_.begin(), lat.elements_.end());
  lat.by_dim_.assign(static_cast<std::size_t>(std::max(n, 1)) + 1, {});
  for (int e = 0; e < lat.size(); ++e) {
    lat.index_.emplace(lat.elements_[e], e);
    lat.by_dim_[lat.elements_[e].dim()].push_back(e);
  }
  const auto& pts = lat.by_dim_[1];
  lat.point_position_.assign(lat.size(), -1);
  for (std::size_t k = 0; k < pts.size(); ++k) lat.point_position_[pts[k]] = static_cast<int>(k);
  lat.point_sets_.reserve(lat.size());
  for (int e = 0; e < lat.size(); ++e) {
    PointSet set(static_cast<int>(pts.size()));
    const auto& s = lat.elements_[e];
    for (std::size_t k = 0; k < pts.size(); ++k) {
      if (s.dim() >= 1 && s.contains_vector(lat.elements_[pts[k]].row(0))) set.set(static_cast<int>(k));
    }
    lat.point_sets_.push_back(std::move(set));
  }
  return lat;
}

SubspaceCanonical meet(const SubspaceCanonical& a, const SubspaceCanonical& b) { return a.meet(b); }

SubspaceCanonical join(const SubspaceCanonical& a, const SubspaceCanonical& b) { return a.join(b); }

std::uint64_t gaussian_binomial(std::uint64_t q, int n, int k) {
  if (k < 0 || k > n) return 0;
  // prod_{i<k} (q^{n-i} - 1) / (q^{i+1} - 1), accumulated so every step divides exactly.
  std::uint64_t result = 1;
  for (int i = 0; i < k; ++i) {
    std::uint64_t num = 1, den = 1;
    for (int e = 0; e < n - i; ++e) num *= q;
    for (int e = 0; e < i + 1; ++e) den *= q;
    result = result * (num - 1) / (den - 1);
  }
  return result;
}

FiniteLattice FiniteLattice::from_order(int size, const std::function<bool(int, int)>& leq) {
  FiniteLattice lat;
  lat.size_ = size;
  lat.leq_.resize(static_cast<std::size_t>(size) * size);
  for (int a = 0; a < size; ++a) {
    for (int b = 0; b < size; ++b) lat.leq_[a * size + b] = leq(a, b);
  }
  lat.meet_.assign(static_cast<std::size_t>(size) * size, -1);
  lat.join_.assign(static_cast<std::size_t>(size) * size, -1);
  for (int a = 0; a < size; ++a) {
    for (int b = 0; b < size; ++b) {
      int glb = -1, lub = -1;
      for (int c = 0; c < size; ++c) {
        if (lat.leq(c, a) && lat.leq(c, b) && (glb < 0 || lat.leq(glb, c))) glb = c;
        if (lat.leq(a, c) && lat.leq(b, c) && (lub < 0 || lat.leq(c, lub))) lub = c;
      }
      // Confirm the candidates dominate every bound.
      for (int c = 0; c < size; ++c) {
        if (lat.leq(c, a) && lat.leq(c, b) && !lat.leq(c, glb)) glb = -1;
        if (lat.leq(a, c) && lat.leq(b, c) && !lat.leq(lub, c)) lub = -1;
        if (glb < 0 || lub < 0) break;
      }
      if (glb < 0 || lub < 0) {
        throw Error(ErrorCode::InvalidStructure,
                    "elements " + std::to_string(a) + ", " + std::to_string(b) + " lack a meet or join");
      }
      lat.meet_[a * size + b] = glb;
      lat.join_[a * size + b] = lub;
    }
  }
  lat.bottom_ = 0;
  lat.top_ = 0;
  for (int a = 0; a < size; ++a) {
    lat.bottom_ = lat.meet(lat.bottom_, a);
    lat.top_ = lat.join(lat.top_, a);
  }
  return lat;
}

FiniteLattice FiniteLattice::from_subspaces(const SubspaceLattice& sub) {
  FiniteLattice lat;
  const int size = sub.size();
  const auto& els = sub.elements();
  lat.size_ = size;
  lat.leq_.resize(static_cast<std::size_t>(size) * size);
  lat.meet_.resize(static_cast<std::size_t>(size) * size);
  lat.join_.resize(static_cast<std::size_t>(size) * size);
  for (int a = 0; a < size; ++a) {
    for (int b = a; b < size; ++b) {
      lat.leq_[a * size + b] = els[b].contains(els[a]);
      lat.leq_[b * size + a] = els[a].contains(els[b]);
      const int m = sub.index_of(els[a].meet(els[b]));
      const int j = sub.index_of(els[a].join(els[b]));
      lat.meet_[a * size + b] = lat.meet_[b * size + a] = m;
      lat.join_[a * size + b] = lat.join_[b * size + a] = j;
    }
  }
  lat.bottom_ = 0;
  lat.top_ = size - 1;
  return lat;
}

bool FiniteLattice::covers(int a, int b) const {
  if (a == b || !leq(a, b)) return false;
  for (int c = 0; c < size_; ++c) {
    if (c != a && c != b && leq(a, c) && leq(c, b)) return false;
  }
  return true;
}

FiniteLattice pentagon_lattice() {
  // 0 = bottom, 1 = a, 2 = c, 3 = b, 4 = top; a < c.
  static const bool order[5][5] = {
      {1, 1, 1, 1, 1}, {0, 1, 1, 0, 1}, {0, 0, 1, 0, 1}, {0, 0, 0, 1, 1}, {0, 0, 0, 0, 1},
  };
  return FiniteLattice::from_order(5, [](int a, int b) { return order[a][b]; });
}

FiniteLattice chain_lattice(int length) {
  return FiniteLattice::from_order(length + 1, [](int a, int b) { return a <= b; });
}

LatticeCheck check_modular(const FiniteLattice& lat) {
  const int n = lat.size();
  for (int x = 0; x < n; ++x) {
    for (int z = 0; z < n; ++z) {
      if (!lat.leq(x, z)) continue;
      for (int y = 0; y < n; ++y) {
        if (lat.join(x, lat.meet(y, z)) != lat.meet(lat.join(x, y), z)) {
          return {false, {x, y, z}, "x v (y ^ z) != (x v y) ^ z"};
        }
      }
    }
  }
  return {};
}

LatticeCheck check_isomorphism(const FiniteLattice& from, const FiniteLattice& to, const std::vector<int>& f) {
  const int n = from.size();
  if (to.size() != n || static_cast<int>(f.size()) != n) return {false, {}, "sizes differ"};
  std::vector<char> hit(n, 0);
  for (int x = 0; x < n; ++x) {
    if (f[x] < 0 || f[x] >= n) return {false, {x}, "image out of range"};
    if (hit[f[x]]) return {false, {x}, "map is not injective"};
    hit[f[x]] = 1;
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (from.leq(x, y) && !to.leq(f[x], f[y])) return {false, {x, y}, "x <= y but f(x) !<= f(y)"};
      if (!from.leq(x, y) && to.leq(f[x], f[y])) return {false, {x, y}, "f(x) <= f(y) but x !<= y"};
    }
  }
  return {};
}

LatticeCheck check_atomic(const FiniteLattice& lat) {
  std::vector<int> atoms;
  for (int a = 0; a < lat.size(); ++a) {
    if (lat.covers(lat.bottom(), a)) atoms.push_back(a);
  }
  for (int x = 0; x < lat.size(); ++x) {
    int acc = lat.bottom();
    for (int a : atoms) {
      if (lat.leq(a, x)) acc = lat.join(acc, a);
    }
    if (acc != x) return {false, {x}, "element is not the join of the atoms below it"};
  }
  return {};
}

RankCheck check_ranked(const FiniteLattice& lat) {
  // Shortest and longest cover chains from the bottom, by dynamic programming
  // over a linear extension (elements sorted by the number of elements below).
  const int n = lat.size();
  std::vector<int> order(n);
  std::vector<int> below(n, 0);
  for (int a = 0; a < n; ++a) {
    order[a] = a;
    for (int b = 0; b < n; ++b) below[a] += lat.leq(b, a) ? 1 : 0;
  }
  std::sort(order.begin(), order.end(), [&](int a, int b) { return below[a] < below[b]; });
  std::vector<int> shortest(n, -1), longest(n, -1);
  shortest[lat.bottom()] = longest[lat.bottom()] = 0;
  for (int b : order) {
    for (int a = 0; a < n; ++a) {
      if (shortest[a] < 0 || !lat.covers(a, b)) continue;
      shortest[b] = shortest[b] < 0 ? shortest[a] + 1 : std::min(shortest[b], shortest[a] + 1);
      longest[b] = std::max(longest[b], longest[a] + 1);
    }
  }
  RankCheck out;
  out.rank = longest;
  for (int a = 0; a < n; ++a) {
    if (shortest[a] != longest[a]) {
      out.check = {false, {a}, "maximal chains below this element have lengths " + std::to_string(shortest[a]) +
                                   " and " + std::to_string(longest[a])};
      return out;
    }
  }
  return out;
}

LatticeCheck check_grassmann(const FiniteLattice& lat, const std::vector<int>& rank) {
  for (int x = 0; x < lat.size(); ++x) {
    for (int y = 0; y < lat.size(); ++y) {
      if (rank[lat.join(x, y)] + rank[lat.meet(x, y)] != rank[x] + rank[y]) {
        return {false, {x, y}, "rank(x v y) + rank(x ^ y) != rank(x) + rank(y)"};
      }
    }
  }
  return {};
}

LatticeCheck check_modular_sampled(const FiniteLattice& lat, std::uint64_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, lat.size() - 1);
  for (std::uint64_t s = 0; s < samples; ++s) {
    const int x = pick(rng);
    const int y = pick(rng);
    const int z = lat.join(x, pick(rng));
    if (lat.join(x, lat.meet(y, z)) != lat.meet(lat.join(x, y), z)) {
      return {false, {x, y, z}, "x v (y ^ z) != (x v y) ^ z"};
    }
  }
  return {};
}

LatticeCheck check_grassmann_sampled(const FiniteLattice& lat, const std::vector<int>& rank, std::uint64_t samples,
                                     std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, lat.size() - 1);
  for (std::uint64_t s = 0; s < samples; ++s) {
    const int x = pick(rng);
    const int y = pick(rng);
    if (rank[lat.join(x, y)] + rank[lat.meet(x, y)] != rank[x] + rank[y]) {
      return {false, {x, y}, "rank(x v y) + rank(x ^ y) != rank(x) + rank(y)"};
    }
  }
  return {};
}

}  // namespace schubert::incidence
