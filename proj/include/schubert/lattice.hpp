#pragma once

// The subspace lattice of GF(q)^n, materialized, plus an index-based finite
// lattice type on which the modular/atomic/ranked/Grassmann checks run.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "schubert/subspace.hpp"

namespace schubert::incidence {

using chevalley::SubspaceCanonical;
using chevalley::Vector;
using gf::FieldPtr;

inline constexpr std::uint64_t kDefaultLatticeGuard = 10'000'000;

/// Fixed-size bitset over point indices.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(int size) : size_(size), words_((size + 63) / 64, 0) {}

  int size() const { return size_; }
  void set(int k) { words_[k / 64] |= std::uint64_t{1} << (k % 64); }
  void reset(int k) { words_[k / 64] &= ~(std::uint64_t{1} << (k % 64)); }
  bool test(int k) const { return (words_[k / 64] >> (k % 64)) & 1; }
  int count() const;
  int intersection_count(const PointSet& other) const;
  PointSet& operator|=(const PointSet& other);
  bool operator==(const PointSet& other) const = default;
  auto operator<=>(const PointSet& other) const = default;
  std::vector<int> members() const;

 private:
  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

class SubspaceLattice {
 public:
  const FieldPtr& field() const { return field_; }
  int n() const { return n_; }

  /// Every subspace, ordered by dimension then echelon codes.
  const std::vector<SubspaceCanonical>& elements() const { return elements_; }
  int size() const { return static_cast<int>(elements_.size()); }
  /// Index of s in elements(); throws KeyNotFound.
  int index_of(const SubspaceCanonical& s) const;
  bool contains(const SubspaceCanonical& s) const { return index_.count(s) > 0; }

  /// Element indices of dimension d, ascending.
  const std::vector<int>& of_dim(int d) const { return by_dim_[d]; }
  /// Projective points (dimension 1 subspaces), as element indices.
  const std::vector<int>& points() const { return by_dim_[1]; }
  /// Position of an element inside points(), or -1.
  int point_position(int element) const;
  /// Points contained in element e, as positions in points().
  const PointSet& points_in(int element) const { return point_sets_[element]; }

 private:
  friend SubspaceLattice lattice_make(const FieldPtr& field, int n, std::uint64_t guard);

  FieldPtr field_;
  int n_ = 0;
  std::vector<SubspaceCanonical> elements_;
  std::unordered_map<SubspaceCanonical, int, chevalley::SubspaceHash> index_;
  std::vector<std::vector<int>> by_dim_;
  std::vector<int> point_position_;
  std::vector<PointSet> point_sets_;
};

/// All subspaces of GF(q)^n via enumeration of echelon patterns. Throws TooLarge when q^n > guard.
SubspaceLattice lattice_make(const FieldPtr& field, int n, std::uint64_t guard = kDefaultLatticeGuard);

SubspaceCanonical meet(const SubspaceCanonical& a, const SubspaceCanonical& b);
SubspaceCanonical join(const SubspaceCanonical& a, const SubspaceCanonical& b);

/// Number of k-dimensional subspaces of GF(q)^n.
std::uint64_t gaussian_binomial(std::uint64_t q, int n, int k);

/// A finite lattice on 0..size-1 with precomputed order, meet and join tables.
class FiniteLattice {
 public:
  /// Builds the tables from an order relation; throws if some pair lacks a meet or join.
  static FiniteLattice from_order(int size, const std::function<bool(int, int)>& leq);
  static FiniteLattice from_subspaces(const SubspaceLattice& lat);

  int size() const { return size_; }
  bool leq(int a, int b) const { return leq_[a * size_ + b]; }
  int meet(int a, int b) const { return meet_[a * size_ + b]; }
  int join(int a, int b) const { return join_[a * size_ + b]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }
  /// True iff b covers a.
  bool covers(int a, int b) const;

 private:
  int size_ = 0;
  int bottom_ = 0;
  int top_ = 0;
  std::vector<char> leq_;
  std::vector<int> meet_;
  std::vector<int> join_;
};

/// The pentagon N5: 0 < a < c < 1 and 0 < b < 1.
FiniteLattice pentagon_lattice();
/// The chain 0 < 1 < ... < length.
FiniteLattice chain_lattice(int length);

struct LatticeCheck {
  bool ok = true;
  /// Offending elements, when !ok.
  std::vector<int> witness;
  std::string detail;

  bool operator==(const LatticeCheck&) const = default;
};

/// x v (y ^ z) = (x v y) ^ z for every triple with x <= z.
LatticeCheck check_modular(const FiniteLattice& lat);
/// Every element is the join of the atoms below it.
LatticeCheck check_atomic(const FiniteLattice& lat);

struct RankCheck {
  LatticeCheck check;
  /// Length of any maximal chain from bottom to each element (valid when ok).
  std::vector<int> rank;
};

/// All maximal chains have equal length.
RankCheck check_ranked(const FiniteLattice& lat);

/// rank(x v y) + rank(x ^ y) = rank(x) + rank(y) over every pair.
LatticeCheck check_grassmann(const FiniteLattice& lat, const std::vector<int>& rank);

/// f (f[x] is the image of x) is a bijection with x <= y exactly when
/// f[x] <= f[y]; order preservation alone is not enough.
LatticeCheck check_isomorphism(const FiniteLattice& from, const FiniteLattice& to, const std::vector<int>& f);

/// check_modular on `samples` random triples x <= z, y drawn from a seeded generator.
LatticeCheck check_modular_sampled(const FiniteLattice& lat, std::uint64_t samples, std::uint64_t seed);

/// check_grassmann on `samples` random pairs drawn from a seeded generator.
LatticeCheck check_grassmann_sampled(const FiniteLattice& lat, const std::vector<int>& rank, std::uint64_t samples,
                                     std::uint64_t seed);

}  // namespace schubert::incidence
