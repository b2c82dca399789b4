#pragma once

// Ovoid conditions on a set O of projective points of GF(q)^n:
//   O1: every line (2-dim subspace) contains at most 2 points of O;
//   O2: for each p in O, the points on the tangent lines through p are
//       exactly the points of one hyperplane (codimension-1 subspace).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "schubert/lattice.hpp"

namespace schubert::incidence {

/// Lines through p meeting O only in p. Throws PointNotInSet when p is not in O.
std::vector<SubspaceCanonical> tangent_lines(const std::vector<SubspaceCanonical>& O, const SubspaceCanonical& p,
                                             const SubspaceLattice& lat);

struct OvoidReport {
  bool o1 = true;
  /// A line holding 3 or more points of O.
  std::optional<SubspaceCanonical> o1_witness;
  bool o2 = true;
  /// A point of O whose tangent lines do not sweep out a hyperplane.
  std::optional<SubspaceCanonical> o2_witness;
  std::string o2_detail;
  /// Tangent-line count at each point of O, in input order.
  std::vector<int> tangent_counts;

  bool is_ovoid() const { return o1 && o2; }
  bool operator==(const OvoidReport&) const = default;
};

/// Checks O1 and O2. Every member of O must be a 1-dim subspace of lat's space.
OvoidReport check_ovoid(const std::vector<SubspaceCanonical>& O, const SubspaceLattice& lat);

struct OvoidSearchResult {
  /// Nonempty point sets passing O1 and O2, each sorted, in discovery order.
  std::vector<std::vector<SubspaceCanonical>> ovoids;
  /// Number of nonempty O1-sets (caps) visited.
  std::uint64_t caps_visited = 0;
  /// Size of the largest cap seen.
  int largest_cap = 0;
};

/// Backtracking over point sets in increasing point order, pruned by O1; O2
/// is checked at every node. max_results = 0 means unlimited.
OvoidSearchResult search_ovoids(const SubspaceLattice& lat, std::size_t max_results = 0);

}  // namespace schubert::incidence
