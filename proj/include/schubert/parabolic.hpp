#pragma once

// Standard parabolic subgroups W_J of a Weyl group, their minimal left coset
// representatives, and the factorization w = u z v with u in W^j,
// z in (W_j)^{i,j}, v in W_{i,j}.
//
// Subgroups are named by the simple indices they OMIT: W_i is generated by
// every s_k with k != i, and W_{i,j} by every s_k with k not in {i, j}.

#include <cstdint>
#include <vector>

#include "schubert/rootsys.hpp"

namespace schubert::parabolic {

using rootsys::Root;
using rootsys::RootSystemPtr;
using rootsys::WeylElement;
using rootsys::Word;

class ParabolicIndexSet {
 public:
  /// Omitting nothing gives W itself.
  ParabolicIndexSet(RootSystemPtr sys, std::vector<int> omitted);

  static ParabolicIndexSet whole(const RootSystemPtr& sys) { return {sys, {}}; }
  static ParabolicIndexSet maximal(const RootSystemPtr& sys, int i) { return {sys, {i}}; }
  static ParabolicIndexSet pair(const RootSystemPtr& sys, int i, int j) { return {sys, {i, j}}; }

  const RootSystemPtr& system() const { return sys_; }
  const std::vector<int>& omitted() const { return omitted_; }
  /// Simple indices generating W_J, ascending.
  std::vector<int> generators() const;
  bool is_generator(int k) const;

  /// Positive roots supported on the generators, in root order.
  std::vector<Root> positive_roots() const;
  bool contains_root(const Root& r) const;

  /// True iff w lies in W_J (its canonical word avoids the omitted indices).
  bool contains(const WeylElement& w) const;

 private:
  RootSystemPtr sys_;
  std::vector<int> omitted_;
};

std::vector<Root> positive_roots_of(const ParabolicIndexSet& pi);

struct CosetSplit {
  WeylElement u;  // minimal representative of u W_J
  WeylElement y;  // element of W_J
};

/// w = u y with u minimal in u W_J and l(w) = l(u) + l(y).
CosetSplit min_coset_rep(const WeylElement& w, const ParabolicIndexSet& pi);

/// True iff inversion_set(w) avoids the positive roots of pi.
bool is_min_coset_rep(const WeylElement& w, const ParabolicIndexSet& pi);

/// Minimal representatives of the left cosets of the small parabolic inside the
/// big one, ordered by length then canonical word. Requires big.omitted ⊆ small.omitted.
std::vector<WeylElement> quotient_reps(const ParabolicIndexSet& big, const ParabolicIndexSet& small,
                                       std::uint64_t guard = rootsys::kDefaultGroupGuard);

/// Every element of W_J, ordered by length then canonical word.
std::vector<WeylElement> parabolic_elements(const ParabolicIndexSet& pi,
                                            std::uint64_t guard = rootsys::kDefaultGroupGuard);

struct ParabolicFactorization {
  WeylElement u;
  WeylElement z;
  WeylElement v;
  int i;
  int j;

  /// u-word ++ z-word ++ v-word; a reduced word for u z v.
  Word combined_word() const;
};

/// Unique w = u z v; throws IndexError unless i != j and both lie in 1..rank.
ParabolicFactorization factorize_uzv(const WeylElement& w, int i, int j);

}  // namespace schubert::parabolic
