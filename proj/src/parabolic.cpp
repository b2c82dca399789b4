#include "schubert/parabolic.hpp"

#include <algorithm>

#include "schubert/error.hpp"

namespace schubert::parabolic {

ParabolicIndexSet::ParabolicIndexSet(RootSystemPtr sys, std::vector<int> omitted)
    : sys_(std::move(sys)), omitted_(std::move(omitted)) {
  std::sort(omitted_.begin(), omitted_.end());
  omitted_.erase(std::unique(omitted_.begin(), omitted_.end()), omitted_.end());
  for (int k : omitted_) {
    if (k < 1 || k > sys_->rank()) {
      throw Error(ErrorCode::IndexError,
                  "omitted index " + std::to_string(k) + " outside 1.." + std::to_string(sys_->rank()));
    }
  }
}

bool ParabolicIndexSet::is_generator(int k) const {
  return !std::binary_search(omitted_.begin(), omitted_.end(), k);
}

std::vector<int> ParabolicIndexSet::generators() const {
  std::vector<int> out;
  for (int k = 1; k <= sys_->rank(); ++k) {
    if (is_generator(k)) out.push_back(k);
  }
  return out;
}

bool ParabolicIndexSet::contains_root(const Root& r) const {
  for (int k : omitted_) {
    if (r[k - 1] != 0) return false;
  }
  return true;
}

std::vector<Root> ParabolicIndexSet::positive_roots() const {
  std::vector<Root> out;
  for (const auto& r : sys_->positive_roots()) {
    if (contains_root(r)) out.push_back(r);
  }
  return out;
}

bool ParabolicIndexSet::contains(const WeylElement& w) const {
  return std::all_of(w.word().begin(), w.word().end(), [&](int k) { return is_generator(k); });
}

std::vector<Root> positive_roots_of(const ParabolicIndexSet& pi) { return pi.positive_roots(); }

bool is_min_coset_rep(const WeylElement& w, const ParabolicIndexSet& pi) {
  for (const auto& r : w.inversion_set()) {
    if (pi.contains_root(r)) return false;
  }
  return true;
}

CosetSplit min_coset_rep(const WeylElement& w, const ParabolicIndexSet& pi) {
  const auto& sys = w.system();
  WeylElement u = w;
  Word y_word;  // built right to left
  const auto gens = pi.generators();
  for (;;) {
    auto it = std::find_if(gens.begin(), gens.end(), [&](int k) { return u.has_right_descent(k); });
    if (it == gens.end()) break;
    u = u * WeylElement::simple(sys, *it);
    y_word.insert(y_word.begin(), *it);
  }
  return {u, WeylElement::from_word(sys, y_word)};
}

std::vector<WeylElement> parabolic_elements(const ParabolicIndexSet& pi, std::uint64_t guard) {
  return rootsys::enumerate_subgroup(pi.system(), pi.generators(), guard);
}

std::vector<WeylElement> quotient_reps(const ParabolicIndexSet& big, const ParabolicIndexSet& small,
                                       std::uint64_t guard) {
  if (!big.system()->same_as(*small.system())) {
    throw Error(ErrorCode::SystemMismatch, "parabolics from different root systems");
  }
  if (!std::includes(small.omitted().begin(), small.omitted().end(), big.omitted().begin(),
                     big.omitted().end())) {
    throw Error(ErrorCode::NotNested, "small parabolic is not contained in the big one");
  }
  std::vector<WeylElement> out;
  for (auto& w : parabolic_elements(big, guard)) {
    if (is_min_coset_rep(w, small)) out.push_back(std::move(w));
  }
  return out;
}

Word ParabolicFactorization::combined_word() const {
  Word out = u.word();
  out.insert(out.end(), z.word().begin(), z.word().end());
  out.insert(out.end(), v.word().begin(), v.word().end());
  return out;
}

ParabolicFactorization factorize_uzv(const WeylElement& w, int i, int j) {
  const int rank = w.rank();
  if (i < 1 || i > rank || j < 1 || j > rank) {
    throw Error(ErrorCode::IndexError, "parabolic indices (" + std::to_string(i) + ", " + std::to_string(j) +
                                           ") outside 1.." + std::to_string(rank));
  }
  if (i == j) throw Error(ErrorCode::IndexError, "parabolic indices must differ, got i = j = " + std::to_string(i));
  const auto& sys = w.system();
  auto [u, y] = min_coset_rep(w, ParabolicIndexSet::maximal(sys, j));
  auto [z, v] = min_coset_rep(y, ParabolicIndexSet::pair(sys, i, j));
  return {std::move(u), std::move(z), std::move(v), i, j};
}

}  // namespace schubert::parabolic
