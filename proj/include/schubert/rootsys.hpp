#pragma once

// Crystallographic root systems built from Cartan data, and their Weyl groups.
//
// Roots are integer vectors in simple-root coordinates. A Weyl element is
// stored by its action on the simple roots; equality is equality of that
// action. Every element also carries its canonical reduced word, the
// lexicographically smallest reduced word (simple indices are 1-based).

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace schubert::rootsys {

using Root = std::vector<int>;
using Word = std::vector<int>;

inline constexpr std::uint64_t kDefaultGroupGuard = 1'000'000;

class RootSystem;
using RootSystemPtr = std::shared_ptr<const RootSystem>;

enum class Family { A, B, C, D, G, F };

class RootSystem {
  struct Private {};

 public:
  /// type_label is one of "A", "B", "C", "D", "G2"/"G", "F4"/"F".
  static RootSystemPtr make(std::string_view type_label, int rank);

  RootSystem(Private, Family family, int rank, std::vector<int> cartan);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  /// "A3", "G2", ...
  std::string label() const;

  /// Cartan entry a_ij = <alpha_i^vee, alpha_j>, 1-based; s_i(alpha_j) = alpha_j - a_ij alpha_i.
  int cartan(int i, int j) const { return cartan_[(i - 1) * rank_ + (j - 1)]; }
  /// Order of s_i s_j.
  int coxeter_m(int i, int j) const;

  /// Ordered by height, then by coordinates in descending lexicographic order
  /// (so alpha_1, ..., alpha_n come first).
  const std::vector<Root>& positive_roots() const { return positive_; }
  /// Index into positive_roots(), or -1.
  int positive_index(const Root& r) const;
  Root simple_root(int i) const;

  /// s_i applied to a root.
  Root reflect(int i, const Root& r) const;

  /// |W| from the standard order formula for the family.
  std::uint64_t weyl_order() const;

  bool same_as(const RootSystem& other) const;

 private:
  Family family_;
  int rank_;
  std::vector<int> cartan_;
  std::vector<Root> positive_;
};

bool is_positive(const Root& r);
bool is_negative(const Root& r);
int height(const Root& r);

class WeylElement {
 public:
  static WeylElement identity(const RootSystemPtr& sys);
  /// s_i; throws IndexOutOfRange unless 1 <= i <= rank.
  static WeylElement simple(const RootSystemPtr& sys, int i);
  /// Product s_{w[0]} s_{w[1]} ...; the word need not be reduced.
  static WeylElement from_word(const RootSystemPtr& sys, const Word& word);

  const RootSystemPtr& system() const { return sys_; }
  int rank() const { return rank_; }

  /// Column c (0-based) is the image of alpha_{c+1}; row-major storage.
  const std::vector<int>& action() const { return action_; }
  const Word& word() const { return word_; }
  int length() const { return static_cast<int>(word_.size()); }
  bool is_identity() const { return word_.empty(); }

  Root apply(const Root& r) const;
  WeylElement operator*(const WeylElement& rhs) const;
  WeylElement inverse() const;

  /// {alpha in R+ : w(alpha) in -R+}, in root order.
  std::vector<Root> inversion_set() const;
  std::vector<int> inversion_indices() const;

  /// l(w s_i) < l(w)
  bool has_right_descent(int i) const;
  /// l(s_i w) < l(w)
  bool has_left_descent(int i) const;

  bool operator==(const WeylElement& rhs) const;
  /// Orders by length, then canonical word.
  std::strong_ordering operator<=>(const WeylElement& rhs) const;

 private:
  WeylElement(RootSystemPtr sys, std::vector<int> action);
  void check_same(const WeylElement& rhs) const;

  RootSystemPtr sys_;
  int rank_;
  std::vector<int> action_;
  Word word_;
};

/// Lexicographically smallest reduced word of w (peels the smallest left descent).
Word canonical_reduced_word(const WeylElement& w);

/// Every element of W once, ordered by length then canonical word.
std::vector<WeylElement> weyl_enumerate(const RootSystemPtr& sys,
                                        std::uint64_t guard = kDefaultGroupGuard);

/// The subgroup generated by the listed simple reflections, same order as weyl_enumerate.
std::vector<WeylElement> enumerate_subgroup(const RootSystemPtr& sys, const std::vector<int>& generators,
                                            std::uint64_t guard = kDefaultGroupGuard);

/// "1 3 2"; the identity renders as "".
std::string format_word(const Word& word);
/// Inverse of format_word. Throws ParseError naming the offending token position
/// when an index is malformed or outside 1..rank.
Word parse_word(std::string_view text, int rank);

}  // namespace schubert::rootsys
