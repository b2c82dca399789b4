#pragma once

// Schubert cells BwB/B of GL_n(F_q) and their incidence structures (X_w)_{ij}.
//
// A cell is enumerated through the representatives
//   x_{i1}(c1) n_{i1}^{-1} ... x_{il}(cl) n_{il}^{-1},   c_k in F_q,
// along a reduced word of w. (X_w)_{ij} has the cosets gP_i of the cell as
// points, the cosets gP_j as lines, and (gP_i, hP_j) incident when some kB in
// the cell projects to both. Thickness is the number of points on a line;
// the formula side computes it as q^{l(z)} from w = u z v.

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "schubert/chevalley.hpp"
#include "schubert/incidence.hpp"
#include "schubert/parabolic.hpp"

namespace schubert::cells {

using chevalley::FlagCanonical;
using chevalley::MatrixGF;
using chevalley::SubspaceCanonical;
using gf::FieldPtr;
using parabolic::ParabolicFactorization;
using rootsys::RootSystemPtr;
using rootsys::WeylElement;
using rootsys::Word;

inline constexpr std::uint64_t kDefaultCellGuard = 10'000'000;

struct CellPoint {
  std::vector<std::uint32_t> params;  // field codes c_1..c_l
  MatrixGF matrix;
  FlagCanonical borel_key;

  bool operator==(const CellPoint&) const = default;
};

/// q^{l(w)} cell points along w's canonical word, parameters in lexicographic
/// order (c_1 most significant). w must be in type A_{n-1}.
std::vector<CellPoint> enumerate_cell(const WeylElement& w, const FieldPtr& field, int n,
                                      std::uint64_t guard = kDefaultCellGuard);

/// Same, along a caller-chosen reduced word of w.
std::vector<CellPoint> enumerate_cell_along(const WeylElement& w, const Word& word, const FieldPtr& field, int n,
                                            std::uint64_t guard = kDefaultCellGuard);

struct SchubertIncidence {
  WeylElement w;
  int i;
  int j;
  ParabolicFactorization factorization;
  /// u-word ++ z-word ++ v-word; the cell is enumerated along it.
  Word word;
  std::vector<CellPoint> cell;
  /// Sorted distinct keys.
  std::vector<SubspaceCanonical> points;
  std::vector<SubspaceCanonical> lines;
  /// (point index, line index) of each cell point, aligned with `cell`.
  std::vector<std::pair<int, int>> cell_keys;
  incidence::IncidenceStructure structure;
  /// Points incident with each line, aligned with `lines`.
  std::vector<int> per_line_counts;

  int point_index(const SubspaceCanonical& key) const;  // -1 when absent
  int line_index(const SubspaceCanonical& key) const;   // -1 when absent
};

SchubertIncidence build_incidence(const WeylElement& w, int i, int j, const FieldPtr& field, int n,
                                  std::uint64_t guard = kDefaultCellGuard);

/// q^{l(z)}; valid for every root system type. Throws InvalidQ unless q is a prime power.
std::uint64_t thickness_formula(const WeylElement& w, int i, int j, std::uint64_t q);

struct TheoremReport {
  std::string w;  // canonical word
  int i = 0;
  int j = 0;
  std::uint32_t q = 0;
  int n = 0;
  std::uint64_t formula = 0;
  std::size_t lines = 0;
  std::size_t points = 0;
  std::size_t incidences = 0;
  int length_z = 0;
  /// Points-per-line value -> number of lines with that count.
  std::map<int, int> observed;
  std::vector<std::string> violating_lines;
  bool all_agree = false;

  bool operator==(const TheoremReport&) const = default;
};

TheoremReport verify_theorem(const WeylElement& w, int i, int j, const FieldPtr& field, int n,
                             std::uint64_t guard = kDefaultCellGuard);
TheoremReport verify_theorem(const SchubertIncidence& inc);

struct FiberReport {
  /// p_i of the cell points over the line, sorted.
  std::vector<SubspaceCanonical> points;
  /// The z-slice (d_1..d_r) of the parameters reaching each point, aligned with points.
  std::vector<std::vector<std::uint32_t>> z_params;
  std::uint64_t expected = 0;  // q^{l(z)}
  /// Each point is reached by exactly one z-slice.
  bool well_defined = true;
  /// Distinct points carry distinct z-slices.
  bool injective = true;
  /// All cell points over the line share the same u-slice.
  bool u_slice_constant = true;

  bool bijective() const { return well_defined && injective && points.size() == expected; }
};

/// p_i^w((p_j^w)^{-1}(line)). Throws LineNotInStructure.
FiberReport fiber_points(const SubspaceCanonical& line, const SchubertIncidence& inc);
FiberReport fiber_points(const SubspaceCanonical& line, const WeylElement& w, int i, int j, const FieldPtr& field,
                         int n, std::uint64_t guard = kDefaultCellGuard);

struct ThinTriple {
  WeylElement w;
  int i;
  int j;
  int length_z;
  std::uint64_t thickness;

  bool operator==(const ThinTriple& rhs) const {
    return w == rhs.w && i == rhs.i && j == rhs.j && length_z == rhs.length_z && thickness == rhs.thickness;
  }
};

/// Triples (w, i, j), i != j, with q^{l(z)} <= 2, ordered by w then i then j.
std::vector<ThinTriple> thin_census(const RootSystemPtr& sys, std::uint64_t q,
                                    std::uint64_t guard = rootsys::kDefaultGroupGuard);

/// Same selection made from observed per-line maxima in GL_n(F_q).
std::vector<ThinTriple> brute_thin_census(const FieldPtr& field, int n, std::uint64_t guard = kDefaultCellGuard);

/// Representatives x_{i1}(c1) n_{i1}^{-1} ... over u in W^k of every coset gP_k.
class CosetRepresentatives {
 public:
  CosetRepresentatives(const FieldPtr& field, int n, int k, std::uint64_t guard = kDefaultCellGuard);

  int k() const { return k_; }
  std::size_t size() const { return reps_.size(); }
  /// Throws KeyNotFound.
  const MatrixGF& representative(const SubspaceCanonical& key) const;

 private:
  int k_;
  std::unordered_map<SubspaceCanonical, MatrixGF, chevalley::SubspaceHash> reps_;
};

/// g h^{-1} in B for the canonical representatives g of the point and h of the line.
/// Throws KeyNotFound when either key is not in the structure.
bool incidence_ratio_test(const SubspaceCanonical& point, const SubspaceCanonical& line, const SchubertIncidence& inc,
                          const CosetRepresentatives& point_reps, const CosetRepresentatives& line_reps);

struct ShortcutCounterexample {
  SubspaceCanonical point;
  SubspaceCanonical line;
  bool existential;
  bool shortcut;
  MatrixGF g;
  MatrixGF h;

  bool operator==(const ShortcutCounterexample&) const = default;
};

struct ShortcutReport {
  std::string w;
  int i = 0;
  int j = 0;
  std::size_t pairs_checked = 0;
  std::size_t agreements = 0;
  std::vector<ShortcutCounterexample> counterexamples;

  bool agrees() const { return counterexamples.empty(); }
  bool operator==(const ShortcutReport&) const = default;
};

/// Compares the ratio test with existential incidence on every point x line pair.
ShortcutReport validate_incidence_shortcut(const WeylElement& w, int i, int j, const FieldPtr& field, int n,
                                           std::uint64_t guard = kDefaultCellGuard);

}  // namespace schubert::cells
