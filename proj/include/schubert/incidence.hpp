#pragma once

// Point-line incidence structures (P, L, I) with I ⊆ P x L, and the
// projective incidence axioms (a)-(e).

#include <string>
#include <utility>
#include <vector>

#include "schubert/lattice.hpp"

namespace schubert::incidence {

/// Points and lines are indices 0..num_points-1 and 0..num_lines-1; labels are optional.
class IncidenceStructure {
 public:
  IncidenceStructure() = default;
  /// Deduplicates and sorts the pairs; throws InvalidStructure on an out-of-range pair.
  IncidenceStructure(int num_points, int num_lines, std::vector<std::pair<int, int>> incidences);

  int num_points() const { return num_points_; }
  int num_lines() const { return num_lines_; }
  /// Sorted (point, line) pairs.
  const std::vector<std::pair<int, int>>& incidences() const { return incidences_; }
  bool incident(int point, int line) const;
  const std::vector<int>& points_on(int line) const { return points_on_[line]; }
  const std::vector<int>& lines_through(int point) const { return lines_through_[point]; }

  std::vector<std::string> point_labels;
  std::vector<std::string> line_labels;

 private:
  int num_points_ = 0;
  int num_lines_ = 0;
  std::vector<std::pair<int, int>> incidences_;
  std::vector<std::vector<int>> points_on_;
  std::vector<std::vector<int>> lines_through_;
};

struct AxiomResult {
  bool pass = true;
  std::string witness;

  bool operator==(const AxiomResult&) const = default;
};

struct ProjectiveAxiomsReport {
  AxiomResult a;  // two distinct points lie on exactly one line
  AxiomResult b;  // Veblen-Young
  AxiomResult c;  // every line has at least 3 points
  AxiomResult d;  // three noncollinear points exist
  AxiomResult e;  // finite dimensionality; always true for finite structures

  bool all_pass() const { return a.pass && b.pass && c.pass && d.pass && e.pass; }
  bool operator==(const ProjectiveAxiomsReport&) const = default;
};

/// Veblen-Young is read as: if p1, p2, p3 are noncollinear and a line meets
/// l(p1,p3) and l(p2,p3) in two distinct points, it meets l(p1,p2). It needs
/// (a) to name the lines l(p, p'), so it is reported failed whenever (a) fails.
ProjectiveAxiomsReport check_projective_axioms(const IncidenceStructure& inc);

/// Rank-1 elements as points, rank-2 elements as lines, inclusion as incidence.
IncidenceStructure projective_structure(const SubspaceLattice& lat);

}  // namespace schubert::incidence
