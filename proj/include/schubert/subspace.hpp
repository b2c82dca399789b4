#pragma once

// Subspaces of GF(q)^n keyed by their reduced row echelon basis. Two
// subspaces are equal exactly when their keys are bit-identical, which is
// what makes them usable as canonical names for cosets gP_k and gB.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "schubert/gf.hpp"

namespace schubert::chevalley {

using gf::FieldPtr;
using Vector = std::vector<std::uint32_t>;

class SubspaceCanonical {
 public:
  /// Span of the given vectors (each of length n).
  static SubspaceCanonical span(const FieldPtr& field, int n, const std::vector<Vector>& vectors);
  static SubspaceCanonical zero(const FieldPtr& field, int n);
  static SubspaceCanonical whole(const FieldPtr& field, int n);

  const FieldPtr& field() const { return field_; }
  int n() const { return n_; }
  int dim() const { return dim_; }
  /// Echelon row r (0-based), length n.
  Vector row(int r) const;
  std::vector<Vector> basis() const;
  const std::vector<std::uint32_t>& codes() const { return rows_; }
  std::vector<int> pivots() const;

  bool contains_vector(const Vector& v) const;
  bool contains(const SubspaceCanonical& other) const;

  SubspaceCanonical join(const SubspaceCanonical& other) const;
  SubspaceCanonical meet(const SubspaceCanonical& other) const;
  /// {x : <b, x> = 0 for all b in this}, standard dot product.
  SubspaceCanonical annihilator() const;

  /// Echelon rows joined by ';', entries by ','.
  std::string to_string() const;

  bool operator==(const SubspaceCanonical& rhs) const;
  /// Orders by dimension, then echelon codes.
  std::strong_ordering operator<=>(const SubspaceCanonical& rhs) const;

  std::size_t hash() const;

 private:
  SubspaceCanonical(FieldPtr field, int n, int dim, std::vector<std::uint32_t> rows)
      : field_(std::move(field)), n_(n), dim_(dim), rows_(std::move(rows)) {}
  void check_same(const SubspaceCanonical& rhs) const;

  FieldPtr field_;
  int n_;
  int dim_;
  std::vector<std::uint32_t> rows_;  // dim x n, row-major
};

/// Nested subspaces of dimensions 1..n-1.
struct FlagCanonical {
  std::vector<SubspaceCanonical> chain;

  bool operator==(const FlagCanonical& rhs) const = default;
  std::strong_ordering operator<=>(const FlagCanonical& rhs) const;
  bool is_nested() const;
};

/// Reduces rows (row-major, `count` rows of length n) to reduced row echelon
/// form in place and returns the rank; nonzero rows come first.
int reduce_rows(const gf::Field& field, std::vector<std::uint32_t>& rows, int count, int n);

struct SubspaceHash {
  std::size_t operator()(const SubspaceCanonical& s) const { return s.hash(); }
};

}  // namespace schubert::chevalley
