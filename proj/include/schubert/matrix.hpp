#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "schubert/gf.hpp"

namespace schubert::chevalley {

using gf::FieldElement;
using gf::FieldPtr;

/// Square matrix over GF(q). Entries are raw field codes; indices are 0-based.
class MatrixGF {
 public:
  /// Zero matrix.
  MatrixGF(FieldPtr field, int n);
  MatrixGF(FieldPtr field, int n, std::vector<std::uint32_t> codes);

  static MatrixGF identity(const FieldPtr& field, int n);

  const FieldPtr& field() const { return field_; }
  int n() const { return n_; }

  std::uint32_t code(int r, int c) const { return a_[r * n_ + c]; }
  void set_code(int r, int c, std::uint32_t v) { a_[r * n_ + c] = v; }
  FieldElement entry(int r, int c) const { return {field_, code(r, c)}; }
  void set(int r, int c, const FieldElement& v);
  const std::vector<std::uint32_t>& codes() const { return a_; }

  std::vector<std::uint32_t> column(int c) const;

  MatrixGF operator*(const MatrixGF& rhs) const;
  bool operator==(const MatrixGF& rhs) const;

  FieldElement determinant() const;
  bool is_invertible() const { return !determinant().is_zero(); }
  /// Throws SingularMatrix.
  MatrixGF inverse() const;

  /// Row-major strings of the entries.
  std::vector<std::vector<std::string>> to_strings() const;

 private:
  void check_same(const MatrixGF& rhs) const;

  FieldPtr field_;
  int n_;
  std::vector<std::uint32_t> a_;
};

}  // namespace schubert::chevalley
