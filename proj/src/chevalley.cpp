#include "schubert/chevalley.hpp"

#include "schubert/error.hpp"

namespace schubert::chevalley {

namespace {

void check_index(int n, int i, int lo, int hi, const char* what) {
  if (i < lo || i > hi) {
    throw Error(ErrorCode::IndexError, std::string(what) + " index " + std::to_string(i) + " outside " +
                                           std::to_string(lo) + ".." + std::to_string(hi) + " (n = " +
                                           std::to_string(n) + ")");
  }
}

}  // namespace

MatrixGF x_root(const FieldPtr& field, int n, int i, int j, const FieldElement& c) {
  check_index(n, i, 1, n, "row");
  check_index(n, j, 1, n, "column");
  if (i == j) throw Error(ErrorCode::IndexError, "root element needs i != j");
  auto m = MatrixGF::identity(field, n);
  m.set(i - 1, j - 1, c);
  return m;
}

MatrixGF x_simple(const FieldPtr& field, int n, int i, const FieldElement& c) {
  check_index(n, i, 1, n - 1, "simple");
  return x_root(field, n, i, i + 1, c);
}

MatrixGF n_simple(const FieldPtr& field, int n, int i) {
  check_index(n, i, 1, n - 1, "simple");
  const auto one = FieldElement::one(field);
  return x_root(field, n, i, i + 1, one) * x_root(field, n, i + 1, i, -one) * x_root(field, n, i, i + 1, one);
}

MatrixGF n_simple_inv(const FieldPtr& field, int n, int i) {
  // n_i^{-1} = x_{alpha_i}(-1) x_{-alpha_i}(1) x_{alpha_i}(-1)
  check_index(n, i, 1, n - 1, "simple");
  const auto one = FieldElement::one(field);
  return x_root(field, n, i, i + 1, -one) * x_root(field, n, i + 1, i, one) * x_root(field, n, i, i + 1, -one);
}

MatrixGF weyl_representative(const FieldPtr& field, int n, const rootsys::Word& word) {
  auto m = MatrixGF::identity(field, n);
  for (int i : word) m = m * n_simple(field, n, i);
  return m;
}

MatrixGF torus(const FieldPtr& field, const std::vector<int>& cocharacter, const FieldElement& d) {
  if (d.is_zero()) throw Error(ErrorCode::DivisionByZero, "torus parameter must be nonzero");
  const int n = static_cast<int>(cocharacter.size());
  MatrixGF m(field, n);
  const std::uint64_t order = field->q() - 1;
  for (int k = 0; k < n; ++k) {
    const long long e = cocharacter[k];
    const auto exponent = static_cast<std::uint64_t>(((e % static_cast<long long>(order)) + order) % order);
    m.set(k, k, d.pow(exponent));
  }
  return m;
}

bool is_in_borel(const MatrixGF& g) {
  const int n = g.n();
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < r; ++c) {
      if (g.code(r, c) != 0) return false;
    }
  }
  return g.is_invertible();
}

bool is_in_parabolic(const MatrixGF& g, int i) {
  const int n = g.n();
  check_index(n, i, 1, n, "parabolic");
  for (int r = i; r < n; ++r) {
    for (int c = 0; c < i; ++c) {
      if (g.code(r, c) != 0) return false;
    }
  }
  return g.is_invertible();
}

SubspaceCanonical coset_key_parabolic(const MatrixGF& g, int i) {
  const int n = g.n();
  check_index(n, i, 0, n, "parabolic");
  std::vector<Vector> cols;
  cols.reserve(i);
  for (int c = 0; c < i; ++c) cols.push_back(g.column(c));
  return SubspaceCanonical::span(g.field(), n, cols);
}

FlagCanonical coset_key_borel(const MatrixGF& g) {
  FlagCanonical flag;
  for (int k = 1; k < g.n(); ++k) flag.chain.push_back(coset_key_parabolic(g, k));
  return flag;
}

FlagCanonical standard_flag(const FieldPtr& field, int n) {
  return coset_key_borel(MatrixGF::identity(field, n));
}

}  // namespace schubert::chevalley
