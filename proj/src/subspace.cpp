#include "schubert/subspace.hpp"

#include <sstream>

#include "schubert/error.hpp"

namespace schubert::chevalley {

int reduce_rows(const gf::Field& f, std::vector<std::uint32_t>& m, int count, int n) {
  int rank = 0;
  for (int col = 0; col < n && rank < count; ++col) {
    int pivot = -1;
    for (int r = rank; r < count; ++r) {
      if (m[r * n + col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) {
      for (int c = 0; c < n; ++c) std::swap(m[pivot * n + c], m[rank * n + c]);
    }
    const std::uint32_t pinv = f.inv(m[rank * n + col]);
    for (int c = col; c < n; ++c) m[rank * n + c] = f.mul(m[rank * n + c], pinv);
    for (int r = 0; r < count; ++r) {
      if (r == rank) continue;
      const std::uint32_t factor = m[r * n + col];
      if (factor == 0) continue;
      for (int c = col; c < n; ++c) m[r * n + c] = f.sub(m[r * n + c], f.mul(factor, m[rank * n + c]));
    }
    ++rank;
  }
  return rank;
}

SubspaceCanonical SubspaceCanonical::span(const FieldPtr& field, int n, const std::vector<Vector>& vectors) {
  std::vector<std::uint32_t> m;
  m.reserve(vectors.size() * n);
  for (const auto& v : vectors) {
    if (static_cast<int>(v.size()) != n) {
      throw Error(ErrorCode::IndexError, "vector of length " + std::to_string(v.size()) + " in F^" +
                                             std::to_string(n));
    }
    for (auto x : v) {
      if (x >= field->q()) throw Error(ErrorCode::IndexOutOfRange, "coordinate outside " + field->name());
    }
    m.insert(m.end(), v.begin(), v.end());
  }
  const int rank = reduce_rows(*field, m, static_cast<int>(vectors.size()), n);
  m.resize(static_cast<std::size_t>(rank) * n);
  return SubspaceCanonical(field, n, rank, std::move(m));
}

SubspaceCanonical SubspaceCanonical::zero(const FieldPtr& field, int n) { return SubspaceCanonical(field, n, 0, {}); }

SubspaceCanonical SubspaceCanonical::whole(const FieldPtr& field, int n) {
  std::vector<std::uint32_t> m(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) m[i * n + i] = 1;
  return SubspaceCanonical(field, n, n, std::move(m));
}

Vector SubspaceCanonical::row(int r) const {
  return Vector(rows_.begin() + static_cast<std::ptrdiff_t>(r) * n_,
                rows_.begin() + static_cast<std::ptrdiff_t>(r + 1) * n_);
}

std::vector<Vector> SubspaceCanonical::basis() const {
  std::vector<Vector> out;
  for (int r = 0; r < dim_; ++r) out.push_back(row(r));
  return out;
}

std::vector<int> SubspaceCanonical::pivots() const {
  std::vector<int> out;
  for (int r = 0; r < dim_; ++r) {
    for (int c = 0; c < n_; ++c) {
      if (rows_[r * n_ + c] != 0) {
        out.push_back(c);
        break;
      }
    }
  }
  return out;
}

bool SubspaceCanonical::contains_vector(const Vector& v) const {
  // Eliminate v against the echelon rows; v is inside iff it reduces to zero.
  const auto& f = *field_;
  Vector rem = v;
  const auto piv = pivots();
  for (int r = 0; r < dim_; ++r) {
    const std::uint32_t factor = rem[piv[r]];
    if (factor == 0) continue;
    for (int c = 0; c < n_; ++c) rem[c] = f.sub(rem[c], f.mul(factor, rows_[r * n_ + c]));
  }
  for (auto x : rem) {
    if (x != 0) return false;
  }
  return true;
}

void SubspaceCanonical::check_same(const SubspaceCanonical& rhs) const {
  if (!field_->same_as(*rhs.field_) || n_ != rhs.n_) {
    throw Error(ErrorCode::SpecMismatch, "subspaces of " + field_->name() + "^" + std::to_string(n_) + " and " +
                                             rhs.field_->name() + "^" + std::to_string(rhs.n_));
  }
}

bool SubspaceCanonical::contains(const SubspaceCanonical& other) const {
  check_same(other);
  if (other.dim_ > dim_) return false;
  for (int r = 0; r < other.dim_; ++r) {
    if (!contains_vector(other.row(r))) return false;
  }
  return true;
}

SubspaceCanonical SubspaceCanonical::join(const SubspaceCanonical& other) const {
  check_same(other);
  auto vectors = basis();
  auto more = other.basis();
  vectors.insert(vectors.end(), more.begin(), more.end());
  return span(field_, n_, vectors);
}

SubspaceCanonical SubspaceCanonical::annihilator() const {
  // Null space of the echelon matrix: one basis vector per free column.
  const auto& f = *field_;
  const auto piv = pivots();
  std::vector<bool> is_pivot(n_, false);
  for (int c : piv) is_pivot[c] = true;
  std::vector<Vector> vectors;
  for (int free = 0; free < n_; ++free) {
    if (is_pivot[free]) continue;
    Vector x(n_, 0);
    x[free] = 1;
    for (int r = 0; r < dim_; ++r) x[piv[r]] = f.neg(rows_[r * n_ + free]);
    vectors.push_back(std::move(x));
  }
  return span(field_, n_, vectors);
}

SubspaceCanonical SubspaceCanonical::meet(const SubspaceCanonical& other) const {
  check_same(other);
  return annihilator().join(other.annihilator()).annihilator();
}

std::string SubspaceCanonical::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int r = 0; r < dim_; ++r) {
    if (r > 0) os << ';';
    for (int c = 0; c < n_; ++c) {
      if (c > 0) os << ',';
      os << field_->format(rows_[r * n_ + c]);
    }
  }
  os << ']';
  return os.str();
}

bool SubspaceCanonical::operator==(const SubspaceCanonical& rhs) const {
  return n_ == rhs.n_ && dim_ == rhs.dim_ && rows_ == rhs.rows_ && field_->same_as(*rhs.field_);
}

std::strong_ordering SubspaceCanonical::operator<=>(const SubspaceCanonical& rhs) const {
  if (auto c = n_ <=> rhs.n_; c != 0) return c;
  if (auto c = dim_ <=> rhs.dim_; c != 0) return c;
  return rows_ <=> rhs.rows_;
}

std::size_t SubspaceCanonical::hash() const {
  std::size_t h = static_cast<std::size_t>(n_) * 1000003u + static_cast<std::size_t>(dim_);
  for (auto x : rows_) h = h * 1099511628211ull ^ x;
  return h;
}

std::strong_ordering FlagCanonical::operator<=>(const FlagCanonical& rhs) const {
  return chain <=> rhs.chain;
}

bool FlagCanonical::is_nested() const {
  for (std::size_t k = 0; k < chain.size(); ++k) {
    if (chain[k].dim() != static_cast<int>(k) + 1) return false;
    if (k > 0 && !chain[k].contains(chain[k - 1])) return false;
  }
  return true;
}

}  // namespace schubert::chevalley
