#include "schubert/matrix.hpp"

#include "schubert/error.hpp"

namespace schubert::chevalley {

MatrixGF::MatrixGF(FieldPtr field, int n)
    : field_(std::move(field)), n_(n), a_(static_cast<std::size_t>(n) * n, 0) {}

MatrixGF::MatrixGF(FieldPtr field, int n, std::vector<std::uint32_t> codes)
    : field_(std::move(field)), n_(n), a_(std::move(codes)) {
  if (a_.size() != static_cast<std::size_t>(n) * n) {
    throw Error(ErrorCode::IndexError, "matrix needs " + std::to_string(n * n) + " entries");
  }
  for (auto c : a_) {
    if (c >= field_->q()) throw Error(ErrorCode::IndexOutOfRange, "entry code outside " + field_->name());
  }
}

MatrixGF MatrixGF::identity(const FieldPtr& field, int n) {
  MatrixGF m(field, n);
  for (int i = 0; i < n; ++i) m.a_[i * n + i] = 1;
  return m;
}

void MatrixGF::set(int r, int c, const FieldElement& v) {
  if (!v.field()->same_as(*field_)) throw Error(ErrorCode::SpecMismatch, "entry from another field");
  set_code(r, c, v.code());
}

std::vector<std::uint32_t> MatrixGF::column(int c) const {
  std::vector<std::uint32_t> out(n_);
  for (int r = 0; r < n_; ++r) out[r] = code(r, c);
  return out;
}

void MatrixGF::check_same(const MatrixGF& rhs) const {
  if (!field_->same_as(*rhs.field_)) {
    throw Error(ErrorCode::SpecMismatch, field_->name() + " vs " + rhs.field_->name());
  }
  if (n_ != rhs.n_) {
    throw Error(ErrorCode::IndexError, "dimension " + std::to_string(n_) + " vs " + std::to_string(rhs.n_));
  }
}

MatrixGF MatrixGF::operator*(const MatrixGF& rhs) const {
  check_same(rhs);
  const auto& f = *field_;
  MatrixGF out(field_, n_);
  for (int i = 0; i < n_; ++i) {
    for (int k = 0; k < n_; ++k) {
      const std::uint32_t aik = code(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < n_; ++j) {
        const std::uint32_t bkj = rhs.code(k, j);
        if (bkj == 0) continue;
        out.a_[i * n_ + j] = f.add(out.a_[i * n_ + j], f.mul(aik, bkj));
      }
    }
  }
  return out;
}

bool MatrixGF::operator==(const MatrixGF& rhs) const {
  return n_ == rhs.n_ && a_ == rhs.a_ && field_->same_as(*rhs.field_);
}

FieldElement MatrixGF::determinant() const {
  // Row reduction over the field; every nonzero pivot is a unit.
  const auto& f = *field_;
  auto m = a_;
  std::uint32_t det = 1;
  for (int col = 0; col < n_; ++col) {
    int pivot = -1;
    for (int r = col; r < n_; ++r) {
      if (m[r * n_ + col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return FieldElement::zero(field_);
    if (pivot != col) {
      for (int c = 0; c < n_; ++c) std::swap(m[pivot * n_ + c], m[col * n_ + c]);
      det = f.neg(det);
    }
    const std::uint32_t p = m[col * n_ + col];
    det = f.mul(det, p);
    const std::uint32_t pinv = f.inv(p);
    for (int r = col + 1; r < n_; ++r) {
      const std::uint32_t factor = f.mul(m[r * n_ + col], pinv);
      if (factor == 0) continue;
      for (int c = col; c < n_; ++c) m[r * n_ + c] = f.sub(m[r * n_ + c], f.mul(factor, m[col * n_ + c]));
    }
  }
  return {field_, det};
}

MatrixGF MatrixGF::inverse() const {
  const auto& f = *field_;
  auto m = a_;
  auto inv = identity(field_, n_).a_;
  for (int col = 0; col < n_; ++col) {
    int pivot = -1;
    for (int r = col; r < n_; ++r) {
      if (m[r * n_ + col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw Error(ErrorCode::SingularMatrix, "matrix is not invertible");
    if (pivot != col) {
      for (int c = 0; c < n_; ++c) {
        std::swap(m[pivot * n_ + c], m[col * n_ + c]);
        std::swap(inv[pivot * n_ + c], inv[col * n_ + c]);
      }
    }
    const std::uint32_t pinv = f.inv(m[col * n_ + col]);
    for (int c = 0; c < n_; ++c) {
      m[col * n_ + c] = f.mul(m[col * n_ + c], pinv);
      inv[col * n_ + c] = f.mul(inv[col * n_ + c], pinv);
    }
    for (int r = 0; r < n_; ++r) {
      if (r == col) continue;
      const std::uint32_t factor = m[r * n_ + col];
      if (factor == 0) continue;
      for (int c = 0; c < n_; ++c) {
        m[r * n_ + c] = f.sub(m[r * n_ + c], f.mul(factor, m[col * n_ + c]));
        inv[r * n_ + c] = f.sub(inv[r * n_ + c], f.mul(factor, inv[col * n_ + c]));
      }
    }
  }
  return MatrixGF(field_, n_, std::move(inv));
}

std::vector<std::vector<std::string>> MatrixGF::to_strings() const {
  std::vector<std::vector<std::string>> out(n_, std::vector<std::string>(n_));
  for (int r = 0; r < n_; ++r) {
    for (int c = 0; c < n_; ++c) out[r][c] = field_->format(code(r, c));
  }
  return out;
}

}  // namespace schubert::chevalley
