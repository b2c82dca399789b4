#pragma once

// Exact arithmetic in GF(p^k).
//
// An element is stored as its integer code c0 + c1*p + ... + c_{k-1}*p^{k-1},
// where (c0, ..., c_{k-1}) are the coefficients of its polynomial residue,
// low degree first. The code order is the public enumeration order, so 0 is
// always first and GF(4) enumerates as 0, 1, t, 1+t.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace schubert::gf {

inline constexpr std::uint32_t kMaxFieldOrder = 1u << 16;

class Field;
class FieldElement;
using FieldPtr = std::shared_ptr<const Field>;

/// Immutable description of GF(p^k) plus the lookup tables used for arithmetic.
class Field {
  struct Private {};

 public:
  /// Prime field for k == 1, otherwise the built-in modulus for q in
  /// {4, 8, 9, 16, 25, 27, 32}.
  static FieldPtr make(std::uint32_t p, std::uint32_t k = 1);
  /// Extension field with a caller-supplied monic modulus (low degree first).
  static FieldPtr make_with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus);

  Field(Private, std::uint32_t p, std::vector<std::uint32_t> modulus);

  std::uint32_t p() const { return p_; }
  std::uint32_t k() const { return k_; }
  std::uint32_t q() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  bool is_prime_field() const { return k_ == 1; }

  // Arithmetic on raw codes. No range checks; callers hold codes < q().
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;  // throws DivisionByZero on 0

  std::vector<std::uint32_t> coeffs(std::uint32_t code) const;
  std::uint32_t encode(std::span<const std::uint32_t> coeffs) const;

  /// "3" for prime fields; "c0+c1*t+...+c_{k-1}*t^{k-1}" for extensions.
  std::string format(std::uint32_t code) const;
  /// Inverse of format; throws ParseError.
  std::uint32_t parse(std::string_view text) const;

  /// Same characteristic and modulus.
  bool same_as(const Field& other) const;

  /// "GF(9)"
  std::string name() const;

 private:
  std::uint32_t p_;
  std::uint32_t k_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_;  // exp_[e] = g^e, length 2(q-1)
  std::vector<std::uint32_t> log_;  // log_[x] for x != 0
};

bool is_prime(std::uint32_t n);

/// (p, k) with q = p^k, or nullopt when q is not a prime power.
std::optional<std::pair<std::uint32_t, std::uint32_t>> split_prime_power(std::uint64_t q);

/// Value-semantic element bound to its field. Mixed-field arithmetic throws SpecMismatch.
class FieldElement {
 public:
  FieldElement(FieldPtr field, std::uint32_t code);

  static FieldElement zero(const FieldPtr& field) { return {field, 0}; }
  static FieldElement one(const FieldPtr& field) { return {field, 1}; }
  /// Image of an integer under Z -> GF(p).
  static FieldElement from_int(const FieldPtr& field, long long value);

  const FieldPtr& field() const { return field_; }
  std::uint32_t code() const { return code_; }
  std::vector<std::uint32_t> coeffs() const { return field_->coeffs(code_); }
  bool is_zero() const { return code_ == 0; }

  FieldElement operator+(const FieldElement& rhs) const;
  FieldElement operator-(const FieldElement& rhs) const;
  FieldElement operator*(const FieldElement& rhs) const;
  FieldElement operator/(const FieldElement& rhs) const;
  FieldElement operator-() const;
  FieldElement inv() const;
  FieldElement pow(std::uint64_t e) const;

  bool operator==(const FieldElement& rhs) const;
  std::strong_ordering operator<=>(const FieldElement& rhs) const;

  std::string to_string() const { return field_->format(code_); }

 private:
  void check_same(const FieldElement& rhs) const;

  FieldPtr field_;
  std::uint32_t code_;
};

/// All q elements in code order; the first is 0.
std::vector<FieldElement> enumerate_field(const FieldPtr& field);

}  // namespace schubert::gf
