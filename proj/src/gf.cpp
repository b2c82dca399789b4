#include "schubert/gf.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "schubert/error.hpp"

namespace schubert::gf {

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic polynomial m over GF(p).
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = (a[shift + i] + p - (lead * m[i]) % p) % p;
    }
    trim(a);
  }
  return a;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
  }
  return poly_mod(std::move(c), m, p);
}

bool is_irreducible(const Poly& m, std::uint32_t p) {
  const std::size_t k = m.size() - 1;
  for (std::size_t d = 1; d <= k / 2; ++d) {
    // Every monic polynomial of degree d: the low d coefficients run over p^d tuples.
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly f(d + 1, 0);
      std::uint64_t r = idx;
      for (std::size_t i = 0; i < d; ++i) {
        f[i] = static_cast<std::uint32_t>(r % p);
        r /= p;
      }
      f[d] = 1;
      if (poly_mod(m, f, p).empty()) return false;
    }
  }
  return true;
}

const std::map<std::uint32_t, Poly>& builtin_moduli() {
  // Conway polynomials, low degree first.
  static const std::map<std::uint32_t, Poly> table = {
      {4, {1, 1, 1}},           // t^2 + t + 1
      {8, {1, 1, 0, 1}},        // t^3 + t + 1
      {9, {2, 2, 1}},           // t^2 + 2t + 2
      {16, {1, 1, 0, 0, 1}},    // t^4 + t + 1
      {25, {2, 4, 1}},          // t^2 + 4t + 2
      {27, {1, 2, 0, 1}},       // t^3 + 2t + 1
      {32, {1, 0, 1, 0, 0, 1}}, // t^5 + t^2 + 1
  };
  return table;
}

std::uint64_t checked_order(std::uint32_t p, std::uint32_t k) {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) {
      throw Error(ErrorCode::UnsupportedExtension,
                  "field order " + std::to_string(p) + "^" + std::to_string(k) + " exceeds 2^16");
    }
  }
  return q;
}

}  // namespace

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> split_prime_power(std::uint64_t q) {
  if (q < 2 || q > 0xffffffffull) return std::nullopt;
  std::uint32_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = static_cast<std::uint32_t>(d);
      break;
    }
  }
  if (p == 0) return std::pair<std::uint32_t, std::uint32_t>{static_cast<std::uint32_t>(q), 1};
  std::uint32_t k = 0;
  while (q % p == 0) {
    q /= p;
    ++k;
  }
  if (q != 1) return std::nullopt;
  return std::pair<std::uint32_t, std::uint32_t>{p, k};
}

FieldPtr Field::make(std::uint32_t p, std::uint32_t k) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::NonPrimeCharacteristic, std::to_string(p) + " is not prime");
  }
  if (k < 1) throw Error(ErrorCode::UnsupportedExtension, "extension degree must be >= 1");
  const auto q = checked_order(p, k);
  if (k == 1) return std::make_shared<const Field>(Private{}, p, Poly{0, 1});
  const auto& table = builtin_moduli();
  auto it = table.find(static_cast<std::uint32_t>(q));
  if (it == table.end()) {
    throw Error(ErrorCode::UnsupportedExtension,
                "no built-in modulus for q = " + std::to_string(q) + "; supply one explicitly");
  }
  return std::make_shared<const Field>(Private{}, p, it->second);
}

FieldPtr Field::make_with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::NonPrimeCharacteristic, std::to_string(p) + " is not prime");
  }
  if (modulus.size() < 2) throw Error(ErrorCode::InvalidModulus, "modulus must have degree >= 1");
  if (modulus.back() != 1) throw Error(ErrorCode::InvalidModulus, "modulus must be monic");
  for (auto c : modulus) {
    if (c >= p) throw Error(ErrorCode::InvalidModulus, "modulus coefficient not reduced mod p");
  }
  checked_order(p, static_cast<std::uint32_t>(modulus.size() - 1));
  if (!is_irreducible(modulus, p)) {
    throw Error(ErrorCode::InvalidModulus, "modulus is reducible over GF(" + std::to_string(p) + ")");
  }
  if (modulus.size() == 2) modulus = {0, 1};
  return std::make_shared<const Field>(Private{}, p, std::move(modulus));
}

Field::Field(Private, std::uint32_t p, std::vector<std::uint32_t> modulus)
    : p_(p),
      k_(static_cast<std::uint32_t>(modulus.size() - 1)),
      q_(static_cast<std::uint32_t>(checked_order(p, static_cast<std::uint32_t>(modulus.size() - 1)))),
      modulus_(std::move(modulus)) {
  // Find a generator of the multiplicative group by walking powers.
  const std::uint32_t order = q_ - 1;
  for (std::uint32_t g = 1; g < q_; ++g) {
    Poly gp = coeffs(g);
    trim(gp);
    std::vector<std::uint32_t> powers;
    powers.reserve(order);
    Poly cur{1};
    for (std::uint32_t e = 0; e < order; ++e) {
      auto c = cur;
      c.resize(k_, 0);
      const std::uint32_t code = encode(c);
      if (e > 0 && code == 1) break;
      powers.push_back(code);
      cur = poly_mul_mod(cur, gp, modulus_, p_);
    }
    if (powers.size() != order) continue;
    exp_.resize(2 * static_cast<std::size_t>(order));
    log_.assign(q_, 0);
    for (std::uint32_t e = 0; e < order; ++e) {
      exp_[e] = exp_[e + order] = powers[e];
      log_[powers[e]] = e;
    }
    return;
  }
  throw Error(ErrorCode::InvalidModulus, "multiplicative group is not cyclic; modulus reducible?");
}

std::uint32_t Field::add(std::uint32_t a, std::uint32_t b) const {
  if (k_ == 1) return (a + b) % p_;
  if (p_ == 2) return a ^ b;
  std::uint32_t out = 0;
  std::uint32_t place = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    out += ((a % p_ + b % p_) % p_) * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return out;
}

std::uint32_t Field::neg(std::uint32_t a) const {
  if (k_ == 1) return (p_ - a) % p_;
  if (p_ == 2) return a;
  std::uint32_t out = 0;
  std::uint32_t place = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    out += ((p_ - a % p_) % p_) * place;
    a /= p_;
    place *= p_;
  }
  return out;
}

std::uint32_t Field::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t Field::mul(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[log_[a] + log_[b]];
}

std::uint32_t Field::inv(std::uint32_t a) const {
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero in " + name());
  const std::uint32_t order = q_ - 1;
  return exp_[(order - log_[a]) % order];
}

std::vector<std::uint32_t> Field::coeffs(std::uint32_t code) const {
  std::vector<std::uint32_t> out(k_);
  for (std::uint32_t i = 0; i < k_; ++i) {
    out[i] = code % p_;
    code /= p_;
  }
  return out;
}

std::uint32_t Field::encode(std::span<const std::uint32_t> coeffs) const {
  std::uint32_t code = 0;
  std::uint32_t place = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    const std::uint32_t c = i < coeffs.size() ? coeffs[i] % p_ : 0;
    code += c * place;
    place *= p_;
  }
  return code;
}

std::string Field::format(std::uint32_t code) const {
  if (k_ == 1) return std::to_string(code);
  std::ostringstream os;
  const auto c = coeffs(code);
  for (std::uint32_t i = 0; i < k_; ++i) {
    if (i > 0) os << '+';
    os << c[i];
    if (i == 1) os << "*t";
    if (i > 1) os << "*t^" << i;
  }
  return os.str();
}

std::uint32_t Field::parse(std::string_view text) const {
  auto fail = [&] { return Error(ErrorCode::ParseError, "\"" + std::string(text) + "\" is not an element of " + name()); };
  auto number = [&](std::string_view digits) {
    if (digits.empty() || digits.size() > 9) throw fail();
    std::uint32_t v = 0;
    for (char ch : digits) {
      if (ch < '0' || ch > '9') throw fail();
      v = v * 10 + static_cast<std::uint32_t>(ch - '0');
    }
    return v;
  };
  if (k_ == 1) {
    const std::uint32_t v = number(text);
    if (v >= p_) throw fail();
    return v;
  }
  std::vector<std::uint32_t> c(k_, 0);
  std::uint32_t i = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t plus = std::min(text.find('+', start), text.size());
    const std::string_view term = text.substr(start, plus - start);
    if (i >= k_) throw fail();
    std::string suffix;
    if (i == 1) suffix = "*t";
    if (i > 1) suffix = "*t^" + std::to_string(i);
    if (term.size() < suffix.size() || term.substr(term.size() - suffix.size()) != suffix) throw fail();
    c[i] = number(term.substr(0, term.size() - suffix.size()));
    if (c[i] >= p_) throw fail();
    ++i;
    start = plus + 1;
  }
  if (i != k_) throw fail();
  return encode(c);
}

bool Field::same_as(const Field& other) const {
  return this == &other || (p_ == other.p_ && modulus_ == other.modulus_);
}

std::string Field::name() const { return "GF(" + std::to_string(q_) + ")"; }

FieldElement::FieldElement(FieldPtr field, std::uint32_t code) : field_(std::move(field)), code_(code) {
  if (code_ >= field_->q()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "element code " + std::to_string(code_) + " out of range for " + field_->name());
  }
}

FieldElement FieldElement::from_int(const FieldPtr& field, long long value) {
  const long long p = field->p();
  return {field, static_cast<std::uint32_t>(((value % p) + p) % p)};
}

void FieldElement::check_same(const FieldElement& rhs) const {
  if (!field_->same_as(*rhs.field_)) {
    throw Error(ErrorCode::SpecMismatch, field_->name() + " vs " + rhs.field_->name());
  }
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
  check_same(rhs);
  return {field_, field_->add(code_, rhs.code_)};
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
  check_same(rhs);
  return {field_, field_->sub(code_, rhs.code_)};
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
  check_same(rhs);
  return {field_, field_->mul(code_, rhs.code_)};
}

FieldElement FieldElement::operator/(const FieldElement& rhs) const {
  check_same(rhs);
  return {field_, field_->mul(code_, field_->inv(rhs.code_))};
}

FieldElement FieldElement::operator-() const { return {field_, field_->neg(code_)}; }

FieldElement FieldElement::inv() const { return {field_, field_->inv(code_)}; }

FieldElement FieldElement::pow(std::uint64_t e) const {
  std::uint32_t result = 1;
  std::uint32_t base = code_;
  while (e > 0) {
    if (e & 1) result = field_->mul(result, base);
    base = field_->mul(base, base);
    e >>= 1;
  }
  return {field_, result};
}

bool FieldElement::operator==(const FieldElement& rhs) const {
  return code_ == rhs.code_ && field_->same_as(*rhs.field_);
}

std::strong_ordering FieldElement::operator<=>(const FieldElement& rhs) const {
  check_same(rhs);
  return code_ <=> rhs.code_;
}

std::vector<FieldElement> enumerate_field(const FieldPtr& field) {
  std::vector<FieldElement> out;
  out.reserve(field->q());
  for (std::uint32_t c = 0; c < field->q(); ++c) out.emplace_back(field, c);
  return out;
}

}  // namespace schubert::gf
