#include "schubert/rootsys.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <set>
#include <sstream>

#include "schubert/error.hpp"

namespace schubert::rootsys {

namespace {

std::vector<int> build_cartan(Family family, int n) {
  std::vector<int> a(static_cast<std::size_t>(n) * n, 0);
  auto at = [&](int i, int j) -> int& { return a[(i - 1) * n + (j - 1)]; };
  for (int i = 1; i <= n; ++i) at(i, i) = 2;
  switch (family) {
    case Family::A:
    case Family::B:
    case Family::C:
      for (int i = 1; i < n; ++i) at(i, i + 1) = at(i + 1, i) = -1;
      if (n >= 2 && family == Family::B) at(n, n - 1) = -2;  // alpha_n short
      if (n >= 2 && family == Family::C) at(n - 1, n) = -2;  // alpha_n long
      break;
    case Family::D:
      for (int i = 1; i + 1 <= n - 1; ++i) at(i, i + 1) = at(i + 1, i) = -1;
      if (n >= 3) at(n - 2, n) = at(n, n - 2) = -1;
      break;
    case Family::G:
      at(1, 2) = -1;
      at(2, 1) = -3;
      break;
    case Family::F:
      at(1, 2) = at(2, 1) = -1;
      at(2, 3) = -2;
      at(3, 2) = -1;
      at(3, 4) = at(4, 3) = -1;
      break;
  }
  return a;
}

void validate_cartan(const std::vector<int>& a, int n) {
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int v = a[i * n + j];
      if (i == j && v != 2) throw Error(ErrorCode::UnsupportedType, "Cartan diagonal entry is not 2");
      if (i != j && v > 0) throw Error(ErrorCode::UnsupportedType, "positive off-diagonal Cartan entry");
      if (i != j && (v == 0) != (a[j * n + i] == 0)) {
        throw Error(ErrorCode::UnsupportedType, "Cartan matrix zero pattern is not symmetric");
      }
    }
  }
}

std::vector<int> identity_matrix(int n) {
  std::vector<int> m(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) m[i * n + i] = 1;
  return m;
}

std::vector<int> mat_mul(const std::vector<int>& a, const std::vector<int>& b, int n) {
  std::vector<int> c(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const int aik = a[i * n + k];
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j) c[i * n + j] += aik * b[k * n + j];
    }
  }
  return c;
}

// Matrix of s_i: column c is s_i(alpha_c) = alpha_c - a_ic alpha_i.
std::vector<int> reflection_matrix(const RootSystem& sys, int i) {
  const int n = sys.rank();
  auto m = identity_matrix(n);
  for (int c = 1; c <= n; ++c) m[(i - 1) * n + (c - 1)] -= sys.cartan(i, c);
  return m;
}

bool column_negative(const std::vector<int>& m, int n, int col) {
  for (int r = 0; r < n; ++r) {
    const int v = m[r * n + col];
    if (v != 0) return v < 0;
  }
  return false;
}

}  // namespace

bool is_positive(const Root& r) {
  bool nonzero = false;
  for (int c : r) {
    if (c < 0) return false;
    nonzero = nonzero || c != 0;
  }
  return nonzero;
}

bool is_negative(const Root& r) {
  bool nonzero = false;
  for (int c : r) {
    if (c > 0) return false;
    nonzero = nonzero || c != 0;
  }
  return nonzero;
}

int height(const Root& r) {
  int h = 0;
  for (int c : r) h += c;
  return h;
}

RootSystemPtr RootSystem::make(std::string_view type_label, int rank) {
  Family family;
  if (type_label == "A" || type_label == "a") {
    family = Family::A;
  } else if (type_label == "B" || type_label == "b") {
    family = Family::B;
  } else if (type_label == "C" || type_label == "c") {
    family = Family::C;
  } else if (type_label == "D" || type_label == "d") {
    family = Family::D;
  } else if (type_label == "G" || type_label == "G2" || type_label == "g") {
    family = Family::G;
  } else if (type_label == "F" || type_label == "F4" || type_label == "f") {
    family = Family::F;
  } else {
    throw Error(ErrorCode::UnsupportedType, "unknown type '" + std::string(type_label) + "'");
  }
  const bool ok = (family == Family::G && rank == 2) || (family == Family::F && rank == 4) ||
                  (family == Family::D && rank >= 2) ||
                  ((family == Family::A || family == Family::B || family == Family::C) && rank >= 1);
  if (!ok || rank > 64) {
    throw Error(ErrorCode::UnsupportedType,
                "unsupported rank " + std::to_string(rank) + " for type " + std::string(type_label));
  }
  return std::make_shared<const RootSystem>(Private{}, family, rank, build_cartan(family, rank));
}

RootSystem::RootSystem(Private, Family family, int rank, std::vector<int> cartan)
    : family_(family), rank_(rank), cartan_(std::move(cartan)) {
  validate_cartan(cartan_, rank_);

  // Close the simple roots under the simple reflections, keeping positive images.
  std::set<Root> seen;
  std::deque<Root> queue;
  for (int i = 1; i <= rank_; ++i) {
    auto a = simple_root(i);
    seen.insert(a);
    queue.push_back(a);
  }
  while (!queue.empty()) {
    Root beta = queue.front();
    queue.pop_front();
    for (int i = 1; i <= rank_; ++i) {
      Root image = reflect(i, beta);
      if (is_positive(image) && seen.insert(image).second) queue.push_back(std::move(image));
    }
  }
  positive_.assign(seen.begin(), seen.end());
  std::sort(positive_.begin(), positive_.end(), [](const Root& x, const Root& y) {
    const int hx = height(x), hy = height(y);
    if (hx != hy) return hx < hy;
    return x > y;
  });
}

std::string RootSystem::label() const {
  static constexpr const char* names = "ABCDGF";
  return std::string(1, names[static_cast<int>(family_)]) + std::to_string(rank_);
}

int RootSystem::coxeter_m(int i, int j) const {
  if (i == j) return 1;
  switch (cartan(i, j) * cartan(j, i)) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: throw Error(ErrorCode::UnsupportedType, "non-crystallographic Cartan pair");
  }
}

int RootSystem::positive_index(const Root& r) const {
  auto it = std::find(positive_.begin(), positive_.end(), r);
  return it == positive_.end() ? -1 : static_cast<int>(it - positive_.begin());
}

Root RootSystem::simple_root(int i) const {
  Root r(rank_, 0);
  r[i - 1] = 1;
  return r;
}

Root RootSystem::reflect(int i, const Root& r) const {
  int pairing = 0;
  for (int j = 1; j <= rank_; ++j) pairing += cartan(i, j) * r[j - 1];
  Root out = r;
  out[i - 1] -= pairing;
  return out;
}

std::uint64_t RootSystem::weyl_order() const {
  auto factorial = [](int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f = f > UINT64_MAX / i ? UINT64_MAX : f * i;
    return f;
  };
  auto pow2 = [](int n) { return n >= 63 ? UINT64_MAX : (std::uint64_t{1} << n); };
  auto mul = [](std::uint64_t a, std::uint64_t b) { return b != 0 && a > UINT64_MAX / b ? UINT64_MAX : a * b; };
  switch (family_) {
    case Family::A: return factorial(rank_ + 1);
    case Family::B:
    case Family::C: return mul(pow2(rank_), factorial(rank_));
    case Family::D: return mul(pow2(rank_ - 1), factorial(rank_));
    case Family::G: return 12;
    case Family::F: return 1152;
  }
  return 0;
}

bool RootSystem::same_as(const RootSystem& other) const {
  return this == &other || (rank_ == other.rank_ && cartan_ == other.cartan_);
}

// ---------------------------------------------------------------------------

WeylElement::WeylElement(RootSystemPtr sys, std::vector<int> action)
    : sys_(std::move(sys)), rank_(sys_->rank()), action_(std::move(action)) {}

WeylElement WeylElement::identity(const RootSystemPtr& sys) {
  return WeylElement(sys, identity_matrix(sys->rank()));
}

WeylElement WeylElement::simple(const RootSystemPtr& sys, int i) {
  if (i < 1 || i > sys->rank()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "simple index " + std::to_string(i) + " outside 1.." + std::to_string(sys->rank()));
  }
  WeylElement s(sys, reflection_matrix(*sys, i));
  s.word_ = {i};
  return s;
}

WeylElement WeylElement::from_word(const RootSystemPtr& sys, const Word& word) {
  const int n = sys->rank();
  auto m = identity_matrix(n);
  for (int i : word) {
    if (i < 1 || i > n) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "simple index " + std::to_string(i) + " outside 1.." + std::to_string(n));
    }
    m = mat_mul(m, reflection_matrix(*sys, i), n);
  }
  WeylElement w(sys, std::move(m));
  w.word_ = canonical_reduced_word(w);
  return w;
}

Root WeylElement::apply(const Root& r) const {
  Root out(rank_, 0);
  for (int i = 0; i < rank_; ++i) {
    for (int j = 0; j < rank_; ++j) out[i] += action_[i * rank_ + j] * r[j];
  }
  return out;
}

void WeylElement::check_same(const WeylElement& rhs) const {
  if (!sys_->same_as(*rhs.sys_)) {
    throw Error(ErrorCode::SystemMismatch, sys_->label() + " vs " + rhs.sys_->label());
  }
}

WeylElement WeylElement::operator*(const WeylElement& rhs) const {
  check_same(rhs);
  WeylElement out(sys_, mat_mul(action_, rhs.action_, rank_));
  out.word_ = canonical_reduced_word(out);
  return out;
}

WeylElement WeylElement::inverse() const {
  Word rev(word_.rbegin(), word_.rend());
  return from_word(sys_, rev);
}

std::vector<int> WeylElement::inversion_indices() const {
  std::vector<int> out;
  const auto& roots = sys_->positive_roots();
  for (std::size_t k = 0; k < roots.size(); ++k) {
    if (is_negative(apply(roots[k]))) out.push_back(static_cast<int>(k));
  }
  return out;
}

std::vector<Root> WeylElement::inversion_set() const {
  std::vector<Root> out;
  for (int k : inversion_indices()) out.push_back(sys_->positive_roots()[k]);
  return out;
}

bool WeylElement::has_right_descent(int i) const { return column_negative(action_, rank_, i - 1); }

bool WeylElement::has_left_descent(int i) const {
  // s_i w is shorter iff w^{-1}(alpha_i) < 0 iff alpha_i = -w(beta) for some beta > 0.
  const Root target = [&] {
    Root r(rank_, 0);
    r[i - 1] = -1;
    return r;
  }();
  for (const auto& beta : sys_->positive_roots()) {
    if (apply(beta) == target) return true;
  }
  return false;
}

bool WeylElement::operator==(const WeylElement& rhs) const {
  return action_ == rhs.action_ && sys_->same_as(*rhs.sys_);
}

std::strong_ordering WeylElement::operator<=>(const WeylElement& rhs) const {
  if (auto c = word_.size() <=> rhs.word_.size(); c != 0) return c;
  return word_ <=> rhs.word_;
}

Word canonical_reduced_word(const WeylElement& w) {
  // Greedy smallest left descent gives the lexicographically smallest reduced
  // word. Left descents of w are the right descents of v = w^{-1}, which are
  // read off as sign of v's columns; v is recovered from the action below.
  const auto& sys = *w.system();
  const int n = sys.rank();
  const auto& roots = sys.positive_roots();

  // v = w^{-1}: column c of v is the root beta with w(beta) = alpha_c, signed.
  std::vector<int> v(static_cast<std::size_t>(n) * n, 0);
  std::vector<bool> found(n, false);
  for (const auto& beta : roots) {
    Root image = w.apply(beta);
    for (int sign : {1, -1}) {
      Root target = image;
      for (auto& x : target) x *= sign;
      int col = -1;
      for (int c = 0; c < n; ++c) {
        bool simple = target[c] == 1;
        for (int r = 0; r < n && simple; ++r) simple = r == c || target[r] == 0;
        if (simple) col = c;
      }
      if (col >= 0 && !found[col]) {
        found[col] = true;
        for (int r = 0; r < n; ++r) v[r * n + col] = sign * beta[r];
      }
    }
  }

  Word word;
  for (;;) {
    int pick = -1;
    for (int c = 0; c < n; ++c) {
      if (column_negative(v, n, c)) {
        pick = c;
        break;
      }
    }
    if (pick < 0) break;
    word.push_back(pick + 1);
    // v <- v s_{pick}: column c loses a_{pick,c} times column pick.
    for (int c = 0; c < n; ++c) {
      const int a = sys.cartan(pick + 1, c + 1);
      if (c == pick || a == 0) continue;
      for (int r = 0; r < n; ++r) v[r * n + c] -= a * v[r * n + pick];
    }
    for (int r = 0; r < n; ++r) v[r * n + pick] = -v[r * n + pick];
  }
  return word;
}

std::vector<WeylElement> enumerate_subgroup(const RootSystemPtr& sys, const std::vector<int>& generators,
                                            std::uint64_t guard) {
  std::vector<WeylElement> all{WeylElement::identity(sys)};
  std::set<std::vector<int>> seen{all.front().action()};
  std::vector<WeylElement> frontier = all;
  std::vector<WeylElement> gens;
  for (int g : generators) gens.push_back(WeylElement::simple(sys, g));
  while (!frontier.empty()) {
    std::vector<WeylElement> next;
    for (const auto& e : frontier) {
      for (std::size_t k = 0; k < gens.size(); ++k) {
        if (e.has_right_descent(generators[k])) continue;
        WeylElement candidate = e * gens[k];
        if (!seen.insert(candidate.action()).second) continue;
        if (seen.size() > guard) {
          throw Error(ErrorCode::GroupTooLarge, "subgroup exceeds guard " + std::to_string(guard));
        }
        next.push_back(std::move(candidate));
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end());
  return all;
}

std::vector<WeylElement> weyl_enumerate(const RootSystemPtr& sys, std::uint64_t guard) {
  if (sys->weyl_order() > guard) {
    throw Error(ErrorCode::GroupTooLarge, sys->label() + " has " + std::to_string(sys->weyl_order()) +
                                              " elements, guard is " + std::to_string(guard));
  }
  std::vector<int> gens;
  for (int i = 1; i <= sys->rank(); ++i) gens.push_back(i);
  return enumerate_subgroup(sys, gens, guard);
}

std::string format_word(const Word& word) {
  std::ostringstream os;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k > 0) os << ' ';
    os << word[k];
  }
  return os.str();
}

Word parse_word(std::string_view text, int rank) {
  Word out;
  std::size_t pos = 0;
  int token_index = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == ',')) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && text[end] != ' ' && text[end] != '\t' && text[end] != ',') ++end;
    ++token_index;
    const auto token = text.substr(pos, end - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw Error(ErrorCode::ParseError, "word token " + std::to_string(token_index) + " ('" +
                                             std::string(token) + "') at offset " + std::to_string(pos) +
                                             " is not an integer");
    }
    if (value < 1 || value > rank) {
      throw Error(ErrorCode::ParseError, "word token " + std::to_string(token_index) + " ('" +
                                             std::string(token) + "') at offset " + std::to_string(pos) +
                                             " outside 1.." + std::to_string(rank));
    }
    out.push_back(value);
    pos = end;
  }
  return out;
}

}  // namespace schubert::rootsys
