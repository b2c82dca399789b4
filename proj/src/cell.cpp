#include "schubert/cell.hpp"

#include <algorithm>
#include <set>

#include "schubert/error.hpp"

namespace schubert::cells {

namespace {

RootSystemPtr check_type_a(const WeylElement& w, int n) {
  const auto& sys = w.system();
  if (sys->family() != rootsys::Family::A) {
    throw Error(ErrorCode::UnsupportedType, "matrix realization needs type A, got " + sys->label());
  }
  if (sys->rank() != n - 1) {
    throw Error(ErrorCode::SystemMismatch, sys->label() + " does not match GL_" + std::to_string(n));
  }
  return sys;
}

// q^e, or guard + 1 once the product passes guard.
std::uint64_t bounded_power(std::uint64_t q, int e, std::uint64_t guard) {
  std::uint64_t out = 1;
  for (int k = 0; k < e; ++k) {
    if (out > guard / q) return guard + 1;
    out *= q;
  }
  return out;
}

template <typename T>
int sorted_index(const std::vector<T>& v, const T& key) {
  const auto it = std::lower_bound(v.begin(), v.end(), key);
  return it != v.end() && *it == key ? static_cast<int>(it - v.begin()) : -1;
}

}  // namespace

std::vector<CellPoint> enumerate_cell(const WeylElement& w, const FieldPtr& field, int n, std::uint64_t guard) {
  return enumerate_cell_along(w, w.word(), field, n, guard);
}

std::vector<CellPoint> enumerate_cell_along(const WeylElement& w, const Word& word, const FieldPtr& field, int n,
                                            std::uint64_t guard) {
  const auto sys = check_type_a(w, n);
  if (static_cast<int>(word.size()) != w.length() || !(WeylElement::from_word(sys, word) == w)) {
    throw Error(ErrorCode::InvalidStructure,
                "[" + rootsys::format_word(word) + "] is not a reduced word for [" + rootsys::format_word(w.word()) +
                    "]");
  }
  const std::uint32_t q = field->q();
  const int len = static_cast<int>(word.size());
  const std::uint64_t size = bounded_power(q, len, guard);
  if (size > guard) {
    throw Error(ErrorCode::CellTooLarge, std::to_string(q) + "^" + std::to_string(len) +
                                             " cell points exceed the guard " + std::to_string(guard));
  }

  // factors[k][c] = x_{i_k}(c) n_{i_k}^{-1}
  std::vector<std::vector<MatrixGF>> factors(len);
  for (int k = 0; k < len; ++k) {
    const MatrixGF ninv = chevalley::n_simple_inv(field, n, word[k]);
    for (std::uint32_t c = 0; c < q; ++c) {
      factors[k].push_back(chevalley::x_simple(field, n, word[k], gf::FieldElement(field, c)) * ninv);
    }
  }

  std::vector<CellPoint> out;
  out.reserve(size);
  std::vector<MatrixGF> prefix{MatrixGF::identity(field, n)};
  std::vector<std::uint32_t> params;
  auto walk = [&](auto&& self, int k) -> void {
    if (k == len) {
      out.push_back({params, prefix.back(), chevalley::coset_key_borel(prefix.back())});
      return;
    }
    for (std::uint32_t c = 0; c < q; ++c) {
      params.push_back(c);
      prefix.push_back(prefix.back() * factors[k][c]);
      self(self, k + 1);
      prefix.pop_back();
      params.pop_back();
    }
  };
  walk(walk, 0);
  return out;
}

int SchubertIncidence::point_index(const SubspaceCanonical& key) const { return sorted_index(points, key); }

int SchubertIncidence::line_index(const SubspaceCanonical& key) const { return sorted_index(lines, key); }

SchubertIncidence build_incidence(const WeylElement& w, int i, int j, const FieldPtr& field, int n,
                                  std::uint64_t guard) {
  check_type_a(w, n);
  auto factorization = parabolic::factorize_uzv(w, i, j);
  Word word = factorization.combined_word();
  auto cell = enumerate_cell_along(w, word, field, n, guard);

  std::vector<SubspaceCanonical> pkeys, lkeys;
  pkeys.reserve(cell.size());
  lkeys.reserve(cell.size());
  for (const auto& cp : cell) {
    pkeys.push_back(chevalley::coset_key_parabolic(cp.matrix, i));
    lkeys.push_back(chevalley::coset_key_parabolic(cp.matrix, j));
  }
  auto points = pkeys;
  auto lines = lkeys;
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());

  std::vector<std::pair<int, int>> keys;
  keys.reserve(cell.size());
  for (std::size_t k = 0; k < cell.size(); ++k) {
    keys.emplace_back(sorted_index(points, pkeys[k]), sorted_index(lines, lkeys[k]));
  }
  incidence::IncidenceStructure structure(static_cast<int>(points.size()), static_cast<int>(lines.size()), keys);
  for (const auto& p : points) structure.point_labels.push_back(p.to_string());
  for (const auto& l : lines) structure.line_labels.push_back(l.to_string());

  std::vector<int> counts;
  for (int l = 0; l < structure.num_lines(); ++l) counts.push_back(static_cast<int>(structure.points_on(l).size()));

  return SchubertIncidence{w,
                           i,
                           j,
                           std::move(factorization),
                           std::move(word),
                           std::move(cell),
                           std::move(points),
                           std::move(lines),
                           std::move(keys),
                           std::move(structure),
                           std::move(counts)};
}

std::uint64_t thickness_formula(const WeylElement& w, int i, int j, std::uint64_t q) {
  if (!gf::split_prime_power(q)) {
    throw Error(ErrorCode::InvalidQ, std::to_string(q) + " is not a prime power");
  }
  const auto f = parabolic::factorize_uzv(w, i, j);
  const std::uint64_t limit = UINT64_MAX;
  const std::uint64_t t = bounded_power(q, f.z.length(), limit - 1);
  if (t >= limit) {
    throw Error(ErrorCode::TooLarge, std::to_string(q) + "^" + std::to_string(f.z.length()) + " overflows");
  }
  return t;
}

TheoremReport verify_theorem(const SchubertIncidence& inc) {
  const auto& field = inc.cell.front().matrix.field();
  TheoremReport r;
  r.w = rootsys::format_word(inc.w.word());
  r.i = inc.i;
  r.j = inc.j;
  r.q = field->q();
  r.n = inc.cell.front().matrix.n();
  r.length_z = inc.factorization.z.length();
  r.formula = thickness_formula(inc.w, inc.i, inc.j, r.q);
  r.lines = inc.lines.size();
  r.points = inc.points.size();
  r.incidences = inc.structure.incidences().size();
  for (std::size_t l = 0; l < inc.lines.size(); ++l) {
    const int count = inc.per_line_counts[l];
    ++r.observed[count];
    if (static_cast<std::uint64_t>(count) != r.formula) r.violating_lines.push_back(inc.lines[l].to_string());
  }
  r.all_agree = r.violating_lines.empty();
  return r;
}

TheoremReport verify_theorem(const WeylElement& w, int i, int j, const FieldPtr& field, int n, std::uint64_t guard) {
  return verify_theorem(build_incidence(w, i, j, field, n, guard));
}

FiberReport fiber_points(const SubspaceCanonical& line, const SchubertIncidence& inc) {
  const int l = inc.line_index(line);
  if (l < 0) throw Error(ErrorCode::LineNotInStructure, line.to_string() + " is not a line of the structure");

  const std::size_t ulen = inc.factorization.u.length();
  const std::size_t zlen = inc.factorization.z.length();
  std::map<int, std::set<std::vector<std::uint32_t>>> slices;
  std::optional<std::vector<std::uint32_t>> u_slice;
  FiberReport r;
  for (std::size_t k = 0; k < inc.cell.size(); ++k) {
    if (inc.cell_keys[k].second != l) continue;
    const auto& params = inc.cell[k].params;
    std::vector<std::uint32_t> u(params.begin(), params.begin() + ulen);
    if (!u_slice) u_slice = u;
    if (*u_slice != u) r.u_slice_constant = false;
    slices[inc.cell_keys[k].first].insert(
        std::vector<std::uint32_t>(params.begin() + ulen, params.begin() + ulen + zlen));
  }

  std::set<std::vector<std::uint32_t>> seen;
  for (const auto& [p, zs] : slices) {
    r.points.push_back(inc.points[p]);
    if (zs.size() != 1) r.well_defined = false;
    r.z_params.push_back(*zs.begin());
    for (const auto& z : zs) {
      if (!seen.insert(z).second) r.injective = false;
    }
  }
  r.expected = thickness_formula(inc.w, inc.i, inc.j, inc.cell.front().matrix.field()->q());
  return r;
}

FiberReport fiber_points(const SubspaceCanonical& line, const WeylElement& w, int i, int j, const FieldPtr& field,
                         int n, std::uint64_t guard) {
  return fiber_points(line, build_incidence(w, i, j, field, n, guard));
}

std::vector<ThinTriple> thin_census(const RootSystemPtr& sys, std::uint64_t q, std::uint64_t guard) {
  if (!gf::split_prime_power(q)) {
    throw Error(ErrorCode::InvalidQ, std::to_string(q) + " is not a prime power");
  }
  std::vector<ThinTriple> out;
  for (const auto& w : rootsys::weyl_enumerate(sys, guard)) {
    for (int i = 1; i <= sys->rank(); ++i) {
      for (int j = 1; j <= sys->rank(); ++j) {
        if (i == j) continue;
        const auto f = parabolic::factorize_uzv(w, i, j);
        const std::uint64_t t = bounded_power(q, f.z.length(), 2);
        if (t <= 2) out.push_back({w, i, j, f.z.length(), t});
      }
    }
  }
  return out;
}

std::vector<ThinTriple> brute_thin_census(const FieldPtr& field, int n, std::uint64_t guard) {
  const auto sys = rootsys::RootSystem::make("A", n - 1);
  std::vector<ThinTriple> out;
  for (const auto& w : rootsys::weyl_enumerate(sys)) {
    for (int i = 1; i < n; ++i) {
      for (int j = 1; j < n; ++j) {
        if (i == j) continue;
        const auto inc = build_incidence(w, i, j, field, n, guard);
        const int most = *std::max_element(inc.per_line_counts.begin(), inc.per_line_counts.end());
        if (most <= 2) {
          out.push_back({w, i, j, inc.factorization.z.length(), static_cast<std::uint64_t>(most)});
        }
      }
    }
  }
  return out;
}

CosetRepresentatives::CosetRepresentatives(const FieldPtr& field, int n, int k, std::uint64_t guard) : k_(k) {
  if (n < 2 || k < 1 || k >= n) {
    throw Error(ErrorCode::IndexError, "parabolic index " + std::to_string(k) + " outside 1.." + std::to_string(n - 1));
  }
  const auto sys = rootsys::RootSystem::make("A", n - 1);
  const auto reps = parabolic::quotient_reps(parabolic::ParabolicIndexSet::whole(sys),
                                             parabolic::ParabolicIndexSet::maximal(sys, k));
  for (const auto& u : reps) {
    for (auto& cp : enumerate_cell(u, field, n, guard)) {
      auto key = chevalley::coset_key_parabolic(cp.matrix, k);
      if (!reps_.emplace(std::move(key), std::move(cp.matrix)).second) {
        throw Error(ErrorCode::InvalidStructure, "two representatives share the coset of P_" + std::to_string(k));
      }
    }
  }
}

const MatrixGF& CosetRepresentatives::representative(const SubspaceCanonical& key) const {
  const auto it = reps_.find(key);
  if (it == reps_.end()) {
    throw Error(ErrorCode::KeyNotFound, "no representative for " + key.to_string() + " in G/P_" + std::to_string(k_));
  }
  return it->second;
}

bool incidence_ratio_test(const SubspaceCanonical& point, const SubspaceCanonical& line, const SchubertIncidence& inc,
                          const CosetRepresentatives& point_reps, const CosetRepresentatives& line_reps) {
  if (inc.point_index(point) < 0) {
    throw Error(ErrorCode::KeyNotFound, point.to_string() + " is not a point of the structure");
  }
  if (inc.line_index(line) < 0) {
    throw Error(ErrorCode::KeyNotFound, line.to_string() + " is not a line of the structure");
  }
  const MatrixGF& g = point_reps.representative(point);
  const MatrixGF& h = line_reps.representative(line);
  return chevalley::is_in_borel(g * h.inverse());
}

ShortcutReport validate_incidence_shortcut(const WeylElement& w, int i, int j, const FieldPtr& field, int n,
                                           std::uint64_t guard) {
  const auto inc = build_incidence(w, i, j, field, n, guard);
  const CosetRepresentatives reps_i(field, n, i, guard);
  const CosetRepresentatives reps_j(field, n, j, guard);
  ShortcutReport r;
  r.w = rootsys::format_word(w.word());
  r.i = i;
  r.j = j;
  for (std::size_t p = 0; p < inc.points.size(); ++p) {
    for (std::size_t l = 0; l < inc.lines.size(); ++l) {
      const bool existential = inc.structure.incident(static_cast<int>(p), static_cast<int>(l));
      const bool shortcut = incidence_ratio_test(inc.points[p], inc.lines[l], inc, reps_i, reps_j);
      ++r.pairs_checked;
      if (existential == shortcut) {
        ++r.agreements;
      } else {
        r.counterexamples.push_back({inc.points[p], inc.lines[l], existential, shortcut,
                                     reps_i.representative(inc.points[p]), reps_j.representative(inc.lines[l])});
      }
    }
  }
  return r;
}

}  // namespace schubert::cells
