#include <algorithm>

#include "doctest.h"
#include "schubert/parabolic.hpp"
#include "test_util.hpp"

using namespace schubert;
using namespace schubert::rootsys;
using namespace schubert::parabolic;
using schubert::testing::error_of;

namespace {

std::vector<Word> words(const std::vector<WeylElement>& elements) {
  std::vector<Word> out;
  for (const auto& w : elements) out.push_back(w.word());
  return out;
}

bool disjoint(const std::vector<Root>& a, const std::vector<Root>& b) {
  return std::none_of(a.begin(), a.end(), [&](const Root& r) { return std::find(b.begin(), b.end(), r) != b.end(); });
}

bool subset(const std::vector<Root>& a, const std::vector<Root>& b) {
  return std::all_of(a.begin(), a.end(), [&](const Root& r) { return std::find(b.begin(), b.end(), r) != b.end(); });
}

// {w in W_big : R(w) avoids R^+ of small}, by the inversion-set definition.
std::vector<WeylElement> reps_by_definition(const ParabolicIndexSet& big, const ParabolicIndexSet& small) {
  std::vector<WeylElement> out;
  const auto small_roots = positive_roots_of(small);
  for (const auto& w : parabolic_elements(big)) {
    if (disjoint(w.inversion_set(), small_roots)) out.push_back(w);
  }
  return out;
}

}  // namespace

TEST_CASE("positive_roots_of examples") {
  const auto a3 = RootSystem::make("A", 3);
  CHECK(positive_roots_of(ParabolicIndexSet::maximal(a3, 1)) == std::vector<Root>{{0, 1, 0}, {0, 0, 1}, {0, 1, 1}});
  CHECK(positive_roots_of(ParabolicIndexSet::pair(a3, 1, 2)) == std::vector<Root>{{0, 0, 1}});
  CHECK(positive_roots_of(ParabolicIndexSet(a3, {1, 2, 3})).empty());
  CHECK(positive_roots_of(ParabolicIndexSet::whole(a3)).size() == 6);
}

TEST_CASE("ParabolicIndexSet validation and membership") {
  const auto a3 = RootSystem::make("A", 3);
  CHECK(error_of([&] { ParabolicIndexSet(a3, {4}); }) == ErrorCode::IndexError);
  CHECK(error_of([&] { ParabolicIndexSet(a3, {0}); }) == ErrorCode::IndexError);
  const auto w2 = ParabolicIndexSet::maximal(a3, 2);
  CHECK(w2.generators() == std::vector<int>{1, 3});
  CHECK(w2.contains(WeylElement::from_word(a3, {1, 3})));
  CHECK_FALSE(w2.contains(WeylElement::from_word(a3, {1, 2})));
  CHECK(ParabolicIndexSet(a3, {2, 1, 2}).omitted() == std::vector<int>{1, 2});
  CHECK(parabolic_elements(w2).size() == 4);
}

TEST_CASE("min_coset_rep examples") {
  const auto a3 = RootSystem::make("A", 3);
  const auto w2 = ParabolicIndexSet::maximal(a3, 2);
  const auto id = min_coset_rep(WeylElement::identity(a3), w2);
  CHECK(id.u.is_identity());
  CHECK(id.y.is_identity());

  const auto w = WeylElement::from_word(a3, {2, 1, 3, 2});
  const auto split = min_coset_rep(w, w2);
  CHECK(split.u == w);
  CHECK(split.y.is_identity());

  const auto split2 = min_coset_rep(WeylElement::from_word(a3, {2, 1}), w2);
  CHECK(split2.u.word() == Word{2});
  CHECK(split2.y.word() == Word{1});
}

TEST_CASE("min_coset_rep invariants") {
  for (auto [type, rank] : std::vector<std::pair<std::string, int>>{{"A", 3}, {"B", 3}, {"G2", 2}}) {
    const auto sys = RootSystem::make(type, rank);
    for (int j = 1; j <= rank; ++j) {
      const auto pi = ParabolicIndexSet::maximal(sys, j);
      for (const auto& w : weyl_enumerate(sys)) {
        const auto s = min_coset_rep(w, pi);
        CHECK(s.u * s.y == w);
        CHECK(s.u.length() + s.y.length() == w.length());
        CHECK(is_min_coset_rep(s.u, pi));
        CHECK(pi.contains(s.y));
      }
    }
  }
}

TEST_CASE("quotient_reps match the listed sets for A3") {
  const auto a3 = RootSystem::make("A", 3);
  const auto whole = ParabolicIndexSet::whole(a3);
  CHECK(words(quotient_reps(whole, ParabolicIndexSet::maximal(a3, 1))) ==
        std::vector<Word>{{}, {1}, {2, 1}, {3, 2, 1}});
  CHECK(words(quotient_reps(whole, ParabolicIndexSet::maximal(a3, 2))) ==
        std::vector<Word>{{}, {2}, {1, 2}, {3, 2}, {1, 3, 2}, {2, 1, 3, 2}});
  CHECK(words(quotient_reps(ParabolicIndexSet::maximal(a3, 2), ParabolicIndexSet::pair(a3, 1, 2))) ==
        std::vector<Word>{{}, {1}});
}

TEST_CASE("quotient_reps equal the inversion-set definition and satisfy Lagrange") {
  for (auto [type, rank] : std::vector<std::pair<std::string, int>>{{"A", 3}, {"A", 4}, {"B", 3}, {"C", 3}, {"D", 4}}) {
    const auto sys = RootSystem::make(type, rank);
    const auto whole = ParabolicIndexSet::whole(sys);
    for (int j = 1; j <= rank; ++j) {
      const auto wj = ParabolicIndexSet::maximal(sys, j);
      const auto reps = quotient_reps(whole, wj);
      CHECK(reps == reps_by_definition(whole, wj));
      CHECK(reps.size() * parabolic_elements(wj).size() == sys->weyl_order());
      for (int i = 1; i <= rank; ++i) {
        if (i == j) continue;
        const auto wij = ParabolicIndexSet::pair(sys, i, j);
        const auto inner = quotient_reps(wj, wij);
        CHECK(inner == reps_by_definition(wj, wij));
        CHECK(inner.size() * parabolic_elements(wij).size() == parabolic_elements(wj).size());
      }
    }
  }
}

TEST_CASE("quotient_reps requires nesting") {
  const auto a3 = RootSystem::make("A", 3);
  CHECK(error_of([&] {
          quotient_reps(ParabolicIndexSet::maximal(a3, 1), ParabolicIndexSet::maximal(a3, 2));
        }) == ErrorCode::NotNested);
  CHECK(error_of([&] {
          quotient_reps(ParabolicIndexSet::pair(a3, 1, 2), ParabolicIndexSet::maximal(a3, 1));
        }) == ErrorCode::NotNested);
}

TEST_CASE("factorize_uzv examples") {
  const auto a3 = RootSystem::make("A", 3);
  const auto w = WeylElement::from_word(a3, {1, 3, 2, 1, 3});
  const auto f = factorize_uzv(w, 1, 2);
  CHECK(f.u == WeylElement::from_word(a3, {1, 3, 2}));
  CHECK(f.z == WeylElement::from_word(a3, {1}));
  CHECK(f.v == WeylElement::from_word(a3, {3}));
  CHECK(f.combined_word() == Word{1, 3, 2, 1, 3});

  const auto g = factorize_uzv(WeylElement::identity(a3), 1, 2);
  CHECK(g.u.is_identity());
  CHECK(g.z.is_identity());
  CHECK(g.v.is_identity());

  const auto h = factorize_uzv(WeylElement::from_word(a3, {1, 2}), 1, 2);
  CHECK(h.u.word() == Word{1, 2});
  CHECK(h.z.is_identity());
  CHECK(h.v.is_identity());
}

TEST_CASE("factorize_uzv index errors") {
  const auto a3 = RootSystem::make("A", 3);
  const auto w = WeylElement::identity(a3);
  CHECK(error_of([&] { factorize_uzv(w, 1, 1); }) == ErrorCode::IndexError);
  CHECK(error_of([&] { factorize_uzv(w, 0, 1); }) == ErrorCode::IndexError);
  CHECK(error_of([&] { factorize_uzv(w, 1, 4); }) == ErrorCode::IndexError);
  CHECK(error_of([] { factorize_uzv(WeylElement::identity(RootSystem::make("A", 1)), 1, 2); }) ==
        ErrorCode::IndexError);
}

TEST_CASE("factorization is the unique triple and satisfies every invariant") {
  for (auto [type, rank] : std::vector<std::pair<std::string, int>>{{"A", 3}, {"B", 2}, {"A", 4}, {"G2", 2}}) {
    const auto sys = RootSystem::make(type, rank);
    CAPTURE(sys->label());
    const auto whole = ParabolicIndexSet::whole(sys);
    for (int j = 1; j <= rank; ++j) {
      const auto wj = ParabolicIndexSet::maximal(sys, j);
      const auto us = quotient_reps(whole, wj);
      for (int i = 1; i <= rank; ++i) {
        if (i == j) continue;
        const auto wij = ParabolicIndexSet::pair(sys, i, j);
        const auto zs = quotient_reps(wj, wij);
        const auto vs = parabolic_elements(wij);
        const auto rj = positive_roots_of(wj);
        const auto rij = positive_roots_of(wij);
        const auto ri = positive_roots_of(ParabolicIndexSet::maximal(sys, i));
        for (const auto& w : weyl_enumerate(sys)) {
          const auto f = factorize_uzv(w, i, j);
          CHECK(f.u * f.z * f.v == w);
          CHECK(f.u.length() + f.z.length() + f.v.length() == w.length());
          CHECK(disjoint(f.u.inversion_set(), rj));
          CHECK(subset(f.z.inversion_set(), rj));
          CHECK(disjoint(f.z.inversion_set(), rij));
          CHECK(disjoint(f.z.inversion_set(), ri));
          CHECK(wij.contains(f.v));
          CHECK(WeylElement::from_word(sys, f.combined_word()) == w);

          int matches = 0;
          for (const auto& u : us) {
            for (const auto& z : zs) {
              const auto uz = u * z;
              for (const auto& v : vs) {
                if (uz * v == w) {
                  ++matches;
                  CHECK(u == f.u);
                  CHECK(z == f.z);
                  CHECK(v == f.v);
                }
              }
            }
          }
          CHECK(matches == 1);
        }
      }
    }
  }
}
