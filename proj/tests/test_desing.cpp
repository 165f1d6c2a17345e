#include <doctest.h>

#include "lie/desing.hpp"
#include "lie/error.hpp"
#include "lie/orbits.hpp"
#include "support.hpp"

using namespace lie;
using support::rd;

namespace {

const std::pair<char, int> kSmall[] = {{'A', 1}, {'A', 2}, {'A', 3}, {'B', 2}, {'C', 2}, {'G', 2}, {'B', 3}, {'C', 3}};

std::vector<NodeSet> subsets(int n) {
  std::vector<NodeSet> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> v;
    for (int j = 0; j < n; ++j)
      if (mask >> j & 1) v.push_back(j);
    out.emplace_back(v);
  }
  return out;
}

}  // namespace

TEST_CASE("borel completion") {
  auto r = rd('A', 3);
  NodeSet all = NodeSet::all(3);
  for (const auto& w : enumerate_weyl_group(r)) {
    auto c = borel_completion(r, all, all, w);
    CHECK(c.w_prime == w);
  }
  for (const auto& p : subsets(3))
    for (const auto& pp : subsets(3))
      for (const auto& w : enumerate_weyl_group(r)) {
        auto c = borel_completion(r, p, pp, w);
        auto plus = RootSubset::positives(r);
        auto lhs = plus | apply(r, c.w_prime, plus);
        auto rhs = standard_parabolic_roots(r, p) | apply(r, c.w_prime, standard_parabolic_roots(r, pp));
        CHECK(lhs == rhs);
        CHECK(minimal_double_coset_rep(r, c.w_prime, p.complement(3), pp.complement(3)) ==
              minimal_double_coset_rep(r, w, p.complement(3), pp.complement(3)));
      }
}

TEST_CASE("tower fixtures") {
  auto a2 = rd('A', 2);
  NodeSet b{0, 1};
  auto top = build_tower(a2, b, longest_element(a2));
  REQUIRE(top.factors.size() == 1);
  CHECK(top.factors[0].roots.roots() == RootSubset::all(a2));
  CHECK(tower_dimension(top) == 3);

  auto line = build_tower(a2, b, WeylElement::from_word(a2, {0}));
  REQUIRE(line.factors.size() == 1);
  CHECK(line.factors[0].roots.roots().count() == 4);
  CHECK(tower_dimension(line) == 1);

  auto a3 = rd('A', 3);
  auto t = build_tower(a3, NodeSet::all(3), WeylElement::from_word(a3, {1, 0, 2, 1}));
  CHECK(tower_dimension(t) == 4);
}

TEST_CASE("tower structure and dimension over whole groups") {
  for (auto [ty, n] : kSmall) {
    auto r = rd(ty, n);
    oracle::Group g(r.cartan());
    for (const auto& w : enumerate_weyl_group(r)) {
      auto t = build_tower(r, NodeSet::all(n), w);
      CHECK(tower_dimension(t) == g.length(support::matrix_of(g, w, r)));
      REQUIRE(t.junctions.size() + 1 == t.factors.size());
      for (std::size_t k = 0; k < t.junctions.size(); ++k) {
        CHECK(t.junctions[k].subset_of(t.factors[k].roots.roots()));
        CHECK(t.junctions[k].subset_of(t.factors[k + 1].roots.roots()));
        CHECK(contains_borel(r, t.junctions[k]).has_value());
      }
    }
  }
}

TEST_CASE("towers over larger quotients") {
  for (auto [ty, n] : {std::pair{'A', 3}, {'C', 2}, {'G', 2}}) {
    auto r = rd(ty, n);
    for (const auto& p : subsets(n)) {
      for (const auto& w : enumerate_weyl_group(r)) {
        auto t = build_tower(r, p, w);
        CHECK(tower_dimension(t) == t.base_word.length() - levi_positive_count(r, p));
      }
    }
  }
}

TEST_CASE("refinement fixtures") {
  auto a2 = rd('A', 2);
  NodeSet b{0, 1};
  auto line = demazure_refinement(a2, build_tower(a2, b, WeylElement::from_word(a2, {0})));
  CHECK(line.word == std::vector<int>{0});
  CHECK(line.minimal_factors.size() == 1);

  auto w0 = longest_element(a2);
  auto top = demazure_refinement(a2, build_tower(a2, b, w0));
  CHECK(top.word.size() == 3);
  CHECK(WeylElement::from_word(a2, top.word) == w0);
}

TEST_CASE("refinement is reduced and regroups") {
  for (auto [ty, n] : kSmall) {
    auto r = rd(ty, n);
    oracle::Group g(r.cartan());
    for (const auto& p : subsets(n)) {
      if (n == 3 && p.size() < 2) continue;
      for (const auto& w : enumerate_weyl_group(r)) {
        auto t = build_tower(r, p, w);
        auto c = demazure_refinement(r, t);
        auto target = support::matrix_of(g, t.base_word, r);
        CHECK(static_cast<int>(c.word.size()) == t.base_word.length());
        CHECK(g.word(c.word) == target);
        auto groups = regroup(t, c);
        CHECK(groups.size() == t.factors.size());
      }
    }
  }
}

TEST_CASE("regrouping rejects a scrambled chain") {
  auto r = rd('A', 3);
  auto t = build_tower(r, NodeSet::all(3), longest_element(r).times_simple(r, 0));
  auto c = demazure_refinement(r, t);
  REQUIRE(t.factors.size() > 1);
  std::reverse(c.owner.begin(), c.owner.end());
  CHECK_THROWS(regroup(t, c));
}

TEST_CASE("sufficient smoothness") {
  auto a2 = rd('A', 2);
  CHECK(smoothness_sufficient(a2, NodeSet{0, 1}, longest_element(a2)));
  CHECK(smoothness_sufficient(a2, NodeSet{0, 1}, WeylElement::from_word(a2, {0})));
  auto a3 = rd('A', 3);
  CHECK_FALSE(smoothness_sufficient(a3, NodeSet::all(3), WeylElement::from_word(a3, {1, 0, 2, 1})));
}

TEST_CASE("sufficient smoothness is sound against two oracles") {
  auto r = rd('A', 3);
  oracle::Group g(r.cartan());
  int gaps = 0;
  for (const auto& w : enumerate_weyl_group(r)) {
    auto m = support::matrix_of(g, w, r);
    bool rs = g.rationally_smooth(m);
    bool patterns = oracle::smooth_by_patterns(oracle::one_line(4, w.reduced_word(r)));
    CHECK(rs == patterns);
    CHECK((reflections_below(r, w) == w.length()) == rs);
    if (smoothness_sufficient(r, NodeSet::all(3), w)) CHECK(rs);
    if (rs && !smoothness_sufficient(r, NodeSet::all(3), w)) ++gaps;
  }
  CHECK(gaps > 0);
}

TEST_CASE("minimal schubert varieties") {
  auto a2 = rd('A', 2);
  auto top = minimal_schubert(a2, NodeSet{0, 1}, longest_element(a2));
  CHECK(top.p1_nodes.empty());
  CHECK(top.minimal_dimension == 0);

  auto line = minimal_schubert(a2, NodeSet{0, 1}, WeylElement::from_word(a2, {0}));
  CHECK_FALSE(line.is_minimal);
  CHECK(line.p1_nodes == NodeSet{1});
  CHECK(line.minimal_dimension == 0);

  auto a3 = rd('A', 3);
  auto w = WeylElement::from_word(a3, {1, 0, 2, 1});
  auto m = minimal_schubert(a3, NodeSet::all(3), w);
  CHECK(m.minimal_dimension == 4 - levi_positive_count(a3, m.p1_nodes));

  auto e = minimal_schubert(a3, NodeSet::all(3), WeylElement::identity(a3));
  CHECK(e.is_minimal);
}

TEST_CASE("dense orbit of the first primed factor") {
  for (auto [ty, n] : {std::pair{'A', 3}, {'C', 2}, {'G', 2}}) {
    auto r = rd(ty, n);
    for (const auto& w : enumerate_weyl_group(r)) {
      auto t = build_tower(r, NodeSet::all(n), w);
      const auto& first = t.factors.front();
      REQUIRE(first.index == 1);
      CHECK(first.kind != FactorKind::Unprimed);
      // P'_1 is w'(Q) for the standard parabolic Q marked by sigma
      CHECK(first.roots.roots() == apply(r, t.base_word, standard_parabolic_roots(r, first.sigma)));
      CHECK(orbit_dimension(r, t.base_word, NodeSet::all(n), first.sigma) == t.base_word.length());
    }
  }
}

TEST_CASE("enlargement hook and dot output") {
  auto a3 = rd('A', 3);
  auto t = build_tower(a3, NodeSet::all(3), WeylElement::from_word(a3, {1, 0, 2, 1}));
  CHECK(validate_enlargement(a3, t, 1, t.sequence.parabolics[0].first.roots()));
  CHECK_FALSE(validate_enlargement(a3, t, 1, RootSubset::all(a3)));
  CHECK_THROWS_AS(validate_enlargement(a3, t, 0, RootSubset::all(a3)), InvalidArgument);
  auto dot = tower_dot(a3, t);
  CHECK(dot.find("digraph tower_A3") == 0);
  CHECK(tower_dot(a3, t) == dot);
}

TEST_CASE("the longest element gives one full factor") {
  for (int n = 1; n <= 4; ++n) {
    auto r = rd('A', n);
    auto t = build_tower(r, NodeSet::all(n), longest_element(r));
    REQUIRE(t.factors.size() == 1);
    CHECK(t.factors[0].roots.roots() == RootSubset::all(r));
  }
}
