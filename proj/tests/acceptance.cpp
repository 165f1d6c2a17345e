// Acceptance run: one PASS/FAIL line per property, exit status 1 if any fail.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "lie/curves.hpp"
#include "lie/desing.hpp"
#include "lie/error.hpp"
#include "lie/orbits.hpp"
#include "lie/parabolic.hpp"
#include "support.hpp"

#ifndef LIE_CLI_PATH
#error "LIE_CLI_PATH must name the command line binary"
#endif

using namespace lie;
using support::rd;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<NodeSet> subsets(int n, bool nonempty) {
  std::vector<NodeSet> out;
  for (int mask = nonempty ? 1 : 0; mask < (1 << n); ++mask) {
    std::vector<int> v;
    for (int j = 0; j < n; ++j)
      if (mask >> j & 1) v.push_back(j);
    out.emplace_back(v);
  }
  return out;
}

std::string label(const RootDatum& r, const WeylElement& w) {
  return r.name() + " w=" + word_to_string(w.reduced_word(r));
}

Outcome regeneration() {
  Outcome o;
  auto t0 = Clock::now();
  const std::pair<char, int> types[] = {{'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'B', 2}, {'B', 3},
                                        {'B', 4}, {'C', 2}, {'C', 3}, {'C', 4}, {'D', 3}, {'D', 4},
                                        {'F', 4}, {'G', 2}, {'E', 6}};
  for (auto [t, n] : types) {
    auto r = rd(t, n);
    auto expect = oracle::positive_roots(r.cartan());
    if (static_cast<int>(expect.size()) != r.positive_count())
      o.fail(r.name() + " positive root count differs from alpha-string generation");
    std::set<std::vector<int>> got;
    for (int k = 0; k < r.positive_count(); ++k) got.insert(r.coords(k));
    if (got != std::set<std::vector<int>>(expect.begin(), expect.end()))
      o.fail(r.name() + " positive roots differ");
    auto again = RootDatum::from_cartan(r.type(), r.cartan());
    auto third = RootDatum::from_cartan(again.type(), again.cartan());
    if (again.roots() != r.roots() || third.roots() != again.roots() || third.cartan() != r.cartan())
      o.fail(r.name() + " rebuild from cartan matrix is not idempotent");
  }
  double s = seconds_since(t0);
  if (s >= 5.0) o.fail("took " + std::to_string(s) + " s");
  if (o.ok) o.detail = "15 types in " + std::to_string(s) + " s";
  return o;
}

Outcome closure_implication() {
  Outcome o;
  auto t0 = Clock::now();
  int count = 0;
  for (auto [t, n] : {std::pair{'A', 3}, {'C', 2}, {'G', 2}}) {
    auto r = rd(t, n);
    // every parabolic over every Borel
    std::set<std::vector<int>> seen;
    for (const auto& w : enumerate_weyl_group(r)) {
      auto b = BorelSet::make(r, apply(r, w, RootSubset::positives(r)));
      for (const auto& sigma : subsets(n, false)) {
        auto p = parabolic_from_nodes(r, sigma, b);
        if (!seen.insert(p.roots().indices()).second) continue;
        ++count;
        if (!check_fact1(r, p)) o.fail(r.name() + " counterexample at marks " + sigma.to_string());
      }
    }
  }
  double s = seconds_since(t0);
  if (s >= 10.0) o.fail("took " + std::to_string(s) + " s");
  if (o.ok) o.detail = std::to_string(count) + " parabolics";
  return o;
}

Outcome sequences() {
  Outcome o;
  auto t0 = Clock::now();
  int runs = 0;
  for (auto [t, n] : {std::pair{'A', 2}, {'A', 3}, {'C', 2}, {'G', 2}}) {
    auto r = rd(t, n);
    auto b = BorelSet::standard(r);
    for (const auto& w : enumerate_weyl_group(r)) {
      ++runs;
      auto b1p = BorelSet::make(r, apply(r, w, b.roots()));
      std::optional<ParabolicSequence> run;
      try {
        run = parabolic_sequence(r, b, b1p);
      } catch (const Error& e) {
        o.fail(label(r, w) + ": " + e.what());
        continue;
      }
      const ParabolicSequence& seq = *run;
      const auto& ref = b1p.roots();
      if (seq.terminal_index > r.positive_count()) o.fail(label(r, w) + " terminates too late");
      for (int k = 0; k < seq.terminal_index; ++k) {
        const auto& [bk, bpk] = seq.borels[k];
        const auto& [pk, ppk] = seq.parabolics[k];
        if (!bk.roots().subset_of(pk.roots()) || !bpk.roots().subset_of(ppk.roots()))
          o.fail(label(r, w) + " Borel outside its parabolic");
        if (k == 0) continue;
        const auto& [bprev, bpprev] = seq.borels[k - 1];
        const auto& [pprev, ppprev] = seq.parabolics[k - 1];
        if (!bk.roots().subset_of(pprev.roots()) || !bpk.roots().subset_of(ppprev.roots()))
          o.fail(label(r, w) + " Borel outside the previous parabolic");
        auto cur = bk.roots() | bpk.roots();
        auto prev = bprev.roots() | bpprev.roots();
        if (!cur.subset_of(prev) || cur.count() >= prev.count())
          o.fail(label(r, w) + " union does not shrink strictly");
        if (!(bprev.roots() & ref).subset_of(bk.roots() & ref) ||
            !(bk.roots() & ref).subset_of(bpk.roots() & ref) ||
            !(bpk.roots() & ref).subset_of(bpprev.roots() & ref))
          o.fail(label(r, w) + " intersection chain broken");
      }
      const auto& [pn, ppn] = seq.parabolics.back();
      if (!contains_borel(r, pn.roots() & ppn.roots()))
        o.fail(label(r, w) + " terminal intersection lacks a Borel");
      if (!seq.final_borel.roots().subset_of(pn.roots() & ppn.roots()))
        o.fail(label(r, w) + " final Borel outside the terminal intersection");
    }
  }
  double s = seconds_since(t0);
  if (s >= 30.0) o.fail("took " + std::to_string(s) + " s");
  if (o.ok) o.detail = std::to_string(runs) + " sequences";
  return o;
}

Outcome tower_dimensions() {
  Outcome o;
  int cases = 0;
  for (auto [t, n] : {std::pair{'A', 3}, {'C', 2}, {'G', 2}}) {
    auto r = rd(t, n);
    oracle::Group g(r.cartan());
    for (const auto& w : enumerate_weyl_group(r)) {
      ++cases;
      int expect = g.length(support::matrix_of(g, w, r));
      int got = tower_dimension(build_tower(r, NodeSet::all(n), w));
      if (got != expect)
        o.fail(label(r, w) + ": " + std::to_string(got) + " vs " + std::to_string(expect));
    }
  }
  if (o.ok) o.detail = std::to_string(cases) + " elements";
  return o;
}

Outcome refinement() {
  Outcome o;
  int cases = 0;
  const std::pair<char, int> types[] = {{'A', 1}, {'A', 2}, {'A', 3}, {'B', 2}, {'G', 2}, {'B', 3}, {'C', 3}};
  for (auto [t, n] : types) {
    auto r = rd(t, n);
    oracle::Group g(r.cartan());
    for (const auto& p : subsets(n, false)) {
      for (const auto& w : enumerate_weyl_group(r)) {
        ++cases;
        try {
          auto tw = build_tower(r, p, w);
          auto c = demazure_refinement(r, tw);
          auto target = support::matrix_of(g, tw.base_word, r);
          if (static_cast<int>(c.word.size()) != g.length(target))
            o.fail(label(r, w) + " refined word is not reduced");
          if (!(g.word(c.word) == target)) o.fail(label(r, w) + " refined word has the wrong product");
          auto groups = regroup(tw, c);
          if (groups.size() != tw.factors.size()) o.fail(label(r, w) + " regrouping lost factors");
        } catch (const Error& e) {
          o.fail(label(r, w) + ": " + e.what());
        }
      }
    }
  }
  if (o.ok) o.detail = std::to_string(cases) + " (P, w) pairs";
  return o;
}

Outcome codimension() {
  Outcome o;
  int pairs = 0;
  for (auto [t, n] : {std::pair{'A', 3}, {'C', 2}}) {
    auto r = rd(t, n);
    oracle::Group g(r.cartan());
    for (const auto& p : subsets(n, true))
      for (const auto& pp : subsets(n, true)) {
        ++pairs;
        auto codim = oracle::complement_codim(g, p.nodes(), pp.nodes());
        bool expect = !codim || *codim >= 2;
        if (complement_codim_ge2(r, p, pp) != expect)
          o.fail(r.name() + " " + p.to_string() + " " + pp.to_string());
      }
  }
  if (pairs != 58) o.fail("expected 58 pairs, saw " + std::to_string(pairs));
  if (o.ok) o.detail = "58 pairs";
  return o;
}

Outcome smoothness() {
  Outcome o;
  auto r = rd('A', 3);
  oracle::Group g(r.cartan());
  std::vector<std::string> gaps;
  for (const auto& w : enumerate_weyl_group(r)) {
    bool smooth = g.rationally_smooth(support::matrix_of(g, w, r));
    bool crit = smoothness_sufficient(r, NodeSet::all(3), w);
    if (crit && !smooth) o.fail(label(r, w) + " criterion true on a singular variety");
    if (smooth && !crit) gaps.push_back(word_to_string(w.reduced_word(r)));
  }
  if (gaps.empty()) o.fail("no smooth element escapes the criterion");
  if (o.ok) o.detail = std::to_string(gaps.size()) + " smooth elements outside the criterion, e.g. w=" + gaps[0];
  return o;
}

Outcome levi_fixture() {
  Outcome o;
  auto r = rd('A', 4);
  auto q = levi_quotient(r, NodeSet{1}, NodeSet{1});
  int planes = 0;
  for (const auto& f : q.factors) {
    if (f.marked.empty()) continue;
    bool end_mark = f.marked.size() == 1 &&
                    (f.marked.nodes()[0] == f.nodes.front() || f.marked.nodes()[0] == f.nodes.back());
    if (f.type == LieType::A && f.rank == 2 && end_mark) {
      ++planes;
      if (f.nodes != std::vector<int>{2, 3} || !(f.marked == NodeSet{2}))
        o.fail("plane factor sits on the wrong nodes");
      o.detail = "A2 on " + NodeSet(f.nodes).to_string() + " marked at " + f.marked.to_string();
    } else {
      o.fail("unexpected marked factor");
    }
  }
  if (planes != 1) o.fail("expected exactly one projective plane factor");
  return o;
}

Outcome curve_arithmetic() {
  Outcome o;
  for (int n = 1; n <= 6; ++n) {
    if (tangent_degree(rd('A', n), NodeSet{0}, CurveClass(NodeSet{0}, {1})) != n + 1)
      o.fail("tangent degree of a line in P" + std::to_string(n));
  }
  auto a3 = rd('A', 3);
  if (hilbert_dimension(a3, NodeSet{0}, CurveClass(NodeSet{0}, {1})).dimension != 4) o.fail("lines in P3");
  if (hilbert_dimension(a3, NodeSet{0}, CurveClass(NodeSet{0}, {2})).dimension != 8) o.fail("conics in P3");
  int compared = 0;
  const std::pair<char, int> types[] = {{'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'C', 2}, {'G', 2}};
  for (auto [t, n] : types) {
    auto r = rd(t, n);
    for (const auto& sigma : subsets(n, true)) {
      auto coeff = oracle::tangent_coefficients(r.cartan(), sigma.nodes());
      std::vector<int> d(sigma.size(), 0);
      while (true) {
        long expect = 0;
        for (std::size_t k = 0; k < d.size(); ++k) expect += coeff[k] * d[k];
        ++compared;
        if (tangent_degree(r, sigma, CurveClass(sigma, d)) != expect)
          o.fail(r.name() + " " + sigma.to_string() + " routes disagree");
        std::size_t i = 0;
        while (i < d.size() && d[i] == 3) d[i++] = 0;
        if (i == d.size()) break;
        ++d[i];
      }
    }
  }
  if (o.ok) o.detail = std::to_string(compared) + " classes";
  return o;
}

Outcome decision_table() {
  Outcome o;
  auto a1 = rd('A', 1), a2 = rd('A', 2), a3 = rd('A', 3);
  NodeSet flag3{0, 1, 2};
  for (int d = 1; d <= 5; ++d) {
    if (decide_smooth_rational_curve(a1, NodeSet{0}, CurveClass(NodeSet{0}, {d})).smooth_curve_exists !=
        oracle::smooth_on_p1(d))
      o.fail("P1 degree " + std::to_string(d));
    if (decide_smooth_rational_curve(a2, NodeSet{0}, CurveClass(NodeSet{0}, {d})).smooth_curve_exists !=
        oracle::smooth_on_p2(d))
      o.fail("P2 degree " + std::to_string(d));
    for (int e = 1; e <= 5; ++e)
      if (decide_smooth_rational_curve(a3, flag3, CurveClass(flag3, {d, 0, e})).smooth_curve_exists !=
          oracle::smooth_on_p1xp1(d, e))
        o.fail("P1xP1 bidegree " + std::to_string(d) + "," + std::to_string(e));
  }
  for (int d = 1; d <= 3; ++d) {
    if (!decide_smooth_rational_curve(a3, NodeSet{0}, CurveClass(NodeSet{0}, {d})).smooth_curve_exists)
      o.fail("P3 degree " + std::to_string(d));
    if (!decide_smooth_rational_curve(a3, NodeSet{1}, CurveClass(NodeSet{1}, {d})).smooth_curve_exists)
      o.fail("G(2,4) degree " + std::to_string(d));
    for (int e = 1; e <= 3; ++e)
      if (!decide_smooth_rational_curve(a2, NodeSet{0, 1}, CurveClass(NodeSet{0, 1}, {d, e}))
               .smooth_curve_exists)
        o.fail("A2 flag class " + std::to_string(d) + "," + std::to_string(e));
  }
  return o;
}

Outcome longest_towers() {
  Outcome o;
  for (int n = 1; n <= 4; ++n) {
    auto r = rd('A', n);
    auto t = build_tower(r, NodeSet::all(n), longest_element(r));
    if (t.factors.size() != 1 || !(t.factors[0].roots.roots() == RootSubset::all(r)))
      o.fail(r.name() + " tower has " + std::to_string(t.factors.size()) + " factors");
  }
  return o;
}

std::string capture(const std::string& cmd) {
  std::array<char, 4096> buf{};
  std::string out;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) return "<popen failed>";
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
  return out;
}

Outcome cli_determinism() {
  Outcome o;
  const std::string bin = LIE_CLI_PATH;
  const std::pair<std::string, std::string> cases[] = {
      {"desing --type A --rank 2 --word \"1 2 1\" --format json", ""},
      {"codim --type A --rank 3 --p 1 --pprime 1", "true\n"},
      {"hilbert --type A --rank 3 --p 1 --degrees 2", "8\n"},
  };
  for (const auto& [args, expect] : cases) {
    std::string cmd = "\"" + bin + "\" " + args + " 2>&1";
    std::string first = capture(cmd), second = capture(cmd);
    if (first != second) o.fail("output changed between runs: " + args);
    if (first.empty()) o.fail("no output: " + args);
    if (!expect.empty() && first != expect) o.fail("unexpected output for " + args + ": " + first);
  }
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> checks[] = {
      {"root systems regenerate from their Cartan matrices", regeneration},
      {"closure implication holds on every parabolic of A3, C2, G2", closure_implication},
      {"parabolic sequences keep their chain invariants and terminate", sequences},
      {"tower dimension equals the length of w", tower_dimensions},
      {"refined chains give reduced words that regroup to the tower", refinement},
      {"diagram codimension test agrees with orbit enumeration", codimension},
      {"sufficient smoothness is sound with a smooth gap in A3", smoothness},
      {"Levi quotient of A4 at the second node is a projective plane", levi_fixture},
      {"tangent degrees and Hilbert dimensions", curve_arithmetic},
      {"smooth rational curve decision table", decision_table},
      {"longest element tower is a single full factor", longest_towers},
      {"command line output is byte-identical across runs", cli_determinism},
  };
  int failed = 0;
  for (const auto& [name, fn] : checks) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    if (!o.ok) ++failed;
    std::cout << (o.ok ? "PASS  " : "FAIL  ") << name;
    if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
    std::cout << "\n";
  }
  std::cout << (sizeof(checks) / sizeof(checks[0]) - failed) << "/" << sizeof(checks) / sizeof(checks[0])
            << " passed\n";
  return failed == 0 ? 0 : 1;
}
