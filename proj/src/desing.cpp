#include "lie/desing.hpp"

#include <sstream>

#include "lie/error.hpp"
#include "lie/orbits.hpp"

namespace lie {

BorelCompletion borel_completion(const RootDatum& rd, const NodeSet& p_nodes,
                                 const NodeSet& pprime_nodes, const WeylElement& w) {
  const RootSubset p = standard_parabolic_roots(rd, p_nodes);
  const RootSubset wpp = apply(rd, w, standard_parabolic_roots(rd, pprime_nodes));
  const RootSubset target = p | wpp;

  BorelSet b = BorelSet::standard(rd);
  BorelSet bp = BorelSet::make(rd, apply(rd, w, RootSubset::positives(rd)));
  BorelFrame fb = borel_frame(rd, b);
  BorelFrame fbp = borel_frame(rd, bp);

  // Adjoin a missing -alpha_0 by reflecting through a simple root of the
  // Borel on the side whose parabolic contains it.
  auto repair = [&](BorelSet& x, BorelFrame& fx, const RootSubset& side) {
    RootSubset hull = b.roots() | bp.roots();
    for (int j = 0; j < rd.rank(); ++j) {
      int m = rd.negate(fx.simple[j]);
      if (side.contains(m) && !hull.contains(m)) {
        x = reflect_borel(rd, x, fx.simple[j]);
        fx = BorelFrame{fx.u.times_simple(rd, j), {}};
        for (int i = 0; i < rd.rank(); ++i) fx.simple.push_back(fx.u.act(i));
        return true;
      }
    }
    return false;
  };
  int steps = 0;
  while (repair(b, fb, p) || repair(bp, fbp, wpp)) {
    if (++steps > rd.positive_count())
      throw InternalConsistencyError("Borel completion exceeded positive_count repairs");
  }
  if (!((b.roots() | bp.roots()) == target))
    throw InternalConsistencyError("Borel completion did not reach p + w(p')");

  WeylElement u = fb.u;
  WeylElement w_prime = u.inverse().compose(fbp.u);
  w_prime = WeylElement::from_word(rd, w_prime.reduced_word(rd));
  RootSubset lhs = RootSubset::positives(rd) | apply(rd, w_prime, RootSubset::positives(rd));
  RootSubset rhs = p | apply(rd, w_prime, standard_parabolic_roots(rd, pprime_nodes));
  if (!(lhs == rhs)) throw InternalConsistencyError("translated completion lost the root-set identity");
  return BorelCompletion{BorelSet::standard(rd), w_prime, u};
}

DesingTower build_tower(const RootDatum& rd, const NodeSet& p_nodes, const WeylElement& w) {
  BorelCompletion bc = borel_completion(rd, p_nodes, NodeSet::all(rd.rank()), w);
  BorelSet b = BorelSet::standard(rd);
  BorelSet bp = BorelSet::make(rd, apply(rd, bc.w_prime, RootSubset::positives(rd)));
  ParabolicSequence seq = parabolic_sequence(rd, b, bp);
  const int n = seq.terminal_index;

  std::vector<TowerFactor> factors;
  for (int k = 1; k <= n; ++k) {
    const auto& pp = seq.parabolics[k - 1].second;
    factors.push_back({pp, FactorKind::Primed, k, marked_nodes(rd, pp, seq.borels[k - 1].second)});
  }
  for (int k = n; k >= 1; --k) {
    const auto& p = seq.parabolics[k - 1].first;
    if (k == n && p == factors.back().roots) {
      factors.back().kind = FactorKind::Merged;
      continue;
    }
    factors.push_back({p, FactorKind::Unprimed, k, marked_nodes(rd, p, seq.borels[k - 1].first)});
  }
  std::vector<RootSubset> junctions;
  for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
    RootSubset j = factors[i].roots.roots() & factors[i + 1].roots.roots();
    if (!contains_borel(rd, j)) throw InternalConsistencyError("tower junction contains no Borel");
    junctions.push_back(std::move(j));
  }
  RootSubset q = standard_parabolic_roots(rd, p_nodes);
  if (!q.subset_of(factors.back().roots.roots()))
    throw InternalConsistencyError("quotient parabolic is not contained in P_1");
  return DesingTower{std::move(factors), std::move(junctions), bc.w_prime, p_nodes, q, std::move(seq)};
}

int tower_dimension(const DesingTower& t) {
  int d = 0;
  for (const auto& f : t.factors) d += f.roots.roots().count();
  for (const auto& j : t.junctions) d -= j.count();
  return d - t.quotient_roots.count();
}

RefinedChain demazure_refinement(const RootDatum& rd, const DesingTower& t) {
  const ParabolicSequence& seq = t.sequence;
  const int n = seq.terminal_index;
  const BorelSet& ref = seq.borels.front().second;  // B'_1

  // Position of P_k and P'_k in the factor list.
  auto position = [&](FactorKind kind, int k) {
    for (std::size_t i = 0; i < t.factors.size(); ++i) {
      const auto& f = t.factors[i];
      if (f.index != k) continue;
      if (f.kind == kind || f.kind == FactorKind::Merged) return static_cast<int>(i);
    }
    throw InternalConsistencyError("tower factor missing");
  };

  std::vector<BorelSet> borels{seq.borels.front().first};
  std::vector<int> owners;  // owner of the step from borels[i] to borels[i+1]
  auto extend = [&](const ParabolicSet& p, const BorelSet& to, int owner) {
    auto seg = borel_chain(rd, p, ref, borels.back(), to);
    for (std::size_t i = 1; i < seg.size(); ++i) {
      borels.push_back(std::move(seg[i]));
      owners.push_back(owner);
    }
  };
  for (int k = 1; k < n; ++k)
    extend(seq.parabolics[k - 1].first, seq.borels[k].first, position(FactorKind::Unprimed, k));
  extend(seq.parabolics[n - 1].first, seq.final_borel, position(FactorKind::Unprimed, n));
  extend(seq.parabolics[n - 1].second, seq.borels[n - 1].second, position(FactorKind::Primed, n));
  for (int k = n - 1; k >= 1; --k)
    extend(seq.parabolics[k - 1].second, seq.borels[k - 1].second, position(FactorKind::Primed, k));

  RefinedChain out;
  WeylElement u = WeylElement::identity(rd);
  for (std::size_t i = 0; i + 1 < borels.size(); ++i) {
    // borels[i+1] = s_beta(borels[i]) with beta = u(alpha_j).
    int beta = -1;
    for (int k : borels[i].roots().indices())
      if (!borels[i + 1].contains(k)) beta = k;
    int j = -1;
    for (int node = 0; node < rd.rank(); ++node)
      if (u.act(node) == beta) j = node;
    if (j < 0) throw InternalConsistencyError("refinement step is not a simple reflection");
    out.word.push_back(j);
    u = u.times_simple(rd, j);
  }
  if (!(u == t.base_word)) throw InternalConsistencyError("refined word does not multiply to w'");

  for (std::size_t i = borels.size() - 1; i >= 1; --i) {
    out.minimal_factors.push_back(ParabolicSet::make(rd, borels[i].roots() | borels[i - 1].roots()));
    out.owner.push_back(owners[i - 1]);
  }
  out.borels = std::move(borels);
  return out;
}

std::vector<std::vector<int>> regroup(const DesingTower& t, const RefinedChain& chain) {
  std::vector<std::vector<int>> groups(t.factors.size());
  int last = 0;
  for (std::size_t i = 0; i < chain.minimal_factors.size(); ++i) {
    int o = chain.owner[i];
    if (o < last) throw InternalConsistencyError("refined chain is out of tower order");
    if (!chain.minimal_factors[i].roots().subset_of(t.factors[o].roots.roots()))
      throw InternalConsistencyError("minimal factor escapes its coarse factor");
    groups[o].push_back(static_cast<int>(i));
    last = o;
  }
  return groups;
}

bool smoothness_sufficient(const RootDatum& rd, const NodeSet& p_nodes, const WeylElement& w) {
  BorelCompletion bc = borel_completion(rd, p_nodes, NodeSet::all(rd.rank()), w);
  BorelSet b = BorelSet::standard(rd);
  BorelSet bp = BorelSet::make(rd, apply(rd, bc.w_prime, RootSubset::positives(rd)));
  auto [p1, p1p] = max_parabolic_pair(rd, b, bp);
  return contains_borel(rd, p1.roots() & p1p.roots()).has_value();
}

MinimalSchubert minimal_schubert(const RootDatum& rd, const NodeSet& p_nodes, const WeylElement& w) {
  BorelCompletion bc = borel_completion(rd, p_nodes, NodeSet::all(rd.rank()), w);
  BorelSet b = BorelSet::standard(rd);
  BorelSet bp = BorelSet::make(rd, apply(rd, bc.w_prime, RootSubset::positives(rd)));
  auto [p1, p1p] = max_parabolic_pair(rd, b, bp);
  NodeSet sigma1 = marked_nodes(rd, p1, b);
  int dim = bc.w_prime.length() - levi_positive_count(rd, sigma1);
  return MinimalSchubert{sigma1 == p_nodes, sigma1, bc.w_prime, dim};
}

bool validate_enlargement(const RootDatum& rd, const DesingTower& t, int k, const RootSubset& q) {
  if (k < 1 || k > t.sequence.terminal_index) throw InvalidArgument("no factor P_k with that index");
  if (q.universe() != rd.root_count() || !is_parabolic(rd, q)) return false;
  RootSubset hull = RootSubset::positives(rd) | apply(rd, t.base_word, RootSubset::positives(rd));
  return t.sequence.parabolics[k - 1].first.roots().subset_of(q) && q.subset_of(hull);
}

std::string tower_dot(const RootDatum& rd, const DesingTower& t) {
  std::ostringstream os;
  os << "digraph tower_" << rd.name() << " {\n";
  os << "  rankdir=LR;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < t.factors.size(); ++i) {
    const auto& f = t.factors[i];
    std::string name = f.kind == FactorKind::Primed     ? "P'" + std::to_string(f.index)
                       : f.kind == FactorKind::Unprimed ? "P" + std::to_string(f.index)
                                                        : "P'" + std::to_string(f.index) + "=P" +
                                                              std::to_string(f.index);
    os << "  f" << i << " [label=\"" << name << " " << f.sigma.to_string() << "\"];\n";
  }
  os << "  q [shape=ellipse, label=\"/P " << t.quotient.to_string() << "\"];\n";
  for (std::size_t i = 0; i < t.junctions.size(); ++i) {
    int added = t.factors[i + 1].roots.roots().count() - t.junctions[i].count();
    os << "  f" << i << " -> f" << i + 1 << " [label=\"" << added << "\"];\n";
  }
  int last = t.factors.back().roots.roots().count() - t.quotient_roots.count();
  os << "  f" << t.factors.size() - 1 << " -> q [label=\"" << last << "\"];\n";
  os << "}\n";
  return os.str();
}

int reflections_below(const RootDatum& rd, const WeylElement& w) {
  int c = 0;
  for (int beta = 0; beta < rd.positive_count(); ++beta)
    if (bruhat_leq(rd, WeylElement::reflection(rd, beta), w)) ++c;
  return c;
}

}  // namespace lie
