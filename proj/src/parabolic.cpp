#include "lie/parabolic.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "lie/error.hpp"

namespace lie {

// ------------------------------------------------------------- RootSubset

RootSubset::RootSubset(int universe, const std::vector<int>& indices) : RootSubset(universe) {
  for (int k : indices) {
    if (k < 0 || k >= universe) throw InvalidArgument("root index out of range");
    insert(k);
  }
}

RootSubset RootSubset::all(const RootDatum& rd) {
  RootSubset s(rd.root_count());
  for (int k = 0; k < rd.root_count(); ++k) s.insert(k);
  return s;
}

RootSubset RootSubset::positives(const RootDatum& rd) {
  RootSubset s(rd.root_count());
  for (int k = 0; k < rd.positive_count(); ++k) s.insert(k);
  return s;
}

int RootSubset::count() const {
  int c = 0;
  for (auto w : bits_) c += std::popcount(w);
  return c;
}

std::vector<int> RootSubset::indices() const {
  std::vector<int> v;
  for (int k = 0; k < universe_; ++k)
    if (contains(k)) v.push_back(k);
  return v;
}

RootSubset RootSubset::operator|(const RootSubset& o) const {
  RootSubset r(*this);
  for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] |= o.bits_[i];
  return r;
}

RootSubset RootSubset::operator&(const RootSubset& o) const {
  RootSubset r(*this);
  for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] &= o.bits_[i];
  return r;
}

RootSubset RootSubset::operator-(const RootSubset& o) const {
  RootSubset r(*this);
  for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] &= ~o.bits_[i];
  return r;
}

bool RootSubset::subset_of(const RootSubset& o) const {
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] & ~o.bits_[i]) return false;
  return true;
}

RootSubset negated(const RootDatum& rd, const RootSubset& s) {
  RootSubset r(rd.root_count());
  for (int k : s.indices()) r.insert(rd.negate(k));
  return r;
}

RootSubset apply(const RootDatum& rd, const WeylElement& w, const RootSubset& s) {
  RootSubset r(rd.root_count());
  for (int k : s.indices()) r.insert(w.act(k));
  return r;
}

bool is_closed(const RootDatum& rd, const RootSubset& s) {
  auto idx = s.indices();
  for (int a : idx)
    for (int b : idx) {
      auto c = rd.sum(a, b);
      if (c && !s.contains(*c)) return false;
    }
  return true;
}

bool is_covering(const RootDatum& rd, const RootSubset& s) {
  for (int k = 0; k < rd.positive_count(); ++k)
    if (!s.contains(k) && !s.contains(rd.negate(k))) return false;
  return true;
}

bool is_borel(const RootDatum& rd, const RootSubset& s) {
  if (s.universe() != rd.root_count()) return false;
  for (int k = 0; k < rd.positive_count(); ++k)
    if (s.contains(k) == s.contains(rd.negate(k))) return false;
  return is_closed(rd, s);
}

bool is_parabolic(const RootDatum& rd, const RootSubset& s) {
  return s.universe() == rd.root_count() && is_covering(rd, s) && is_closed(rd, s);
}

BorelSet BorelSet::make(const RootDatum& rd, RootSubset roots) {
  if (!is_borel(rd, roots)) throw PreconditionViolation("root subset is not a Borel");
  return BorelSet(std::move(roots));
}

BorelSet BorelSet::standard(const RootDatum& rd) { return BorelSet(RootSubset::positives(rd)); }

ParabolicSet ParabolicSet::make(const RootDatum& rd, RootSubset roots) {
  if (!is_parabolic(rd, roots)) throw PreconditionViolation("root subset is not a parabolic");
  return ParabolicSet(std::move(roots));
}

// ------------------------------------------------------------------ frames

int BorelFrame::node_of(int root_index) const {
  for (std::size_t j = 0; j < simple.size(); ++j)
    if (simple[j] == root_index) return static_cast<int>(j);
  return -1;
}

namespace {

BorelFrame frame_from(const RootDatum& rd, WeylElement u) {
  std::vector<int> simple(rd.rank());
  for (int j = 0; j < rd.rank(); ++j) simple[j] = u.act(j);
  return BorelFrame{std::move(u), std::move(simple)};
}

// Smallest node j whose simple root beta of the frame satisfies pred(beta).
template <class Pred>
int first_simple(const BorelFrame& f, Pred pred) {
  for (std::size_t j = 0; j < f.simple.size(); ++j)
    if (pred(f.simple[j])) return static_cast<int>(j);
  return -1;
}

}  // namespace

BorelFrame borel_frame(const RootDatum& rd, const BorelSet& b) {
  // Reflect b back to R+ by negative simple roots; b = s_{j1} ... s_{jm}(R+).
  RootSubset cur = b.roots();
  const RootSubset positive = RootSubset::positives(rd);
  std::vector<int> word;
  while (!(cur == positive)) {
    int j = 0;
    while (j < rd.rank() && !cur.contains(rd.negate(j))) ++j;
    if (j == rd.rank()) throw InternalConsistencyError("Borel without a negative simple root");
    RootSubset next(rd.root_count());
    for (int k : cur.indices()) next.insert(rd.reflect_simple(j, k));
    cur = std::move(next);
    word.push_back(j);
    if (static_cast<int>(word.size()) > rd.positive_count())
      throw InternalConsistencyError("Borel frame walk did not terminate");
  }
  return frame_from(rd, WeylElement::from_word(rd, word));
}

BorelSet reflect_borel(const RootDatum& rd, const BorelSet& b, int beta) {
  if (!b.contains(beta)) throw PreconditionViolation("reflecting root is not in the Borel");
  RootSubset r = b.roots();
  r.erase(beta);
  r.insert(rd.negate(beta));
  if (!is_borel(rd, r)) throw PreconditionViolation("reflecting root is not simple in the Borel");
  return BorelSet::make(rd, std::move(r));
}

RootSubset standard_parabolic_roots(const RootDatum& rd, const NodeSet& sigma) {
  for (int j : sigma)
    if (j < 0 || j >= rd.rank())
      throw InvalidArgument("node " + std::to_string(j + 1) + " out of range for " + rd.name());
  RootSubset s = RootSubset::positives(rd);
  for (int k = 0; k < rd.positive_count(); ++k)
    if (rd.support(k).intersect(sigma).empty()) s.insert(rd.negate(k));
  return s;
}

RootSubset levi_roots(const RootDatum& rd, const NodeSet& sigma) {
  RootSubset p = standard_parabolic_roots(rd, sigma);
  return p & negated(rd, p);
}

ParabolicSet parabolic_from_nodes(const RootDatum& rd, const NodeSet& sigma, const BorelSet& b) {
  RootSubset std_p = standard_parabolic_roots(rd, sigma);
  BorelFrame f = borel_frame(rd, b);
  return ParabolicSet::make(rd, apply(rd, f.u, std_p));
}

NodeSet marked_nodes(const RootDatum& rd, const ParabolicSet& p, const BorelSet& b) {
  if (!b.roots().subset_of(p.roots())) throw PreconditionViolation("Borel is not contained in the parabolic");
  BorelFrame f = borel_frame(rd, b);
  std::vector<int> v;
  for (int j = 0; j < rd.rank(); ++j)
    if (!p.contains(rd.negate(f.simple[j]))) v.push_back(j);
  return NodeSet(std::move(v));
}

std::optional<BorelSet> contains_borel(const RootDatum& rd, const RootSubset& s,
                                       const BorelSet* reference) {
  if (!is_closed(rd, s)) throw PreconditionViolation("contains_borel called on a subset that is not closed");
  if (!is_covering(rd, s)) return std::nullopt;
  RootSubset r(rd.root_count());
  for (int k = 0; k < rd.positive_count(); ++k) {
    int m = rd.negate(k);
    bool pos = s.contains(k), neg = s.contains(m);
    if (pos && neg) {
      bool take_neg = reference && reference->contains(m);
      r.insert(take_neg ? m : k);
    } else {
      r.insert(pos ? k : m);
    }
  }
  if (!is_borel(rd, r)) throw InternalConsistencyError("sign choice inside a parabolic is not a Borel");
  return BorelSet::make(rd, std::move(r));
}

std::pair<ParabolicSet, ParabolicSet> max_parabolic_pair(const RootDatum& rd, const BorelSet& b,
                                                         const BorelSet& bp) {
  auto side = [&](const BorelSet& x, const BorelSet& y) {
    BorelFrame f = borel_frame(rd, x);
    std::vector<int> sigma;
    for (int j = 0; j < rd.rank(); ++j)
      if (!y.contains(rd.negate(f.simple[j]))) sigma.push_back(j);
    RootSubset roots = apply(rd, f.u, standard_parabolic_roots(rd, NodeSet(sigma)));
    return ParabolicSet::make(rd, std::move(roots));
  };
  ParabolicSet p1 = side(b, bp);
  ParabolicSet p1p = side(bp, b);
  RootSubset hull = b.roots() | bp.roots();
  if (!p1.roots().subset_of(hull) || !p1p.roots().subset_of(hull))
    throw InternalConsistencyError("maximal parabolic is not contained in b + b'");
  return {p1, p1p};
}

namespace {

std::string describe(const RootDatum& rd, int k) {
  std::ostringstream os;
  os << '(';
  const auto& c = rd.coords(k);
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << ')';
  return os.str();
}

// Membership rule for the next Borel inside p, with q the other parabolic.
RootSubset next_side(const RootDatum& rd, const ParabolicSet& p, const ParabolicSet& q,
                     const BorelSet& b, std::ostringstream& trace) {
  RootSubset out(rd.root_count());
  for (int a = 0; a < rd.root_count(); ++a) {
    if (!p.contains(a)) continue;
    int m = rd.negate(a);
    bool a_q = q.contains(a), m_p = p.contains(m), m_q = q.contains(m);
    const char* rule;
    if (!m_p) {
      out.insert(a);
      rule = "in:-a not in p";
    } else if (a_q && !m_q) {
      out.insert(a);
      rule = "in:a in p&q, -a in p not q";
    } else if (!a_q && m_q) {
      rule = "out:a in p not q, -a in p&q";
    } else if (a_q && m_q) {
      if (b.contains(a)) out.insert(a);
      rule = b.contains(a) ? "copy:in" : "copy:out";
    } else {
      rule = "uncovered:a,-a in p, neither in q";
    }
    trace << "  " << describe(rd, a) << " " << rule << "\n";
  }
  return out;
}

}  // namespace

std::pair<BorelSet, BorelSet> next_borels(const RootDatum& rd, const ParabolicSet& p,
                                          const ParabolicSet& pp, const BorelSet& b,
                                          const BorelSet& bp) {
  if (!b.roots().subset_of(p.roots()) || !bp.roots().subset_of(pp.roots()))
    throw PreconditionViolation("next_borels: Borel not contained in its parabolic");
  std::ostringstream trace;
  trace << "unprimed side:\n";
  RootSubset nb = next_side(rd, p, pp, b, trace);
  trace << "primed side:\n";
  RootSubset nbp = next_side(rd, pp, p, bp, trace);
  if (!is_borel(rd, nb) || !is_borel(rd, nbp))
    throw InternalConsistencyError("Borel recursion produced a non-Borel\n" + trace.str());
  return {BorelSet::make(rd, std::move(nb)), BorelSet::make(rd, std::move(nbp))};
}

namespace {

// Final walk: move b into pp by reflections through roots of p.
BorelSet final_adjustment(const RootDatum& rd, const ParabolicSet& p, const ParabolicSet& pp,
                          const BorelSet& b) {
  BorelFrame f = borel_frame(rd, b);
  BorelSet cur = b;
  int steps = 0;
  while (!cur.roots().subset_of(pp.roots())) {
    int j = first_simple(f, [&](int a) { return !pp.contains(a) && p.contains(rd.negate(a)); });
    if (j < 0) throw InternalConsistencyError("final Borel walk found no admissible simple root");
    cur = reflect_borel(rd, cur, f.simple[j]);
    f = frame_from(rd, f.u.times_simple(rd, j));
    if (++steps > rd.positive_count()) throw InternalConsistencyError("final Borel walk did not terminate");
  }
  return cur;
}

}  // namespace

ParabolicSequence parabolic_sequence(const RootDatum& rd, const BorelSet& b, const BorelSet& bp) {
  std::vector<std::pair<BorelSet, BorelSet>> borels{{b, bp}};
  std::vector<std::pair<ParabolicSet, ParabolicSet>> parabolics;
  while (true) {
    const auto& [bn, bpn] = borels.back();
    parabolics.push_back(max_parabolic_pair(rd, bn, bpn));
    const auto& [pn, ppn] = parabolics.back();
    if (contains_borel(rd, pn.roots() & ppn.roots())) break;
    if (static_cast<int>(borels.size()) >= rd.positive_count())
      throw InternalConsistencyError("parabolic sequence exceeded positive_count steps");
    auto next = next_borels(rd, pn, ppn, bn, bpn);
    int before = (bn.roots() | bpn.roots()).count();
    int after = (next.first.roots() | next.second.roots()).count();
    if (after >= before) throw InternalConsistencyError("b_n + b'_n did not shrink strictly");
    borels.push_back(std::move(next));
  }
  const int n = static_cast<int>(borels.size());
  BorelSet fin = final_adjustment(rd, parabolics.back().first, parabolics.back().second,
                                  borels.back().first);
  return ParabolicSequence{std::move(borels), std::move(parabolics), n, std::move(fin)};
}

std::vector<BorelSet> borel_chain(const RootDatum& rd, const ParabolicSet& p, const BorelSet& b_ref,
                                  const BorelSet& b_from, const BorelSet& b_to) {
  if (!b_from.roots().subset_of(p.roots()) || !b_to.roots().subset_of(p.roots()))
    throw PreconditionViolation("borel_chain: endpoints are not contained in the parabolic");
  const RootSubset target = b_to.roots() & b_ref.roots();
  if (!(b_from.roots() & b_ref.roots()).subset_of(target))
    throw PreconditionViolation("borel_chain: intersections with the reference are not nested");

  std::vector<BorelSet> chain{b_from};
  BorelFrame f = borel_frame(rd, b_from);
  while ((chain.back().roots() & b_ref.roots()).count() < target.count()) {
    int j = first_simple(f, [&](int a) { return target.contains(rd.negate(a)); });
    if (j < 0) throw InternalConsistencyError("borel_chain: no simple root to reflect");
    BorelSet next = reflect_borel(rd, chain.back(), f.simple[j]);
    if (!next.roots().subset_of(p.roots())) throw InternalConsistencyError("borel_chain left the parabolic");
    f = frame_from(rd, f.u.times_simple(rd, j));
    chain.push_back(std::move(next));
  }
  if (!(chain.back() == b_to)) throw InternalConsistencyError("borel_chain did not reach its target");
  return chain;
}

bool check_fact1(const RootDatum& rd, const ParabolicSet& p) {
  for (int a = 0; a < rd.root_count(); ++a) {
    if (!p.contains(a)) continue;
    for (int a2 = 0; a2 < rd.root_count(); ++a2) {
      if (p.contains(a2)) continue;
      auto s = rd.sum(a, a2);
      if (s && p.contains(*s) && p.contains(rd.negate(a))) return false;
    }
  }
  return true;
}

std::vector<ParabolicSet> all_parabolics(const RootDatum& rd, std::size_t cap) {
  std::set<std::vector<int>> seen;
  std::vector<ParabolicSet> out;
  const int subsets = 1 << rd.rank();
  std::vector<RootSubset> standard;
  for (int mask = 0; mask < subsets; ++mask) {
    std::vector<int> sigma;
    for (int j = 0; j < rd.rank(); ++j)
      if (mask & (1 << j)) sigma.push_back(j);
    standard.push_back(standard_parabolic_roots(rd, NodeSet(sigma)));
  }
  for (const auto& w : enumerate_weyl_group(rd, cap)) {
    for (const auto& s : standard) {
      RootSubset r = apply(rd, w, s);
      if (seen.insert(r.indices()).second) out.push_back(ParabolicSet::make(rd, std::move(r)));
    }
  }
  return out;
}

std::vector<Coords> subset_coords(const RootDatum& rd, const RootSubset& s) {
  std::vector<Coords> v;
  for (int k : s.indices()) v.push_back(rd.coords(k));
  return v;
}

}  // namespace lie
