#include "lie/curves.hpp"

#include <algorithm>

#include "lie/error.hpp"
#include "lie/orbits.hpp"
#include "lie/parabolic.hpp"

namespace lie {

CurveClass::CurveClass(NodeSet n, std::vector<int> d) : nodes(std::move(n)), degrees(std::move(d)) {
  if (nodes.size() != degrees.size())
    throw InvalidArgument("curve class has " + std::to_string(degrees.size()) + " degrees for " +
                          std::to_string(nodes.size()) + " marked nodes");
}

int CurveClass::degree(int node) const {
  const auto& v = nodes.nodes();
  auto it = std::find(v.begin(), v.end(), node);
  if (it == v.end()) throw InvalidArgument("node " + std::to_string(node + 1) + " is not marked");
  return degrees[it - v.begin()];
}

const char* to_string(Positivity p) {
  switch (p) {
    case Positivity::Strict: return "strict";
    case Positivity::Positive: return "positive";
    case Positivity::Outside: return "outside";
  }
  return "";
}

Positivity positivity(const CurveClass& c) {
  bool strict = true;
  for (int d : c.degrees) {
    if (d < 0) return Positivity::Outside;
    if (d == 0) strict = false;
  }
  return strict ? Positivity::Strict : Positivity::Positive;
}

namespace {

void check_class(const RootDatum& rd, const NodeSet& p_nodes, const CurveClass& c) {
  for (int j : p_nodes)
    if (j < 0 || j >= rd.rank()) throw InvalidArgument("node index out of range");
  if (!(c.nodes == p_nodes)) throw InvalidArgument("curve class is keyed by " + c.nodes.to_string() +
                                                   " but Sigma(P) is " + p_nodes.to_string());
}

}  // namespace

std::vector<int> tangent_coefficients(const RootDatum& rd, const NodeSet& p_nodes) {
  RootSubset levi = levi_roots(rd, p_nodes);
  Coords c1(rd.rank(), 0);
  for (int k = 0; k < rd.positive_count(); ++k) {
    if (levi.contains(k)) continue;
    for (int i = 0; i < rd.rank(); ++i) c1[i] += rd.coords(k)[i];
  }
  std::vector<int> out;
  for (int j : p_nodes) out.push_back(rd.coroot_pairing(c1, j));
  return out;
}

int tangent_degree(const RootDatum& rd, const NodeSet& p_nodes, const CurveClass& c) {
  check_class(rd, p_nodes, c);
  auto coeff = tangent_coefficients(rd, p_nodes);
  int s = 0;
  for (std::size_t k = 0; k < coeff.size(); ++k) s += coeff[k] * c.degrees[k];
  return s;
}

HilbertDimension hilbert_dimension(const RootDatum& rd, const NodeSet& p_nodes, const CurveClass& c) {
  check_class(rd, p_nodes, c);
  if (p_nodes.empty()) throw DomainRefusal("G/P is a point; it carries no curves");
  Positivity pos = positivity(c);
  if (pos == Positivity::Outside) throw DomainRefusal("curve class lies outside the positive cone");
  return {tangent_degree(rd, p_nodes, c) + flag_dimension(rd, p_nodes) - 3, pos == Positivity::Positive};
}

int FibrationCandidate::relative_degree(const CurveClass& c) const {
  if (c.degrees.size() != functional.size()) throw InvalidArgument("curve class does not match the candidate");
  int s = 0;
  for (std::size_t k = 0; k < functional.size(); ++k) s += functional[k] * c.degrees[k];
  return s;
}

std::vector<FibrationCandidate> p1_fibration_candidates(const RootDatum& rd, const NodeSet& p_nodes) {
  for (int j : p_nodes)
    if (j < 0 || j >= rd.rank()) throw InvalidArgument("node index out of range");
  std::vector<FibrationCandidate> out;
  for (int m : p_nodes) {
    auto nb = rd.neighbours(m);
    bool isolated = std::all_of(nb.begin(), nb.end(), [&](int v) { return p_nodes.contains(v); });
    if (!isolated) continue;
    // Pairing of the class (as a combination of coroots) with alpha_m.
    std::vector<int> f;
    for (int j : p_nodes) f.push_back(rd.cartan()[j][m]);
    out.push_back({m, p_nodes.without(m), std::move(f)});
  }
  return out;
}

NodeSet ReducedFactor::local_marked() const {
  std::vector<int> v;
  for (int j : marked) {
    auto it = std::find(nodes.begin(), nodes.end(), j);
    v.push_back(static_cast<int>(it - nodes.begin()));
  }
  return NodeSet(std::move(v));
}

std::vector<ReducedFactor> reduce_positive_class(const RootDatum& rd, const NodeSet& p_nodes,
                                                 const CurveClass& c) {
  check_class(rd, p_nodes, c);
  Positivity pos = positivity(c);
  if (pos == Positivity::Outside) throw PreconditionViolation("class lies outside the positive cone");
  if (pos == Positivity::Strict && !p_nodes.empty())
    throw PreconditionViolation("class is strictly positive; nothing to reduce");
  std::vector<int> zero;
  for (std::size_t k = 0; k < c.degrees.size(); ++k)
    if (c.degrees[k] == 0) zero.push_back(p_nodes.nodes()[k]);
  std::vector<ReducedFactor> out;
  for (const auto& comp : diagram_components_after_removal(rd, NodeSet(zero))) {
    std::vector<int> marked, degs;
    for (int v : comp.nodes) {
      if (p_nodes.contains(v)) {
        marked.push_back(v);
      }
    }
    if (marked.empty()) continue;
    NodeSet ms(marked);
    for (int v : ms) degs.push_back(c.degree(v));
    out.push_back({comp.type, comp.rank, comp.nodes, ms, CurveClass(ms, degs)});
  }
  return out;
}

LiftFeasibility lift_feasible(int d, int x) {
  if (d < 0 || x < 0) throw InvalidArgument("lift_feasible expects nonnegative d and x");
  bool liftable = (d - x) % 2 == 0 && d >= x;
  return {liftable, liftable && d > 0};
}

const char* to_string(ExceptionalTarget e) {
  switch (e) {
    case ExceptionalTarget::P1: return "P1";
    case ExceptionalTarget::P2: return "P2";
    case ExceptionalTarget::P1xP1: return "P1xP1";
  }
  return "";
}

namespace {

enum class Shape { P1, P2, Other };

Shape shape_of(const ReducedFactor& f) {
  RootDatum local = RootDatum::build(f.type, f.rank);
  NodeSet lm = f.local_marked();
  int dim = flag_dimension(local, lm);
  if (dim == 1) return Shape::P1;
  if (dim == 2 && lm.size() == 1) return Shape::P2;
  return Shape::Other;
}

}  // namespace

ExistenceVerdict decide_smooth_rational_curve(const RootDatum& rd, const NodeSet& p_nodes,
                                              const CurveClass& c) {
  check_class(rd, p_nodes, c);
  ExistenceVerdict v;
  Positivity pos = positivity(c);
  if (pos == Positivity::Outside) return v;
  v.mor_nonempty = true;

  std::vector<ReducedFactor> factors;
  if (pos == Positivity::Strict && !p_nodes.empty()) {
    auto comps = components_of(rd, NodeSet::all(rd.rank()));
    const auto& comp = comps.front();
    factors.push_back({comp.type, comp.rank, comp.nodes, p_nodes, c});
  } else {
    factors = reduce_positive_class(rd, p_nodes, c);
    v.reduction = factors;
  }

  if (factors.empty()) {
    v.smooth_curve_exists = false;  // constant maps only
    return v;
  }
  if (factors.size() == 1) {
    Shape s = shape_of(factors[0]);
    int d = factors[0].restricted.degrees.front();
    if (s == Shape::P1) {
      v.exception_hit = ExceptionalTarget::P1;
      v.smooth_curve_exists = d == 1;
    } else if (s == Shape::P2) {
      v.exception_hit = ExceptionalTarget::P2;
      v.smooth_curve_exists = d <= 2;
    } else {
      v.smooth_curve_exists = true;
    }
    return v;
  }
  if (factors.size() == 2 && shape_of(factors[0]) == Shape::P1 && shape_of(factors[1]) == Shape::P1) {
    int a = factors[0].restricted.degrees.front();
    int b = factors[1].restricted.degrees.front();
    v.exception_hit = ExceptionalTarget::P1xP1;
    v.smooth_curve_exists = std::min(a, b) <= 1;
    return v;
  }
  v.smooth_curve_exists = true;
  return v;
}

CurveClass class_from_root_coords(const RootDatum& rd, const Coords& x) {
  if (static_cast<int>(x.size()) != rd.rank()) throw InvalidArgument("vector length differs from rank");
  std::vector<int> d(rd.rank());
  for (int j = 0; j < rd.rank(); ++j) d[j] = x[j] * rd.half_length(j);
  return CurveClass(NodeSet::all(rd.rank()), d);
}

}  // namespace lie
