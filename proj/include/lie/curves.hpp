#pragma once

// Curve classes on G/P, recorded by their degrees against the fundamental
// weights of the marked nodes.

#include <optional>
#include <string>
#include <vector>

#include "lie/rootsys.hpp"

namespace lie {

struct CurveClass {
  NodeSet nodes;             // Sigma(P)
  std::vector<int> degrees;  // aligned with nodes.nodes()

  CurveClass() = default;
  CurveClass(NodeSet n, std::vector<int> d);
  int degree(int node) const;
};

enum class Positivity { Strict, Positive, Outside };
const char* to_string(Positivity p);
Positivity positivity(const CurveClass& c);

/// <c1(T_{G/P}), alpha_j^vee> for each marked node j, in node order.
std::vector<int> tangent_coefficients(const RootDatum& rd, const NodeSet& p_nodes);

/// deg T_{G/P} restricted to a curve of class c.
int tangent_degree(const RootDatum& rd, const NodeSet& p_nodes, const CurveClass& c);

struct HilbertDimension {
  int dimension;
  bool on_boundary;  // some degree is zero
};

/// tangent_degree + dim G/P - 3. Throws DomainRefusal outside the positive
/// cone or when G/P is a point.
HilbertDimension hilbert_dimension(const RootDatum& rd, const NodeSet& p_nodes, const CurveClass& c);

struct FibrationCandidate {
  int dropped;                    // node m
  NodeSet target;                 // Sigma(P) minus m
  std::vector<int> functional;    // coefficient of each Sigma(P) degree
  int relative_degree(const CurveClass& c) const;
};

/// Nodes m of Sigma(P) for which G/P -> G/P(Sigma \ m) is a P1-bundle.
std::vector<FibrationCandidate> p1_fibration_candidates(const RootDatum& rd, const NodeSet& p_nodes);

struct ReducedFactor {
  LieType type;
  int rank;
  std::vector<int> nodes;  // original nodes in standard label order
  NodeSet marked;          // original indices
  CurveClass restricted;   // keyed by original marked nodes
  /// Marked nodes translated to the factor's own labels.
  NodeSet local_marked() const;
};

/// Splits a positive, non-strict class onto the fiber containing it.
std::vector<ReducedFactor> reduce_positive_class(const RootDatum& rd, const NodeSet& p_nodes,
                                                 const CurveClass& c);

struct LiftFeasibility {
  bool liftable;
  bool smooth_liftable;
};
LiftFeasibility lift_feasible(int d, int x);

enum class ExceptionalTarget { P1, P2, P1xP1 };
const char* to_string(ExceptionalTarget e);

struct ExistenceVerdict {
  bool mor_nonempty = false;
  bool smooth_curve_exists = false;
  std::optional<std::vector<ReducedFactor>> reduction;
  std::optional<ExceptionalTarget> exception_hit;
};

ExistenceVerdict decide_smooth_rational_curve(const RootDatum& rd, const NodeSet& p_nodes,
                                              const CurveClass& c);

/// Class on G/B from root-lattice coordinates, via alpha -> alpha^vee scaling.
CurveClass class_from_root_coords(const RootDatum& rd, const Coords& x);

}  // namespace lie
