#pragma once

// P'-orbits on G/P. P and P' are given by their marked nodes relative to the
// standard Borel; the orbit of w is identified with w(P') / (w(P') n P).

#include <optional>
#include <vector>

#include "lie/parabolic.hpp"
#include "lie/rootsys.hpp"
#include "lie/weyl.hpp"

namespace lie {

/// Number of positive roots outside the Levi of P(sigma).
int flag_dimension(const RootDatum& rd, const NodeSet& p_nodes);

/// Positive roots of the Levi of P(sigma).
int levi_positive_count(const RootDatum& rd, const NodeSet& p_nodes);

bool is_dense_orbit(const RootDatum& rd, const WeylElement& w, const NodeSet& p_nodes,
                    const NodeSet& pprime_nodes);

/// Density via double cosets: w lies in W(P) w0 W(P').
bool is_dense_orbit_by_coset(const RootDatum& rd, const WeylElement& w, const NodeSet& p_nodes,
                             const NodeSet& pprime_nodes);

int orbit_dimension(const RootDatum& rd, const WeylElement& w, const NodeSet& p_nodes,
                    const NodeSet& pprime_nodes);

struct OrbitDescriptor {
  WeylElement w;
  NodeSet p_nodes;
  NodeSet pprime_nodes;
  int dimension;
  bool dense;
  std::size_t size;  // members of the double coset
};

/// Every P'-orbit of G/P, in the order returned by double_coset_orbits.
std::vector<OrbitDescriptor> orbit_table(const RootDatum& rd, const NodeSet& p_nodes,
                                         const NodeSet& pprime_nodes,
                                         std::size_t cap = kDefaultWeylCap);

/// Sigma(P) and i(Sigma(P')) are disjoint.
bool complement_codim_ge2(const RootDatum& rd, const NodeSet& p_nodes, const NodeSet& pprime_nodes);

/// Codimension of the complement of the dense orbit from the orbit table;
/// empty when the dense orbit is everything.
std::optional<int> brute_force_complement_codim(const RootDatum& rd, const NodeSet& p_nodes,
                                                const NodeSet& pprime_nodes,
                                                std::size_t cap = kDefaultWeylCap);

struct LeviFactor {
  LieType type;
  int rank;
  std::vector<int> nodes;  // original nodes in standard label order
  NodeSet marked;          // original node indices
};

struct LeviQuotient {
  std::vector<LeviFactor> factors;
  int torus_rank;
};

/// R'/R as a product of marked diagrams. Throws DomainRefusal when
/// Sigma(P) meets i(Sigma(P')).
LeviQuotient levi_quotient(const RootDatum& rd, const NodeSet& p_nodes, const NodeSet& pprime_nodes);

struct NilradicalFiltration {
  RootSubset nilradical;
  std::vector<RootSubset> layers;  // center first
  /// Number of affine steps in the tower; one per layer.
  int affine_steps() const { return static_cast<int>(layers.size()); }
};

/// Ascending central series of the nilradical of the standard P(sigma').
NilradicalFiltration nilradical_filtration(const RootDatum& rd, const NodeSet& pprime_nodes);

/// Same for w(P').
NilradicalFiltration nilradical_filtration(const RootDatum& rd, const NodeSet& pprime_nodes,
                                           const WeylElement& w);

}  // namespace lie
