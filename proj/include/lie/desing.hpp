#pragma once

// The finer desingularization of Schubert varieties: Borel completion, the
// tower of parabolics, its Demazure refinement and the smoothness tests.

#include <string>
#include <vector>

#include "lie/parabolic.hpp"
#include "lie/rootsys.hpp"
#include "lie/weyl.hpp"

namespace lie {

struct BorelCompletion {
  BorelSet borel;      // the standard Borel after translation
  WeylElement w_prime; // in W(P) w W(P')
  WeylElement frame;   // u with u(R+) equal to the repaired Borel before translation
};

/// Repairs (R+, w(R+)) until b u b' = p u w(p'), then translates back to the
/// standard Borel. Afterwards R+ u w'(R+) = p u w'(p').
BorelCompletion borel_completion(const RootDatum& rd, const NodeSet& p_nodes,
                                 const NodeSet& pprime_nodes, const WeylElement& w);

enum class FactorKind { Primed, Unprimed, Merged };

struct TowerFactor {
  ParabolicSet roots;
  FactorKind kind;
  int index;      // k in P_k or P'_k (1-based)
  NodeSet sigma;  // marked nodes in the frame of B_k (or B'_k)
};

struct DesingTower {
  std::vector<TowerFactor> factors;  // P'_1, ..., P'_n, P_n, ..., P_1
  std::vector<RootSubset> junctions; // consecutive intersections
  WeylElement base_word;             // w'
  NodeSet quotient;                  // Sigma(P)
  RootSubset quotient_roots;
  ParabolicSequence sequence;        // run on (R+, w'(R+))
};

/// Tower for the closure of B w P / P (P' is the standard Borel).
DesingTower build_tower(const RootDatum& rd, const NodeSet& p_nodes, const WeylElement& w);

/// sum |F_i| - sum |J_i| - |Q|, counting roots.
int tower_dimension(const DesingTower& t);

struct RefinedChain {
  std::vector<ParabolicSet> minimal_factors;  // tower order, from the B'_1 end
  std::vector<int> owner;                     // coarse factor position of each
  std::vector<int> word;                      // read from B_1 to B'_1
  std::vector<BorelSet> borels;               // B_1, ..., B'_1
};

RefinedChain demazure_refinement(const RootDatum& rd, const DesingTower& t);

/// Groups minimal factors by owner and checks each lies in its coarse
/// factor with owners in tower order. Returns the groups.
std::vector<std::vector<int>> regroup(const DesingTower& t, const RefinedChain& chain);

/// p1 n p1' contains a Borel.
bool smoothness_sufficient(const RootDatum& rd, const NodeSet& p_nodes, const WeylElement& w);

struct MinimalSchubert {
  bool is_minimal;
  NodeSet p1_nodes;
  WeylElement w_prime;
  int minimal_dimension;  // l(w') - #Levi+(P_1)
};

MinimalSchubert minimal_schubert(const RootDatum& rd, const NodeSet& p_nodes, const WeylElement& w);

/// Checks a proposed replacement q of P_k (1-based): q parabolic,
/// P_k within q, q within R+ u w'(R+).
bool validate_enlargement(const RootDatum& rd, const DesingTower& t, int k, const RootSubset& q);

/// Boxes for factors, edges for junctions labelled by the added dimension.
std::string tower_dot(const RootDatum& rd, const DesingTower& t);

/// Number of reflections t with t <= w in Bruhat order. Equal to l(w)
/// exactly when the Schubert variety is rationally smooth.
int reflections_below(const RootDatum& rd, const WeylElement& w);

}  // namespace lie
