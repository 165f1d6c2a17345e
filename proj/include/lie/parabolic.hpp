#pragma once

// Root-subset calculus: Borels and parabolics as sets of root indices.
// Only root memberships are tracked; the Cartan part is implicit.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lie/rootsys.hpp"
#include "lie/weyl.hpp"

namespace lie {

/// Set of root indices of a fixed RootDatum, stored as a bitset.
class RootSubset {
 public:
  RootSubset() = default;
  explicit RootSubset(int universe) : universe_(universe), bits_((universe + 63) / 64, 0) {}
  RootSubset(int universe, const std::vector<int>& indices);

  static RootSubset all(const RootDatum& rd);
  static RootSubset positives(const RootDatum& rd);

  int universe() const { return universe_; }
  bool contains(int k) const { return (bits_[k >> 6] >> (k & 63)) & 1u; }
  void insert(int k) { bits_[k >> 6] |= std::uint64_t{1} << (k & 63); }
  void erase(int k) { bits_[k >> 6] &= ~(std::uint64_t{1} << (k & 63)); }
  int count() const;
  bool empty() const { return count() == 0; }
  std::vector<int> indices() const;

  RootSubset operator|(const RootSubset& o) const;
  RootSubset operator&(const RootSubset& o) const;
  RootSubset operator-(const RootSubset& o) const;
  bool subset_of(const RootSubset& o) const;

  friend bool operator==(const RootSubset&, const RootSubset&) = default;

 private:
  int universe_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// -S
RootSubset negated(const RootDatum& rd, const RootSubset& s);
/// w(S)
RootSubset apply(const RootDatum& rd, const WeylElement& w, const RootSubset& s);

/// gamma, delta in S and gamma + delta a root imply gamma + delta in S.
bool is_closed(const RootDatum& rd, const RootSubset& s);
/// Every root or its negative lies in S.
bool is_covering(const RootDatum& rd, const RootSubset& s);

class BorelSet {
 public:
  /// Validates closure and the one-sign-per-pair condition.
  static BorelSet make(const RootDatum& rd, RootSubset roots);
  static BorelSet standard(const RootDatum& rd);
  const RootSubset& roots() const { return roots_; }
  bool contains(int k) const { return roots_.contains(k); }
  friend bool operator==(const BorelSet&, const BorelSet&) = default;

 private:
  explicit BorelSet(RootSubset r) : roots_(std::move(r)) {}
  RootSubset roots_;
};

class ParabolicSet {
 public:
  /// Validates closure and covering.
  static ParabolicSet make(const RootDatum& rd, RootSubset roots);
  const RootSubset& roots() const { return roots_; }
  bool contains(int k) const { return roots_.contains(k); }
  friend bool operator==(const ParabolicSet&, const ParabolicSet&) = default;

 private:
  explicit ParabolicSet(RootSubset r) : roots_(std::move(r)) {}
  RootSubset roots_;
};

bool is_borel(const RootDatum& rd, const RootSubset& s);
bool is_parabolic(const RootDatum& rd, const RootSubset& s);

/// The unique u with u(R+) = b, plus the simple roots of b labelled by node:
/// simple[j] = u(alpha_j).
struct BorelFrame {
  WeylElement u;
  std::vector<int> simple;
  /// Node carrying a simple root of b, or -1.
  int node_of(int root_index) const;
};
BorelFrame borel_frame(const RootDatum& rd, const BorelSet& b);

/// s_beta(b) for a simple root beta of b: swaps beta for -beta.
BorelSet reflect_borel(const RootDatum& rd, const BorelSet& b, int beta);

/// Standard parabolic R+ together with -gamma for every positive gamma whose
/// support avoids sigma.
RootSubset standard_parabolic_roots(const RootDatum& rd, const NodeSet& sigma);

/// The Levi roots of a standard parabolic (support inside the unmarked nodes).
RootSubset levi_roots(const RootDatum& rd, const NodeSet& sigma);

/// The parabolic over b marked by sigma (nodes labelled in b's frame).
ParabolicSet parabolic_from_nodes(const RootDatum& rd, const NodeSet& sigma, const BorelSet& b);

/// Recovers sigma: the nodes of b whose negative simple root is absent from p.
NodeSet marked_nodes(const RootDatum& rd, const ParabolicSet& p, const BorelSet& b);

/// A Borel inside S, if any. Signs present twice are resolved toward
/// `reference` when given, else toward the positive root.
/// Throws PreconditionViolation when S is not closed.
std::optional<BorelSet> contains_borel(const RootDatum& rd, const RootSubset& s,
                                       const BorelSet* reference = nullptr);

/// The maximal parabolics p1 over b and p1' over bp inside b u bp.
std::pair<ParabolicSet, ParabolicSet> max_parabolic_pair(const RootDatum& rd, const BorelSet& b,
                                                         const BorelSet& bp);

/// One step of the Borel recursion.
std::pair<BorelSet, BorelSet> next_borels(const RootDatum& rd, const ParabolicSet& p,
                                          const ParabolicSet& pp, const BorelSet& b,
                                          const BorelSet& bp);

struct ParabolicSequence {
  std::vector<std::pair<BorelSet, BorelSet>> borels;          // (B_k, B'_k), k = 1..n
  std::vector<std::pair<ParabolicSet, ParabolicSet>> parabolics;  // (P_k, P'_k), k = 1..n
  int terminal_index = 0;                                      // n, 1-based
  BorelSet final_borel;                                        // B_{n+1}
};

ParabolicSequence parabolic_sequence(const RootDatum& rd, const BorelSet& b, const BorelSet& bp);

/// Borels from b_from to b_to inside p, one simple reflection per step, the
/// intersection with b_ref growing by one root each time.
std::vector<BorelSet> borel_chain(const RootDatum& rd, const ParabolicSet& p, const BorelSet& b_ref,
                                  const BorelSet& b_from, const BorelSet& b_to);

/// alpha in p, alpha' not in p, alpha + alpha' in p  imply  -alpha not in p.
bool check_fact1(const RootDatum& rd, const ParabolicSet& p);

/// Every parabolic of rd, as root sets (all Borels times all node subsets).
std::vector<ParabolicSet> all_parabolics(const RootDatum& rd, std::size_t cap = kDefaultWeylCap);

/// Coordinates of each member, sorted as in the root list.
std::vector<Coords> subset_coords(const RootDatum& rd, const RootSubset& s);

}  // namespace lie
