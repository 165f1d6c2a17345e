#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "lie/rootsys.hpp"

namespace lie {

/// Weyl group element in canonical form: the permutation it induces on the
/// root list. `word` is whatever word built it and need not be reduced.
class WeylElement {
 public:
  static WeylElement identity(const RootDatum& rd);
  /// Product s_{w[0]} s_{w[1]} ... of simple reflections (0-based nodes).
  static WeylElement from_word(const RootDatum& rd, const std::vector<int>& word);
  /// The reflection s_beta for a root index beta.
  static WeylElement reflection(const RootDatum& rd, int beta);

  const std::vector<int>& perm() const { return perm_; }
  const std::vector<int>& word() const { return word_; }
  int length() const { return length_; }
  bool is_identity() const { return length_ == 0; }

  /// Image of a root index.
  int act(int root_index) const { return perm_[root_index]; }

  /// A reduced word for this element, lexicographically first among left
  /// descent choices.
  std::vector<int> reduced_word(const RootDatum& rd) const;

  WeylElement inverse() const;
  /// this * other (other acts first).
  WeylElement compose(const WeylElement& other) const;
  /// this * s_node
  WeylElement times_simple(const RootDatum& rd, int node) const;
  /// s_node * this
  WeylElement simple_times(const RootDatum& rd, int node) const;

  /// True if l(s_node * this) < l(this).
  bool has_left_descent(int node) const;
  /// True if l(this * s_node) < l(this).
  bool has_right_descent(int node) const;

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.perm_ == b.perm_; }
  friend bool operator<(const WeylElement& a, const WeylElement& b) {
    if (a.length_ != b.length_) return a.length_ < b.length_;
    return a.perm_ < b.perm_;
  }

 private:
  WeylElement() = default;
  void recount();

  std::vector<int> perm_;
  std::vector<int> word_;
  int positive_count_ = 0;
  int length_ = 0;
};

struct WeylHash {
  std::size_t operator()(const WeylElement& w) const;
};

/// w(gamma) as a Root.
Root act_on_root(const RootDatum& rd, const WeylElement& w, const Root& gamma);

WeylElement longest_element(const RootDatum& rd);

/// |W| from the classification (as a double to detect overflow).
double weyl_group_order(const RootDatum& rd);

/// Default cap for exhaustive enumeration.
inline constexpr std::size_t kDefaultWeylCap = 1000000;

/// Every element of W, sorted by length then permutation.
std::vector<WeylElement> enumerate_weyl_group(const RootDatum& rd,
                                              std::size_t cap = kDefaultWeylCap);

/// u <= w in Bruhat order (descent recursion, no memo).
bool bruhat_leq(const RootDatum& rd, const WeylElement& u, const WeylElement& w);

/// Bruhat comparisons memoised per pair. Safe for concurrent use.
class BruhatOrder {
 public:
  explicit BruhatOrder(const RootDatum& rd) : rd_(rd) {}
  bool leq(const WeylElement& u, const WeylElement& w);

 private:
  const RootDatum& rd_;
  std::mutex mutex_;
  std::map<std::pair<std::vector<int>, std::vector<int>>, bool> memo_;
};

/// Orbit of W under W(P) x W(P') acting by (x, y).g = x g y^{-1}: the group
/// generated by left_nodes acts on the left, right_nodes on the right.
struct CosetOrbit {
  WeylElement representative;
  std::vector<WeylElement> members;  // sorted
  NodeSet left_nodes;
  NodeSet right_nodes;
};

/// Partition of W into double cosets W_L g W_R. Orbits are sorted by the
/// length of their minimal representative, then by its permutation.
std::vector<CosetOrbit> double_coset_orbits(const RootDatum& rd, const NodeSet& left_nodes,
                                            const NodeSet& right_nodes,
                                            std::size_t cap = kDefaultWeylCap);

/// Minimal-length element of W_L w W_R.
WeylElement minimal_double_coset_rep(const RootDatum& rd, const WeylElement& w,
                                     const NodeSet& left_nodes, const NodeSet& right_nodes);

/// Converts a one-line permutation of 1..n+1 (type A_n) to a Weyl element.
WeylElement from_one_line(const RootDatum& rd, const std::vector<int>& one_line);

/// One-line notation of a type A element.
std::vector<int> to_one_line(const RootDatum& rd, const WeylElement& w);

/// Space-separated 1-based rendering of a word; "e" for the empty word.
std::string word_to_string(const std::vector<int>& word);

}  // namespace lie
