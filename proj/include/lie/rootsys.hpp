#pragma once

// Reduced root systems of the simple types, stored in simple-root
// coordinates.
//
// Conventions used throughout the library:
//   * nodes are 0-based internally (the CLI and renderers add 1);
//   * cartan[i][j] = <alpha_j, alpha_i^vee>, so the pairing of a root with
//     coordinates c against node j is sum_i c[i] * cartan[j][i];
//   * positive roots come first, sorted by height and then by descending
//     lexicographic coordinates (so simple root j sits at index j);
//     negative root at index N + k is the negative of positive root k.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lie {

enum class LieType { A, B, C, D, E, F, G };

char to_char(LieType t);
LieType lie_type_from_char(char c);

using Coords = std::vector<int>;
using CartanMatrix = std::vector<std::vector<int>>;

/// A root, given by its coefficients in the simple-root basis.
struct Root {
  Coords coords;
  friend bool operator==(const Root&, const Root&) = default;
};

/// Set of diagram nodes (0-based, sorted, unique).
class NodeSet {
 public:
  NodeSet() = default;
  NodeSet(std::initializer_list<int> nodes);
  explicit NodeSet(std::vector<int> nodes);

  static NodeSet all(int rank);

  bool contains(int node) const;
  bool empty() const { return nodes_.empty(); }
  std::size_t size() const { return nodes_.size(); }
  const std::vector<int>& nodes() const { return nodes_; }
  auto begin() const { return nodes_.begin(); }
  auto end() const { return nodes_.end(); }

  NodeSet complement(int rank) const;
  NodeSet intersect(const NodeSet& other) const;
  NodeSet unite(const NodeSet& other) const;
  NodeSet without(int node) const;

  /// 1-based rendering such as "{1,3}".
  std::string to_string() const;

  friend bool operator==(const NodeSet&, const NodeSet&) = default;
  friend auto operator<=>(const NodeSet&, const NodeSet&) = default;

 private:
  std::vector<int> nodes_;
};

/// A connected piece of a Dynkin diagram, identified with a standard type.
/// nodes[k] is the original node carrying standard label k.
struct DiagramComponent {
  LieType type;
  int rank;
  std::vector<int> nodes;

  /// Standard label of an original node, or -1 if absent.
  int local_label(int original) const;
};

class RootDatum {
 public:
  /// Builds the root system of the given simple type. D3 is normalised to A3.
  static RootDatum build(LieType type, int rank);

  /// Regenerates roots from an explicit Cartan matrix by saturating the
  /// simple roots under the simple reflections.
  static RootDatum from_cartan(LieType type, CartanMatrix cartan);

  LieType type() const { return type_; }
  int rank() const { return rank_; }
  const CartanMatrix& cartan() const { return cartan_; }
  std::string name() const;

  int root_count() const { return static_cast<int>(roots_.size()); }
  int positive_count() const { return positive_count_; }
  const Coords& coords(int index) const { return roots_[index]; }
  const std::vector<Coords>& roots() const { return roots_; }
  Root root(int index) const { return Root{roots_[index]}; }

  bool is_positive(int index) const { return index < positive_count_; }
  int negate(int index) const {
    return index < positive_count_ ? index + positive_count_ : index - positive_count_;
  }
  int height(int index) const;

  /// Position of a coordinate vector in the root list.
  std::optional<int> find(const Coords& coords) const;
  int index_of(const Root& r) const;  // throws InvalidArgument when absent
  int simple_root(int node) const { return node; }

  /// Index of gamma + delta when it is a root.
  std::optional<int> sum(int gamma, int delta) const {
    int s = sum_table_[static_cast<std::size_t>(gamma) * roots_.size() + delta];
    if (s < 0) return std::nullopt;
    return s;
  }

  /// <gamma, alpha_node^vee> for a root index.
  int coroot_pairing(int root_index, int node) const;
  /// <x, alpha_node^vee> for x in simple-root coordinates.
  int coroot_pairing(const Coords& x, int node) const;

  /// s_node applied to a root index.
  int reflect_simple(int node, int root_index) const {
    return simple_reflection_[node][root_index];
  }
  /// s_beta(gamma) for arbitrary roots beta, gamma.
  int reflect(int beta, int gamma) const;

  /// Symmetric invariant form on the root lattice, normalised so that the
  /// shortest roots have (a,a) = 2.
  int inner(const Coords& x, const Coords& y) const;
  /// (alpha_node, alpha_node) / 2; 1 on short roots.
  int half_length(int node) const { return half_length_[node]; }

  /// Simple-root support of a root.
  NodeSet support(int index) const;

  /// Diagram neighbours of a node.
  std::vector<int> neighbours(int node) const;

 private:
  RootDatum() = default;
  void finish();

  LieType type_ = LieType::A;
  int rank_ = 0;
  CartanMatrix cartan_;
  std::vector<int> half_length_;  // (alpha_i, alpha_i) / 2
  std::vector<Coords> roots_;
  int positive_count_ = 0;
  std::map<Coords, int> root_index_;
  std::vector<int> sum_table_;
  std::vector<std::vector<int>> simple_reflection_;
};

/// Regular call form of RootDatum::build.
RootDatum build_root_system(LieType type, int rank);

/// Rejects pairs outside A n>=1, B n>=2, C n>=2, D n>=3, E 6..8, F 4, G 2.
void validate_type(LieType type, int rank);

/// gamma + delta as a Root, if it is one.
std::optional<Root> root_sum(const RootDatum& rd, const Root& gamma, const Root& delta);

/// Basis in which a weight-like vector is expressed.
enum class Basis { FundamentalWeights, SimpleRoots };

/// <lambda, alpha_j^vee>; in the fundamental-weight basis this is lambda[j].
int cartan_pairing(const RootDatum& rd, const Coords& lambda, Basis basis, int node);

/// Connected components of the diagram with `removed` deleted, classified.
std::vector<DiagramComponent> diagram_components_after_removal(const RootDatum& rd,
                                                               const NodeSet& removed);

/// Classifies an arbitrary node subset's induced subdiagram.
std::vector<DiagramComponent> components_of(const RootDatum& rd, const NodeSet& kept);

/// j -> index of -w0(alpha_j), computed from the longest element.
std::vector<int> involution_i(const RootDatum& rd);

/// Image of a node set under the involution.
NodeSet apply_involution(const RootDatum& rd, const NodeSet& nodes);

/// Dynkin diagram in DOT: nodes 1..rank, one edge line per bond, arrows
/// pointing at the short root.
std::string dynkin_dot(const RootDatum& rd);

}  // namespace lie
