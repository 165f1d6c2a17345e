#include "lie/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "lie/error.hpp"
#include "lie/weyl.hpp"

namespace lie {

char to_char(LieType t) { return "ABCDEFG"[static_cast<int>(t)]; }

LieType lie_type_from_char(char c) {
  if (c >= 'a' && c <= 'g') c = static_cast<char>(c - 'a' + 'A');
  if (c < 'A' || c > 'G') throw InvalidArgument(std::string("unknown Lie type '") + c + "'");
  return static_cast<LieType>(c - 'A');
}

// ---------------------------------------------------------------- NodeSet

NodeSet::NodeSet(std::initializer_list<int> nodes) : NodeSet(std::vector<int>(nodes)) {}

NodeSet::NodeSet(std::vector<int> nodes) : nodes_(std::move(nodes)) {
  std::sort(nodes_.begin(), nodes_.end());
  nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());
}

NodeSet NodeSet::all(int rank) {
  std::vector<int> v(rank);
  std::iota(v.begin(), v.end(), 0);
  return NodeSet(std::move(v));
}

bool NodeSet::contains(int node) const {
  return std::binary_search(nodes_.begin(), nodes_.end(), node);
}

NodeSet NodeSet::complement(int rank) const {
  std::vector<int> v;
  for (int j = 0; j < rank; ++j)
    if (!contains(j)) v.push_back(j);
  return NodeSet(std::move(v));
}

NodeSet NodeSet::intersect(const NodeSet& other) const {
  std::vector<int> v;
  std::set_intersection(nodes_.begin(), nodes_.end(), other.nodes_.begin(), other.nodes_.end(),
                        std::back_inserter(v));
  return NodeSet(std::move(v));
}

NodeSet NodeSet::unite(const NodeSet& other) const {
  std::vector<int> v;
  std::set_union(nodes_.begin(), nodes_.end(), other.nodes_.begin(), other.nodes_.end(),
                 std::back_inserter(v));
  return NodeSet(std::move(v));
}

NodeSet NodeSet::without(int node) const {
  std::vector<int> v;
  for (int j : nodes_)
    if (j != node) v.push_back(j);
  return NodeSet(std::move(v));
}

std::string NodeSet::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t k = 0; k < nodes_.size(); ++k) os << (k ? "," : "") << nodes_[k] + 1;
  os << '}';
  return os.str();
}

int DiagramComponent::local_label(int original) const {
  auto it = std::find(nodes.begin(), nodes.end(), original);
  return it == nodes.end() ? -1 : static_cast<int>(it - nodes.begin());
}

// -------------------------------------------------------------- RootDatum

void validate_type(LieType type, int rank) {
  bool ok = false;
  switch (type) {
    case LieType::A: ok = rank >= 1; break;
    case LieType::B: ok = rank >= 2; break;
    case LieType::C: ok = rank >= 2; break;
    case LieType::D: ok = rank >= 3; break;
    case LieType::E: ok = rank >= 6 && rank <= 8; break;
    case LieType::F: ok = rank == 4; break;
    case LieType::G: ok = rank == 2; break;
  }
  if (!ok) {
    throw InvalidArgument(std::string("invalid simple type ") + to_char(type) +
                          std::to_string(rank) +
                          "; admissible: A n>=1, B n>=2, C n>=2, D n>=3, E n in {6,7,8}, F 4, G 2");
  }
}

namespace {

CartanMatrix standard_cartan(LieType type, int n) {
  CartanMatrix c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto single = [&](int a, int b) { c[a][b] = c[b][a] = -1; };
  // cartan[short][long] = -multiplicity
  auto multiple = [&](int shorter, int longer, int m) {
    c[shorter][longer] = -m;
    c[longer][shorter] = -1;
  };
  switch (type) {
    case LieType::A:
      for (int i = 0; i + 1 < n; ++i) single(i, i + 1);
      break;
    case LieType::B:
      for (int i = 0; i + 2 < n; ++i) single(i, i + 1);
      multiple(n - 1, n - 2, 2);
      break;
    case LieType::C:
      for (int i = 0; i + 2 < n; ++i) single(i, i + 1);
      multiple(n - 2, n - 1, 2);
      break;
    case LieType::D:
      for (int i = 0; i + 2 < n; ++i) single(i, i + 1);
      single(n - 3, n - 1);
      break;
    case LieType::E:
      single(0, 2);
      single(1, 3);
      for (int i = 2; i + 1 < n; ++i) single(i, i + 1);
      break;
    case LieType::F:
      single(0, 1);
      multiple(2, 1, 2);
      single(2, 3);
      break;
    case LieType::G:
      multiple(0, 1, 3);
      break;
  }
  return c;
}

int height_of(const Coords& c) { return std::accumulate(c.begin(), c.end(), 0); }

}  // namespace

RootDatum RootDatum::build(LieType type, int rank) {
  validate_type(type, rank);
  if (type == LieType::D && rank == 3) type = LieType::A;
  return from_cartan(type, standard_cartan(type, rank));
}

RootDatum RootDatum::from_cartan(LieType type, CartanMatrix cartan) {
  RootDatum rd;
  rd.type_ = type;
  rd.rank_ = static_cast<int>(cartan.size());
  rd.cartan_ = std::move(cartan);
  const int n = rd.rank_;
  for (const auto& row : rd.cartan_)
    if (static_cast<int>(row.size()) != n) throw InvalidArgument("Cartan matrix is not square");
  for (int i = 0; i < n; ++i) {
    if (rd.cartan_[i][i] != 2) throw InvalidArgument("Cartan diagonal entry is not 2");
    for (int j = 0; j < n; ++j) {
      int a = rd.cartan_[i][j];
      if (i != j && (a > 0 || a < -3)) throw InvalidArgument("Cartan off-diagonal entry out of range");
      if ((a == 0) != (rd.cartan_[j][i] == 0))
        throw InvalidArgument("Cartan matrix is not symmetrisable");
    }
  }

  // Saturate simple roots under simple reflections.
  std::set<Coords> seen;
  std::deque<Coords> queue;
  for (int j = 0; j < n; ++j) {
    Coords e(n, 0);
    e[j] = 1;
    if (seen.insert(e).second) queue.push_back(e);
  }
  while (!queue.empty()) {
    Coords g = queue.front();
    queue.pop_front();
    for (int j = 0; j < n; ++j) {
      int p = 0;
      for (int i = 0; i < n; ++i) p += g[i] * rd.cartan_[j][i];
      Coords h = g;
      h[j] -= p;
      if (seen.insert(h).second) queue.push_back(h);
    }
  }

  std::vector<Coords> positives;
  for (const auto& c : seen) {
    bool nonneg = std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
    bool nonpos = std::all_of(c.begin(), c.end(), [](int x) { return x <= 0; });
    if (!nonneg && !nonpos)
      throw InternalConsistencyError("generated a root with mixed signs; Cartan matrix is not of finite type");
    if (nonneg) positives.push_back(c);
  }
  std::sort(positives.begin(), positives.end(), [](const Coords& a, const Coords& b) {
    int ha = height_of(a), hb = height_of(b);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  if (positives.size() * 2 != seen.size())
    throw InternalConsistencyError("root set is not closed under negation");

  rd.positive_count_ = static_cast<int>(positives.size());
  rd.roots_ = positives;
  for (const auto& c : positives) {
    Coords m(c);
    for (int& x : m) x = -x;
    rd.roots_.push_back(std::move(m));
  }
  rd.finish();
  return rd;
}

void RootDatum::finish() {
  const int n = rank_;
  const int total = root_count();
  for (int k = 0; k < total; ++k) root_index_.emplace(roots_[k], k);

  // Half squared lengths from the Cartan matrix: d_j / d_i = c[i][j] / c[j][i].
  std::vector<long> d(n, 0);
  for (int start = 0; start < n; ++start) {
    if (d[start] != 0) continue;
    d[start] = 6;
    std::deque<int> q{start};
    while (!q.empty()) {
      int i = q.front();
      q.pop_front();
      for (int j = 0; j < n; ++j) {
        if (j == i || cartan_[i][j] == 0 || d[j] != 0) continue;
        d[j] = d[i] * cartan_[i][j] / cartan_[j][i];
        q.push_back(j);
      }
    }
  }
  long g = 0;
  for (long x : d) g = std::gcd(g, x);
  half_length_.assign(n, 0);
  for (int i = 0; i < n; ++i) half_length_[i] = static_cast<int>(d[i] / g);

  sum_table_.assign(static_cast<std::size_t>(total) * total, -1);
  for (int a = 0; a < total; ++a) {
    for (int b = 0; b < total; ++b) {
      Coords s(n);
      for (int i = 0; i < n; ++i) s[i] = roots_[a][i] + roots_[b][i];
      auto it = root_index_.find(s);
      if (it != root_index_.end()) sum_table_[static_cast<std::size_t>(a) * total + b] = it->second;
    }
  }

  simple_reflection_.assign(n, std::vector<int>(total, -1));
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < total; ++k) {
      Coords h = roots_[k];
      h[j] -= coroot_pairing(k, j);
      simple_reflection_[j][k] = root_index_.at(h);
    }
  }
}

std::string RootDatum::name() const { return std::string(1, to_char(type_)) + std::to_string(rank_); }

int RootDatum::height(int index) const { return height_of(roots_[index]); }

std::optional<int> RootDatum::find(const Coords& coords) const {
  auto it = root_index_.find(coords);
  if (it == root_index_.end()) return std::nullopt;
  return it->second;
}

int RootDatum::index_of(const Root& r) const {
  auto k = find(r.coords);
  if (!k) throw InvalidArgument("not a root of " + name());
  return *k;
}

int RootDatum::coroot_pairing(int root_index, int node) const {
  return coroot_pairing(roots_[root_index], node);
}

int RootDatum::coroot_pairing(const Coords& x, int node) const {
  if (node < 0 || node >= rank_) throw InvalidArgument("node index out of range");
  int p = 0;
  for (int i = 0; i < rank_; ++i) p += x[i] * cartan_[node][i];
  return p;
}

int RootDatum::inner(const Coords& x, const Coords& y) const {
  // (alpha_i, alpha_j) = d_i * cartan[i][j]
  int s = 0;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) s += x[i] * y[j] * half_length_[i] * cartan_[i][j];
  return s;
}

int RootDatum::reflect(int beta, int gamma) const {
  const Coords& b = roots_[beta];
  const Coords& c = roots_[gamma];
  int pairing = 2 * inner(c, b) / inner(b, b);
  Coords h(c);
  for (int i = 0; i < rank_; ++i) h[i] -= pairing * b[i];
  return root_index_.at(h);
}

NodeSet RootDatum::support(int index) const {
  std::vector<int> v;
  for (int i = 0; i < rank_; ++i)
    if (roots_[index][i] != 0) v.push_back(i);
  return NodeSet(std::move(v));
}

std::vector<int> RootDatum::neighbours(int node) const {
  std::vector<int> v;
  for (int j = 0; j < rank_; ++j)
    if (j != node && cartan_[node][j] != 0) v.push_back(j);
  return v;
}

RootDatum build_root_system(LieType type, int rank) { return RootDatum::build(type, rank); }

std::optional<Root> root_sum(const RootDatum& rd, const Root& gamma, const Root& delta) {
  auto s = rd.sum(rd.index_of(gamma), rd.index_of(delta));
  if (!s) return std::nullopt;
  return rd.root(*s);
}

int cartan_pairing(const RootDatum& rd, const Coords& lambda, Basis basis, int node) {
  if (node < 0 || node >= rd.rank()) throw InvalidArgument("node index out of range");
  if (static_cast<int>(lambda.size()) != rd.rank()) throw InvalidArgument("vector length differs from rank");
  if (basis == Basis::FundamentalWeights) return lambda[node];
  return rd.coroot_pairing(lambda, node);
}

// ------------------------------------------------------ diagram surgery

namespace {

int bond(const RootDatum& rd, int a, int b) {
  return std::max(-rd.cartan()[a][b], -rd.cartan()[b][a]);
}

// True if a is the shorter end of a multiple bond with b.
bool shorter(const RootDatum& rd, int a, int b) { return rd.cartan()[a][b] < -1; }

// Walks a path starting at `from`, never stepping back to `avoid`.
std::vector<int> walk_arm(const RootDatum& rd, const std::set<int>& kept, int from, int avoid) {
  std::vector<int> arm{from};
  int prev = avoid, cur = from;
  while (true) {
    int next = -1;
    for (int nb : rd.neighbours(cur))
      if (kept.count(nb) && nb != prev) next = nb;
    if (next < 0) break;
    arm.push_back(next);
    prev = cur;
    cur = next;
  }
  return arm;
}

DiagramComponent classify(const RootDatum& rd, std::vector<int> nodes) {
  std::set<int> kept(nodes.begin(), nodes.end());
  const int k = static_cast<int>(nodes.size());
  auto degree = [&](int v) {
    int d = 0;
    for (int nb : rd.neighbours(v)) d += kept.count(nb) ? 1 : 0;
    return d;
  };
  if (k == 1) return {LieType::A, 1, nodes};

  int branch = -1;
  for (int v : nodes)
    if (degree(v) >= 3) branch = v;

  if (branch < 0) {
    // A path. Orient it from the end with the smaller index, then fix the
    // orientation for multiple bonds.
    int start = -1;
    for (int v : nodes)
      if (degree(v) == 1) { start = v; break; }
    std::vector<int> path = walk_arm(rd, kept, start, -1);
    int multi_at = -1, mult = 1;
    for (int t = 0; t + 1 < k; ++t) {
      int m = bond(rd, path[t], path[t + 1]);
      if (m > 1) { multi_at = t; mult = m; }
    }
    if (multi_at < 0) return {LieType::A, k, path};
    if (mult == 3) {
      if (!shorter(rd, path[0], path[1])) std::reverse(path.begin(), path.end());
      return {LieType::G, 2, path};
    }
    if (k == 4 && (multi_at == 1)) {
      // F4: long nodes first.
      if (shorter(rd, path[1], path[2])) std::reverse(path.begin(), path.end());
      return {LieType::F, 4, path};
    }
    // Double bond at one end of a longer chain: put it last. In rank 2 the
    // index order is kept, so B2 and C2 keep their own labels.
    if (multi_at == 0 && k > 2) std::reverse(path.begin(), path.end());
    bool last_short = shorter(rd, path[k - 1], path[k - 2]);
    return {last_short ? LieType::B : LieType::C, k, path};
  }

  // Branched: D or E.
  std::vector<std::vector<int>> arms;
  for (int nb : rd.neighbours(branch))
    if (kept.count(nb)) arms.push_back(walk_arm(rd, kept, nb, branch));
  std::sort(arms.begin(), arms.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.front() < b.front();
  });
  if (arms[0].size() == 1 && arms[1].size() == 1) {
    // D_k: long arm (reversed) then branch, then the two leaves.
    std::vector<int> order(arms[2].rbegin(), arms[2].rend());
    order.push_back(branch);
    order.push_back(arms[0][0]);
    order.push_back(arms[1][0]);
    return {LieType::D, k, order};
  }
  // E_k: arms of length 1, 2 and k-4.
  std::vector<int> order(k);
  order[0] = arms[1][1];
  order[1] = arms[0][0];
  order[2] = arms[1][0];
  order[3] = branch;
  for (std::size_t t = 0; t < arms[2].size(); ++t) order[4 + t] = arms[2][t];
  return {LieType::E, k, order};
}

}  // namespace

std::vector<DiagramComponent> components_of(const RootDatum& rd, const NodeSet& kept) {
  for (int v : kept)
    if (v < 0 || v >= rd.rank()) throw InvalidArgument("node index out of range");
  std::vector<DiagramComponent> out;
  std::set<int> unvisited(kept.begin(), kept.end());
  while (!unvisited.empty()) {
    int seed = *unvisited.begin();
    std::vector<int> comp;
    std::deque<int> q{seed};
    unvisited.erase(seed);
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      comp.push_back(v);
      for (int nb : rd.neighbours(v))
        if (unvisited.erase(nb)) q.push_back(nb);
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(classify(rd, comp));
  }
  return out;
}

std::vector<DiagramComponent> diagram_components_after_removal(const RootDatum& rd,
                                                               const NodeSet& removed) {
  for (int v : removed)
    if (v < 0 || v >= rd.rank()) throw InvalidArgument("node index out of range");
  return components_of(rd, removed.complement(rd.rank()));
}

std::vector<int> involution_i(const RootDatum& rd) {
  WeylElement w0 = longest_element(rd);
  std::vector<int> perm(rd.rank());
  for (int j = 0; j < rd.rank(); ++j) {
    int image = rd.negate(w0.act(j));
    if (image >= rd.rank()) throw InternalConsistencyError("-w0 does not permute simple roots");
    perm[j] = image;
  }
  return perm;
}

NodeSet apply_involution(const RootDatum& rd, const NodeSet& nodes) {
  auto inv = involution_i(rd);
  std::vector<int> v;
  for (int j : nodes) v.push_back(inv.at(j));
  return NodeSet(std::move(v));
}

std::string dynkin_dot(const RootDatum& rd) {
  std::ostringstream os;
  os << "graph dynkin_" << rd.name() << " {\n";
  os << "  node [shape=circle];\n";
  for (int j = 0; j < rd.rank(); ++j) os << "  n" << j + 1 << " [label=\"" << j + 1 << "\"];\n";
  for (int a = 0; a < rd.rank(); ++a) {
    for (int b = a + 1; b < rd.rank(); ++b) {
      int m = bond(rd, a, b);
      if (rd.cartan()[a][b] == 0) continue;
      for (int t = 0; t < m; ++t) {
        os << "  n" << a + 1 << " -- n" << b + 1;
        if (m > 1) {
          // arrow toward the short root
          bool b_short = shorter(rd, b, a);
          os << " [dir=" << (b_short ? "forward" : "back") << "]";
        }
        os << ";\n";
      }
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace lie
