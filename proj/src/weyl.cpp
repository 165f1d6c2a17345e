#include "lie/weyl.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>
#include <unordered_set>

#include "lie/error.hpp"

namespace lie {

WeylElement WeylElement::identity(const RootDatum& rd) {
  WeylElement w;
  w.perm_.resize(rd.root_count());
  for (int i = 0; i < rd.root_count(); ++i) w.perm_[i] = i;
  w.positive_count_ = rd.positive_count();
  return w;
}

WeylElement WeylElement::from_word(const RootDatum& rd, const std::vector<int>& word) {
  WeylElement w = identity(rd);
  for (int j : word) {
    if (j < 0 || j >= rd.rank())
      throw InvalidArgument("simple reflection index " + std::to_string(j + 1) + " out of range for " +
                            rd.name());
    w = w.times_simple(rd, j);
  }
  return w;
}

WeylElement WeylElement::reflection(const RootDatum& rd, int beta) {
  WeylElement w = identity(rd);
  for (int k = 0; k < rd.root_count(); ++k) w.perm_[k] = rd.reflect(beta, k);
  w.recount();
  w.word_ = w.reduced_word(rd);
  return w;
}

void WeylElement::recount() {
  length_ = 0;
  for (int i = 0; i < positive_count_; ++i)
    if (perm_[i] >= positive_count_) ++length_;
}

bool WeylElement::has_right_descent(int node) const { return perm_[node] >= positive_count_; }

bool WeylElement::has_left_descent(int node) const {
  // w^{-1}(alpha_j) < 0
  for (std::size_t i = 0; i < perm_.size(); ++i)
    if (perm_[i] == node) return static_cast<int>(i) >= positive_count_;
  return false;
}

WeylElement WeylElement::times_simple(const RootDatum& rd, int node) const {
  WeylElement w;
  w.positive_count_ = positive_count_;
  w.perm_.resize(perm_.size());
  for (std::size_t i = 0; i < perm_.size(); ++i)
    w.perm_[i] = perm_[rd.reflect_simple(node, static_cast<int>(i))];
  w.word_ = word_;
  w.word_.push_back(node);
  w.recount();
  return w;
}

WeylElement WeylElement::simple_times(const RootDatum& rd, int node) const {
  WeylElement w;
  w.positive_count_ = positive_count_;
  w.perm_.resize(perm_.size());
  for (std::size_t i = 0; i < perm_.size(); ++i) w.perm_[i] = rd.reflect_simple(node, perm_[i]);
  w.word_.reserve(word_.size() + 1);
  w.word_.push_back(node);
  w.word_.insert(w.word_.end(), word_.begin(), word_.end());
  w.recount();
  return w;
}

WeylElement WeylElement::inverse() const {
  WeylElement w;
  w.positive_count_ = positive_count_;
  w.perm_.resize(perm_.size());
  for (std::size_t i = 0; i < perm_.size(); ++i) w.perm_[perm_[i]] = static_cast<int>(i);
  w.word_.assign(word_.rbegin(), word_.rend());
  w.length_ = length_;
  return w;
}

WeylElement WeylElement::compose(const WeylElement& other) const {
  if (perm_.size() != other.perm_.size()) throw InvalidArgument("Weyl elements from different root systems");
  WeylElement w;
  w.positive_count_ = positive_count_;
  w.perm_.resize(perm_.size());
  for (std::size_t i = 0; i < perm_.size(); ++i) w.perm_[i] = perm_[other.perm_[i]];
  w.word_ = word_;
  w.word_.insert(w.word_.end(), other.word_.begin(), other.word_.end());
  w.recount();
  return w;
}

std::vector<int> WeylElement::reduced_word(const RootDatum& rd) const {
  std::vector<int> out;
  WeylElement w = *this;
  while (w.length_ > 0) {
    int j = 0;
    while (!w.has_left_descent(j)) ++j;
    out.push_back(j);
    w = w.simple_times(rd, j);
  }
  return out;
}

std::size_t WeylHash::operator()(const WeylElement& w) const {
  std::size_t h = 1469598103934665603ull;
  for (int x : w.perm()) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
  return h;
}

Root act_on_root(const RootDatum& rd, const WeylElement& w, const Root& gamma) {
  int k = rd.index_of(gamma);
  if (static_cast<int>(w.perm().size()) != rd.root_count())
    throw InvalidArgument("Weyl element belongs to another root system");
  return rd.root(w.act(k));
}

WeylElement longest_element(const RootDatum& rd) {
  WeylElement w = WeylElement::identity(rd);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int j = 0; j < rd.rank(); ++j) {
      if (!w.has_right_descent(j)) {
        w = w.times_simple(rd, j);
        grew = true;
      }
    }
  }
  return w;
}

double weyl_group_order(const RootDatum& rd) {
  const int n = rd.rank();
  auto fact = [](int k) {
    double f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };
  switch (rd.type()) {
    case LieType::A: return fact(n + 1);
    case LieType::B:
    case LieType::C: return std::pow(2.0, n) * fact(n);
    case LieType::D: return std::pow(2.0, n - 1) * fact(n);
    case LieType::E: return n == 6 ? 51840.0 : n == 7 ? 2903040.0 : 696729600.0;
    case LieType::F: return 1152.0;
    case LieType::G: return 12.0;
  }
  return 0;
}

std::vector<WeylElement> enumerate_weyl_group(const RootDatum& rd, std::size_t cap) {
  double order = weyl_group_order(rd);
  if (order > static_cast<double>(cap)) {
    std::ostringstream os;
    os << "|W(" << rd.name() << ")| = " << static_cast<long long>(order) << " exceeds enumeration cap "
       << cap;
    throw EnumerationLimit(os.str());
  }
  std::vector<WeylElement> all{WeylElement::identity(rd)};
  std::unordered_set<WeylElement, WeylHash> seen{all.front()};
  for (std::size_t k = 0; k < all.size(); ++k) {
    for (int j = 0; j < rd.rank(); ++j) {
      if (all[k].has_right_descent(j)) continue;
      WeylElement next = all[k].times_simple(rd, j);
      if (seen.insert(next).second) all.push_back(std::move(next));
    }
  }
  std::sort(all.begin(), all.end());
  return all;
}

bool bruhat_leq(const RootDatum& rd, const WeylElement& u, const WeylElement& w) {
  WeylElement x = u, y = w;
  while (true) {
    if (x.length() > y.length()) return false;
    if (y.length() == 0) return x.length() == 0;
    if (x.length() == 0) return true;
    int s = 0;
    while (!y.has_left_descent(s)) ++s;
    if (x.has_left_descent(s)) x = x.simple_times(rd, s);
    y = y.simple_times(rd, s);
  }
}

bool BruhatOrder::leq(const WeylElement& u, const WeylElement& w) {
  auto key = std::make_pair(u.perm(), w.perm());
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  bool result;
  if (u.length() > w.length()) {
    result = false;
  } else if (w.length() == 0) {
    result = u.length() == 0;
  } else if (u.length() == 0) {
    result = true;
  } else {
    int s = 0;
    while (!w.has_left_descent(s)) ++s;
    WeylElement sw = w.simple_times(rd_, s);
    result = u.has_left_descent(s) ? leq(u.simple_times(rd_, s), sw) : leq(u, sw);
  }
  std::lock_guard<std::mutex> lock(mutex_);
  memo_.emplace(std::move(key), result);
  return result;
}

namespace {
void check_nodes(const RootDatum& rd, const NodeSet& nodes) {
  for (int j : nodes)
    if (j < 0 || j >= rd.rank())
      throw InvalidArgument("node " + std::to_string(j + 1) + " out of range for " + rd.name());
}
}  // namespace

std::vector<CosetOrbit> double_coset_orbits(const RootDatum& rd, const NodeSet& left_nodes,
                                            const NodeSet& right_nodes, std::size_t cap) {
  check_nodes(rd, left_nodes);
  check_nodes(rd, right_nodes);
  std::vector<WeylElement> all = enumerate_weyl_group(rd, cap);
  std::unordered_map<WeylElement, std::size_t, WeylHash> index;
  for (std::size_t k = 0; k < all.size(); ++k) index.emplace(all[k], k);
  std::vector<char> visited(all.size(), 0);

  std::vector<CosetOrbit> orbits;
  for (std::size_t start = 0; start < all.size(); ++start) {
    if (visited[start]) continue;
    visited[start] = 1;
    std::vector<std::size_t> members{start};
    for (std::size_t k = 0; k < members.size(); ++k) {
      const WeylElement& g = all[members[k]];
      auto visit = [&](const WeylElement& h) {
        std::size_t id = index.at(h);
        if (!visited[id]) {
          visited[id] = 1;
          members.push_back(id);
        }
      };
      for (int j : left_nodes) visit(g.simple_times(rd, j));
      for (int j : right_nodes) visit(g.times_simple(rd, j));
    }
    std::sort(members.begin(), members.end());
    CosetOrbit orbit{all[members.front()], {}, left_nodes, right_nodes};
    orbit.members.reserve(members.size());
    for (std::size_t id : members) orbit.members.push_back(all[id]);
    orbits.push_back(std::move(orbit));
  }
  // `all` is sorted and starts are visited in order, so orbits are already
  // ordered by representative.
  return orbits;
}

WeylElement minimal_double_coset_rep(const RootDatum& rd, const WeylElement& w,
                                     const NodeSet& left_nodes, const NodeSet& right_nodes) {
  check_nodes(rd, left_nodes);
  check_nodes(rd, right_nodes);
  WeylElement x = w;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int j : left_nodes) {
      if (x.has_left_descent(j)) {
        x = x.simple_times(rd, j);
        moved = true;
      }
    }
    for (int j : right_nodes) {
      if (x.has_right_descent(j)) {
        x = x.times_simple(rd, j);
        moved = true;
      }
    }
  }
  return WeylElement::from_word(rd, x.reduced_word(rd));
}

WeylElement from_one_line(const RootDatum& rd, const std::vector<int>& one_line) {
  if (rd.type() != LieType::A) throw InvalidArgument("permutation input is only defined for type A");
  const int n = rd.rank() + 1;
  if (static_cast<int>(one_line.size()) != n)
    throw InvalidArgument("permutation must have " + std::to_string(n) + " entries for " + rd.name());
  std::vector<int> check(one_line);
  std::sort(check.begin(), check.end());
  for (int i = 0; i < n; ++i)
    if (check[i] != i + 1) throw InvalidArgument("not a permutation of 1.." + std::to_string(n));

  // Peel right descents: w = w' s_i whenever w(i) > w(i+1).
  std::vector<int> p(one_line), rev;
  while (true) {
    int i = 0;
    while (i + 1 < n && p[i] < p[i + 1]) ++i;
    if (i + 1 >= n) break;
    std::swap(p[i], p[i + 1]);
    rev.push_back(i);
  }
  return WeylElement::from_word(rd, std::vector<int>(rev.rbegin(), rev.rend()));
}

std::vector<int> to_one_line(const RootDatum& rd, const WeylElement& w) {
  if (rd.type() != LieType::A) throw InvalidArgument("one-line notation is only defined for type A");
  std::vector<int> p(rd.rank() + 1);
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = static_cast<int>(i) + 1;
  for (int j : w.reduced_word(rd)) std::swap(p[j], p[j + 1]);
  return p;
}

std::string word_to_string(const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::ostringstream os;
  for (std::size_t k = 0; k < word.size(); ++k) os << (k ? " " : "") << word[k] + 1;
  return os.str();
}

}  // namespace lie
