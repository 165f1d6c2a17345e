#include "lie/orbits.hpp"

#include <algorithm>

#include "lie/error.hpp"

namespace lie {

int levi_positive_count(const RootDatum& rd, const NodeSet& p_nodes) {
  return levi_roots(rd, p_nodes).count() / 2;
}

int flag_dimension(const RootDatum& rd, const NodeSet& p_nodes) {
  return rd.positive_count() - levi_positive_count(rd, p_nodes);
}

bool is_dense_orbit(const RootDatum& rd, const WeylElement& w, const NodeSet& p_nodes,
                    const NodeSet& pprime_nodes) {
  RootSubset p = standard_parabolic_roots(rd, p_nodes);
  RootSubset wpp = apply(rd, w, standard_parabolic_roots(rd, pprime_nodes));
  return contains_borel(rd, p & negated(rd, wpp)).has_value();
}

bool is_dense_orbit_by_coset(const RootDatum& rd, const WeylElement& w, const NodeSet& p_nodes,
                             const NodeSet& pprime_nodes) {
  NodeSet left = p_nodes.complement(rd.rank());
  NodeSet right = pprime_nodes.complement(rd.rank());
  return minimal_double_coset_rep(rd, w, left, right) ==
         minimal_double_coset_rep(rd, longest_element(rd), left, right);
}

int orbit_dimension(const RootDatum& rd, const WeylElement& w, const NodeSet& p_nodes,
                    const NodeSet& pprime_nodes) {
  RootSubset p = standard_parabolic_roots(rd, p_nodes);
  RootSubset wpp = apply(rd, w, standard_parabolic_roots(rd, pprime_nodes));
  return wpp.count() - (wpp & p).count();
}

std::vector<OrbitDescriptor> orbit_table(const RootDatum& rd, const NodeSet& p_nodes,
                                         const NodeSet& pprime_nodes, std::size_t cap) {
  auto orbits = double_coset_orbits(rd, p_nodes.complement(rd.rank()),
                                    pprime_nodes.complement(rd.rank()), cap);
  const int full = flag_dimension(rd, p_nodes);
  std::vector<OrbitDescriptor> out;
  for (const auto& o : orbits) {
    int d = orbit_dimension(rd, o.representative, p_nodes, pprime_nodes);
    out.push_back({o.representative, p_nodes, pprime_nodes, d, d == full, o.members.size()});
  }
  return out;
}

bool complement_codim_ge2(const RootDatum& rd, const NodeSet& p_nodes, const NodeSet& pprime_nodes) {
  return p_nodes.intersect(apply_involution(rd, pprime_nodes)).empty();
}

std::optional<int> brute_force_complement_codim(const RootDatum& rd, const NodeSet& p_nodes,
                                                const NodeSet& pprime_nodes, std::size_t cap) {
  const int full = flag_dimension(rd, p_nodes);
  int best = -1;
  for (const auto& o : orbit_table(rd, p_nodes, pprime_nodes, cap))
    if (!o.dense) best = std::max(best, o.dimension);
  if (best < 0) return std::nullopt;
  return full - best;
}

LeviQuotient levi_quotient(const RootDatum& rd, const NodeSet& p_nodes, const NodeSet& pprime_nodes) {
  NodeSet image = apply_involution(rd, pprime_nodes);
  NodeSet clash = p_nodes.intersect(image);
  if (!clash.empty()) {
    throw DomainRefusal("levi quotient undefined: node " + std::to_string(clash.nodes().front() + 1) +
                        " lies in both Sigma(P) and i(Sigma(P'))");
  }
  NodeSet marks = apply_involution(rd, p_nodes);
  LeviQuotient q{{}, static_cast<int>(pprime_nodes.size())};
  for (const auto& c : diagram_components_after_removal(rd, pprime_nodes)) {
    std::vector<int> marked;
    for (int v : c.nodes)
      if (marks.contains(v)) marked.push_back(v);
    q.factors.push_back({c.type, c.rank, c.nodes, NodeSet(marked)});
  }
  return q;
}

NilradicalFiltration nilradical_filtration(const RootDatum& rd, const NodeSet& pprime_nodes) {
  for (int j : pprime_nodes)
    if (j < 0 || j >= rd.rank()) throw InvalidArgument("node index out of range");
  RootSubset n(rd.root_count());
  for (int k = 0; k < rd.positive_count(); ++k)
    if (!rd.support(k).intersect(pprime_nodes).empty()) n.insert(k);

  NilradicalFiltration f{n, {}};
  RootSubset below(rd.root_count());  // N'_{i-1}
  while (!(below == n)) {
    RootSubset next = below;
    for (int g : (n - below).indices()) {
      bool central = true;
      for (int d : n.indices()) {
        auto s = rd.sum(g, d);
        if (s && !below.contains(*s)) {
          central = false;
          break;
        }
      }
      if (central) next.insert(g);
    }
    if (next == below) throw InternalConsistencyError("central series stalled on a nilpotent set");
    f.layers.push_back(next - below);
    below = std::move(next);
  }
  return f;
}

NilradicalFiltration nilradical_filtration(const RootDatum& rd, const NodeSet& pprime_nodes,
                                           const WeylElement& w) {
  NilradicalFiltration f = nilradical_filtration(rd, pprime_nodes);
  f.nilradical = apply(rd, w, f.nilradical);
  for (auto& layer : f.layers) layer = apply(rd, w, layer);
  return f;
}

}  // namespace lie
