#include "lie/serialize.hpp"

#include "lie/error.hpp"

namespace lie {

namespace {

std::vector<int> one_based(const std::vector<int>& v) {
  std::vector<int> out(v);
  for (int& x : out) ++x;
  return out;
}

std::vector<int> zero_based(const Json& j) {
  std::vector<int> out = j.get<std::vector<int>>();
  for (int& x : out) {
    if (x < 1) throw InvalidArgument("node and letter labels start at 1");
    --x;
  }
  return out;
}

std::string type_name(LieType t) { return std::string(1, to_char(t)); }

LieType type_from_json(const Json& j) {
  auto s = j.get<std::string>();
  if (s.size() != 1) throw InvalidArgument("bad Lie type in JSON: " + s);
  return lie_type_from_char(s[0]);
}

// Parses with the given reader, re-emits, and insists on identical bytes.
template <class T, class Emit>
T checked(const Json& j, T value, Emit emit) {
  if (emit(value) != j) throw InvalidArgument("JSON does not describe a consistent object");
  return value;
}

}  // namespace

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(const NodeSet& s) { return one_based(s.nodes()); }

NodeSet node_set_from_json(const Json& j) { return NodeSet(zero_based(j)); }

Json to_json(const RootDatum& rd) {
  Json j;
  j["type"] = type_name(rd.type());
  j["rank"] = rd.rank();
  j["cartan"] = rd.cartan();
  j["root_count"] = rd.root_count();
  j["positive_count"] = rd.positive_count();
  Json pos = Json::array();
  for (int k = 0; k < rd.positive_count(); ++k) pos.push_back(rd.coords(k));
  j["positive_roots"] = pos;
  j["involution"] = one_based(involution_i(rd));
  return j;
}

RootDatum root_datum_from_json(const Json& j) {
  RootDatum rd = RootDatum::from_cartan(type_from_json(j.at("type")),
                                        j.at("cartan").get<CartanMatrix>());
  return checked(j, rd, [](const RootDatum& r) { return to_json(r); });
}

Json to_json(const RootDatum& rd, const WeylElement& w) {
  Json j;
  j["word"] = one_based(w.reduced_word(rd));
  j["length"] = w.length();
  return j;
}

WeylElement weyl_from_json(const RootDatum& rd, const Json& j) {
  WeylElement w = WeylElement::from_word(rd, zero_based(j.at("word")));
  return checked(j, w, [&](const WeylElement& x) { return to_json(rd, x); });
}

Json to_json(const RootDatum& rd, const RootSubset& s) {
  Json a = Json::array();
  for (const auto& c : subset_coords(rd, s)) a.push_back(c);
  return a;
}

RootSubset root_subset_from_json(const RootDatum& rd, const Json& j) {
  RootSubset s(rd.root_count());
  for (const auto& c : j) s.insert(rd.index_of(Root{c.get<Coords>()}));
  return checked(j, s, [&](const RootSubset& x) { return to_json(rd, x); });
}

Json to_json(const RootDatum& rd, const std::vector<OrbitDescriptor>& table) {
  Json j;
  j["p"] = table.empty() ? Json::array() : to_json(table.front().p_nodes);
  j["pprime"] = table.empty() ? Json::array() : to_json(table.front().pprime_nodes);
  Json rows = Json::array();
  for (const auto& o : table) {
    Json r;
    r["representative_word"] = one_based(o.w.reduced_word(rd));
    r["dimension"] = o.dimension;
    r["size"] = o.size;
    r["dense"] = o.dense;
    rows.push_back(r);
  }
  j["orbits"] = rows;
  return j;
}

std::vector<OrbitDescriptor> orbit_table_from_json(const RootDatum& rd, const Json& j) {
  NodeSet p = node_set_from_json(j.at("p"));
  NodeSet pp = node_set_from_json(j.at("pprime"));
  std::vector<OrbitDescriptor> table;
  for (const auto& r : j.at("orbits")) {
    table.push_back({WeylElement::from_word(rd, zero_based(r.at("representative_word"))), p, pp,
                     r.at("dimension").get<int>(), r.at("dense").get<bool>(),
                     r.at("size").get<std::size_t>()});
  }
  return checked(j, table, [&](const auto& t) { return to_json(rd, t); });
}

Json to_json(const LeviQuotient& q) {
  Json j;
  Json fs = Json::array();
  for (const auto& f : q.factors) {
    Json x;
    x["type"] = type_name(f.type);
    x["rank"] = f.rank;
    x["nodes"] = one_based(f.nodes);
    x["marked"] = to_json(f.marked);
    fs.push_back(x);
  }
  j["factors"] = fs;
  j["torus_rank"] = q.torus_rank;
  return j;
}

LeviQuotient levi_quotient_from_json(const Json& j) {
  LeviQuotient q{{}, j.at("torus_rank").get<int>()};
  for (const auto& x : j.at("factors")) {
    q.factors.push_back({type_from_json(x.at("type")), x.at("rank").get<int>(), zero_based(x.at("nodes")),
                         node_set_from_json(x.at("marked"))});
  }
  return checked(j, q, [](const LeviQuotient& v) { return to_json(v); });
}

Json to_json(const RootDatum& rd, const NilradicalFiltration& f) {
  Json j;
  j["nilradical"] = to_json(rd, f.nilradical);
  Json layers = Json::array();
  for (const auto& l : f.layers) layers.push_back(to_json(rd, l));
  j["layers"] = layers;
  j["affine_steps"] = f.affine_steps();
  return j;
}

NilradicalFiltration nilradical_from_json(const RootDatum& rd, const Json& j) {
  NilradicalFiltration f{root_subset_from_json(rd, j.at("nilradical")), {}};
  for (const auto& l : j.at("layers")) f.layers.push_back(root_subset_from_json(rd, l));
  return checked(j, f, [&](const NilradicalFiltration& v) { return to_json(rd, v); });
}

Json to_json(const CurveClass& c) {
  Json j;
  j["nodes"] = to_json(c.nodes);
  j["degrees"] = c.degrees;
  return j;
}

CurveClass curve_class_from_json(const Json& j) {
  CurveClass c(node_set_from_json(j.at("nodes")), j.at("degrees").get<std::vector<int>>());
  return checked(j, c, [](const CurveClass& v) { return to_json(v); });
}

Json to_json(const ExistenceVerdict& v) {
  Json j;
  j["mor_nonempty"] = v.mor_nonempty;
  j["smooth"] = v.smooth_curve_exists;
  j["exception"] = v.exception_hit ? Json(to_string(*v.exception_hit)) : Json(nullptr);
  if (v.reduction) {
    Json r = Json::array();
    for (const auto& f : *v.reduction) {
      Json x;
      x["type"] = type_name(f.type);
      x["rank"] = f.rank;
      x["nodes"] = one_based(f.nodes);
      x["marked"] = to_json(f.marked);
      x["degrees"] = f.restricted.degrees;
      r.push_back(x);
    }
    j["reduction"] = r;
  } else {
    j["reduction"] = nullptr;
  }
  return j;
}

ExistenceVerdict verdict_from_json(const Json& j) {
  ExistenceVerdict v;
  v.mor_nonempty = j.at("mor_nonempty").get<bool>();
  v.smooth_curve_exists = j.at("smooth").get<bool>();
  if (!j.at("exception").is_null()) {
    auto s = j.at("exception").get<std::string>();
    if (s == "P1") v.exception_hit = ExceptionalTarget::P1;
    else if (s == "P2") v.exception_hit = ExceptionalTarget::P2;
    else if (s == "P1xP1") v.exception_hit = ExceptionalTarget::P1xP1;
    else throw InvalidArgument("unknown exception tag " + s);
  }
  if (!j.at("reduction").is_null()) {
    std::vector<ReducedFactor> fs;
    for (const auto& x : j.at("reduction")) {
      NodeSet marked = node_set_from_json(x.at("marked"));
      fs.push_back({type_from_json(x.at("type")), x.at("rank").get<int>(), zero_based(x.at("nodes")), marked,
                    CurveClass(marked, x.at("degrees").get<std::vector<int>>())});
    }
    v.reduction = std::move(fs);
  }
  return checked(j, v, [](const ExistenceVerdict& x) { return to_json(x); });
}

namespace {

const char* kind_name(FactorKind k) {
  switch (k) {
    case FactorKind::Primed: return "primed";
    case FactorKind::Unprimed: return "unprimed";
    case FactorKind::Merged: return "merged";
  }
  return "";
}

}  // namespace

Json to_json(const RootDatum& rd, const DesingTower& t) {
  Json j;
  j["base_word"] = to_json(rd, t.base_word);
  j["quotient"] = to_json(t.quotient);
  j["dimension"] = tower_dimension(t);
  j["terminal_index"] = t.sequence.terminal_index;
  Json steps = Json::array();
  for (int k = 0; k < t.sequence.terminal_index; ++k) {
    const auto& [b, bp] = t.sequence.borels[k];
    const auto& [p, pp] = t.sequence.parabolics[k];
    Json s;
    s["n"] = k + 1;
    s["sigma_p"] = to_json(marked_nodes(rd, p, b));
    s["sigma_pprime"] = to_json(marked_nodes(rd, pp, bp));
    s["union_size"] = (b.roots() | bp.roots()).count();
    steps.push_back(s);
  }
  j["sequence"] = steps;
  Json fs = Json::array();
  for (const auto& f : t.factors) {
    Json x;
    x["kind"] = kind_name(f.kind);
    x["index"] = f.index;
    x["sigma"] = to_json(f.sigma);
    x["roots"] = to_json(rd, f.roots.roots());
    fs.push_back(x);
  }
  j["factors"] = fs;
  Json js = Json::array();
  for (const auto& r : t.junctions) js.push_back(to_json(rd, r));
  j["junctions"] = js;
  return j;
}

DesingTower tower_from_json(const RootDatum& rd, const Json& j) {
  WeylElement w = weyl_from_json(rd, j.at("base_word"));
  NodeSet q = node_set_from_json(j.at("quotient"));
  return checked(j, build_tower(rd, q, w), [&](const DesingTower& t) { return to_json(rd, t); });
}

Json to_json(const RootDatum& rd, const RefinedChain& c) {
  Json j;
  j["word"] = one_based(c.word);
  j["length"] = c.word.size();
  Json fs = Json::array();
  for (std::size_t i = 0; i < c.minimal_factors.size(); ++i) {
    Json x;
    x["owner"] = c.owner[i];
    x["roots"] = to_json(rd, c.minimal_factors[i].roots());
    fs.push_back(x);
  }
  j["minimal_factors"] = fs;
  return j;
}

RefinedChain refined_chain_from_json(const RootDatum& rd, const Json& j) {
  RefinedChain c;
  c.word = zero_based(j.at("word"));
  c.borels.push_back(BorelSet::standard(rd));
  WeylElement u = WeylElement::identity(rd);
  for (int letter : c.word) {
    if (letter < 0 || letter >= rd.rank()) throw InvalidArgument("refined word letter out of range");
    c.borels.push_back(reflect_borel(rd, c.borels.back(), u.act(letter)));
    u = u.times_simple(rd, letter);
  }
  const auto& fs = j.at("minimal_factors");
  if (fs.size() != c.word.size()) throw InvalidArgument("refined chain JSON has mismatched lengths");
  for (std::size_t i = c.borels.size() - 1; i >= 1; --i) {
    c.minimal_factors.push_back(ParabolicSet::make(rd, c.borels[i].roots() | c.borels[i - 1].roots()));
    c.owner.push_back(fs[c.borels.size() - 1 - i].at("owner").get<int>());
  }
  return checked(j, c, [&](const RefinedChain& x) { return to_json(rd, x); });
}

Json to_json(const RootDatum& rd, const MinimalSchubert& m) {
  Json j;
  j["is_minimal"] = m.is_minimal;
  j["p1_nodes"] = to_json(m.p1_nodes);
  j["w_prime"] = to_json(rd, m.w_prime);
  j["minimal_dimension"] = m.minimal_dimension;
  return j;
}

MinimalSchubert minimal_schubert_from_json(const RootDatum& rd, const Json& j) {
  MinimalSchubert m{j.at("is_minimal").get<bool>(), node_set_from_json(j.at("p1_nodes")),
                    weyl_from_json(rd, j.at("w_prime")), j.at("minimal_dimension").get<int>()};
  return checked(j, m, [&](const MinimalSchubert& x) { return to_json(rd, x); });
}

}  // namespace lie
