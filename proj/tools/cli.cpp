#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "lie/curves.hpp"
#include "lie/desing.hpp"
#include "lie/error.hpp"
#include "lie/orbits.hpp"
#include "lie/serialize.hpp"

namespace lie::cli {

namespace {

// Input error tied to a flag; reported with exit status 1.
struct UsageError {
  std::string flag;
  std::string message;
};

struct Query {
  std::string command;
  std::string type;
  int rank = 0;
  std::optional<std::string> p, pprime, word, perm, degrees;
  std::string format = "text";
  bool all_w = false;
};

std::size_t weyl_cap() {
  const char* env = std::getenv("LIE_MAX_WEYL");
  if (!env || !*env) return kDefaultWeylCap;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) throw UsageError{"LIE_MAX_WEYL", "expected a positive integer"};
  return static_cast<std::size_t>(v);
}

std::vector<std::string> split(const std::string& s, const std::string& seps) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (seps.find(c) != std::string::npos) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

int parse_int(const std::string& flag, const std::string& tok) {
  try {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw UsageError{flag, "'" + tok + "' is not an integer"};
  }
}

RootDatum parse_group(const Query& q) {
  if (q.type.size() != 1) throw UsageError{"--type", "expected one of A,B,C,D,E,F,G"};
  try {
    return RootDatum::build(lie_type_from_char(q.type[0]), q.rank);
  } catch (const InvalidArgument& e) {
    throw UsageError{q.type.size() == 1 && std::string("ABCDEFGabcdefg").find(q.type[0]) != std::string::npos
                         ? "--rank"
                         : "--type",
                     e.what()};
  }
}

NodeSet parse_nodes(const RootDatum& rd, const std::string& flag, const std::string& text) {
  std::vector<int> v;
  for (const auto& tok : split(text, ", ")) {
    int n = parse_int(flag, tok);
    if (n < 1 || n > rd.rank())
      throw UsageError{flag, "node " + tok + " out of range 1.." + std::to_string(rd.rank())};
    v.push_back(n - 1);
  }
  return NodeSet(std::move(v));
}

std::optional<WeylElement> parse_element(const RootDatum& rd, const Query& q) {
  if (q.word && q.perm) throw UsageError{"--perm", "give either --word or --perm, not both"};
  if (q.word) {
    std::vector<int> letters;
    for (const auto& tok : split(*q.word, " ,")) {
      if (tok == "e") continue;
      int n = parse_int("--word", tok);
      if (n < 1 || n > rd.rank())
        throw UsageError{"--word", "letter " + tok + " out of range 1.." + std::to_string(rd.rank())};
      letters.push_back(n - 1);
    }
    return WeylElement::from_word(rd, letters);
  }
  if (q.perm) {
    if (rd.type() != LieType::A) throw UsageError{"--perm", "permutations are only accepted in type A"};
    std::vector<int> entries;
    auto toks = split(*q.perm, " ,");
    if (toks.size() == 1 && q.perm->find_first_of(" ,") == std::string::npos)
      for (char c : toks[0]) entries.push_back(parse_int("--perm", std::string(1, c)));
    else
      for (const auto& t : toks) entries.push_back(parse_int("--perm", t));
    try {
      return from_one_line(rd, entries);
    } catch (const InvalidArgument& e) {
      throw UsageError{"--perm", e.what()};
    }
  }
  return std::nullopt;
}

CurveClass parse_class(const NodeSet& p, const std::string& text) {
  std::vector<int> d;
  for (const auto& tok : split(text, ", ")) d.push_back(parse_int("--degrees", tok));
  if (d.size() != p.size())
    throw UsageError{"--degrees", "expected " + std::to_string(p.size()) + " degrees, one per marked node"};
  return CurveClass(p, d);
}

std::vector<int> zero_based_nodes(const Json& a) {
  std::vector<int> v = a.get<std::vector<int>>();
  for (int& x : v) --x;
  return v;
}

std::vector<int> zero_based_word(const Json& tower) { return zero_based_nodes(tower["base_word"]["word"]); }

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string coords_text(const Coords& c) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << ')';
  return os.str();
}

std::string subset_text(const RootDatum& rd, const RootSubset& s) {
  std::string out;
  for (int k : s.indices()) out += (out.empty() ? "" : " ") + coords_text(rd.coords(k));
  return out.empty() ? "-" : out;
}

void require(const std::optional<std::string>& v, const std::string& flag) {
  if (!v) throw UsageError{flag, "is required for this command"};
}

void require_format(const Query& q, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (q.format == a) return;
  throw UsageError{"--format", "'" + q.format + "' is not supported by " + q.command};
}

// ------------------------------------------------------------- commands

void cmd_root_system(const RootDatum& rd, const Query& q, std::ostream& out) {
  require_format(q, {"text", "json", "dot"});
  if (q.format == "json") {
    out << dump(to_json(rd));
    return;
  }
  if (q.format == "dot") {
    out << dynkin_dot(rd);
    return;
  }
  out << rd.name() << ": " << rd.root_count() << " roots, " << rd.positive_count() << " positive\n";
  out << "cartan:\n";
  for (const auto& row : rd.cartan()) {
    out << " ";
    for (int x : row) out << " " << x;
    out << "\n";
  }
  out << "positive roots:";
  for (int k = 0; k < rd.positive_count(); ++k) out << " " << coords_text(rd.coords(k));
  out << "\ninvolution:";
  auto inv = involution_i(rd);
  for (int j = 0; j < rd.rank(); ++j) out << " " << j + 1 << "->" << inv[j] + 1;
  out << "\n";
}

void cmd_orbits(const RootDatum& rd, const Query& q, std::ostream& out) {
  require_format(q, {"text", "json"});
  require(q.p, "--p");
  require(q.pprime, "--pprime");
  NodeSet p = parse_nodes(rd, "--p", *q.p), pp = parse_nodes(rd, "--pprime", *q.pprime);
  auto table = orbit_table(rd, p, pp, weyl_cap());
  if (q.format == "json") {
    out << dump(to_json(rd, table));
    return;
  }
  out << "P'-orbits on G/P, Sigma(P)=" << p.to_string() << " Sigma(P')=" << pp.to_string()
      << ", dim G/P=" << flag_dimension(rd, p) << "\n";
  for (const auto& o : table)
    out << "  w=" << word_to_string(o.w.reduced_word(rd)) << "  dim=" << o.dimension << "  size=" << o.size
        << (o.dense ? "  dense" : "") << "\n";
}

void cmd_codim(const RootDatum& rd, const Query& q, std::ostream& out) {
  require_format(q, {"text", "json"});
  require(q.p, "--p");
  require(q.pprime, "--pprime");
  NodeSet p = parse_nodes(rd, "--p", *q.p), pp = parse_nodes(rd, "--pprime", *q.pprime);
  bool crit = complement_codim_ge2(rd, p, pp);
  if (q.format == "text") {
    out << bool_text(crit) << "\n";
    return;
  }
  Json j;
  j["p"] = to_json(p);
  j["pprime"] = to_json(pp);
  j["involution_of_pprime"] = to_json(apply_involution(rd, pp));
  j["codim_ge2"] = crit;
  std::optional<int> codim;
  bool computed = true;
  try {
    codim = brute_force_complement_codim(rd, p, pp, weyl_cap());
  } catch (const EnumerationLimit&) {
    computed = false;
  }
  j["brute_force_codim"] = !computed ? Json("not computed") : codim ? Json(*codim) : Json(nullptr);
  out << dump(j);
}

void cmd_levi(const RootDatum& rd, const Query& q, std::ostream& out) {
  require_format(q, {"text", "json"});
  require(q.p, "--p");
  require(q.pprime, "--pprime");
  NodeSet p = parse_nodes(rd, "--p", *q.p), pp = parse_nodes(rd, "--pprime", *q.pprime);
  LeviQuotient lq = levi_quotient(rd, p, pp);
  if (q.format == "json") {
    out << dump(to_json(lq));
    return;
  }
  out << "torus rank " << lq.torus_rank << "\n";
  for (const auto& f : lq.factors) {
    std::vector<int> nodes(f.nodes);
    out << "  " << to_char(f.type) << f.rank << " on " << NodeSet(nodes).to_string() << " marked "
        << f.marked.to_string() << "\n";
  }
}

void cmd_nilradical(const RootDatum& rd, const Query& q, std::ostream& out) {
  require_format(q, {"text", "json"});
  require(q.pprime, "--pprime");
  NodeSet pp = parse_nodes(rd, "--pprime", *q.pprime);
  auto w = parse_element(rd, q);
  NilradicalFiltration f = w ? nilradical_filtration(rd, pp, *w) : nilradical_filtration(rd, pp);
  if (q.format == "json") {
    out << dump(to_json(rd, f));
    return;
  }
  out << "nilradical: " << subset_text(rd, f.nilradical) << "\n";
  for (std::size_t i = 0; i < f.layers.size(); ++i)
    out << "  layer " << i + 1 << ": " << subset_text(rd, f.layers[i]) << "\n";
}

void cmd_curves(const RootDatum& rd, const Query& q, std::ostream& out) {
  require_format(q, {"text", "json"});
  require(q.p, "--p");
  require(q.degrees, "--degrees");
  NodeSet p = parse_nodes(rd, "--p", *q.p);
  CurveClass c = parse_class(p, *q.degrees);
  ExistenceVerdict v = decide_smooth_rational_curve(rd, p, c);
  auto cands = p1_fibration_candidates(rd, p);
  if (q.format == "json") {
    Json j;
    j["class"] = to_json(c);
    j["positivity"] = to_string(positivity(c));
    j["tangent_degree"] = tangent_degree(rd, p, c);
    j["verdict"] = to_json(v);
    Json cs = Json::array();
    for (const auto& f : cands) {
      Json x;
      x["dropped"] = f.dropped + 1;
      x["target"] = to_json(f.target);
      x["relative_degree"] = f.relative_degree(c);
      cs.push_back(x);
    }
    j["p1_fibrations"] = cs;
    out << dump(j);
    return;
  }
  out << "class " << *q.degrees << " on Sigma=" << p.to_string() << ": " << to_string(positivity(c)) << "\n";
  out << "tangent degree: " << tangent_degree(rd, p, c) << "\n";
  out << "morphisms exist: " << bool_text(v.mor_nonempty) << "\n";
  out << "smooth rational curve: " << bool_text(v.smooth_curve_exists) << "\n";
  if (v.exception_hit) out << "exceptional target: " << to_string(*v.exception_hit) << "\n";
  if (v.reduction) {
    out << "reduced to:";
    if (v.reduction->empty()) out << " a point";
    for (const auto& f : *v.reduction) {
      out << " " << to_char(f.type) << f.rank << f.marked.to_string() << "[";
      for (std::size_t i = 0; i < f.restricted.degrees.size(); ++i)
        out << (i ? "," : "") << f.restricted.degrees[i];
      out << "]";
    }
    out << "\n";
  }
  for (const auto& f : cands)
    out << "P1-fibration dropping " << f.dropped + 1 << ": relative degree " << f.relative_degree(c) << "\n";
}

void cmd_hilbert(const RootDatum& rd, const Query& q, std::ostream& out) {
  require_format(q, {"text", "json"});
  require(q.p, "--p");
  require(q.degrees, "--degrees");
  NodeSet p = parse_nodes(rd, "--p", *q.p);
  CurveClass c = parse_class(p, *q.degrees);
  HilbertDimension h = hilbert_dimension(rd, p, c);
  if (q.format == "json") {
    Json j;
    j["class"] = to_json(c);
    j["dimension"] = h.dimension;
    j["on_boundary"] = h.on_boundary;
    out << dump(j);
    return;
  }
  out << h.dimension << (h.on_boundary ? " (class on the boundary of the positive cone)" : "") << "\n";
}

// Evaluates fn on every element with a small worker pool. Results keep the
// input order; the first failure by index is rethrown.
std::vector<Json> parallel_map(const std::vector<WeylElement>& xs,
                               const std::function<Json(const WeylElement&)>& fn) {
  std::vector<Json> results(xs.size());
  std::vector<std::exception_ptr> errors(xs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < xs.size(); i = next++) {
      try {
        results[i] = fn(xs[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = std::min<std::size_t>(hw, xs.size() / 16 + 1);
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

// Commands that take (P, w) and optionally sweep every w.
void for_each_element(const RootDatum& rd, const Query& q, const std::function<Json(const WeylElement&)>& run,
                      const std::function<std::string(const Json&)>& text, std::ostream& out) {
  std::vector<WeylElement> elements;
  if (q.all_w) {
    if (q.word || q.perm) throw UsageError{"--all-w", "cannot be combined with --word or --perm"};
    elements = enumerate_weyl_group(rd, weyl_cap());
  } else {
    auto w = parse_element(rd, q);
    if (!w) throw UsageError{"--word", "is required for this command (or --perm, or --all-w)"};
    elements.push_back(*w);
  }
  auto results = parallel_map(elements, run);
  if (q.format == "json") {
    if (!q.all_w) {
      out << dump(results.front());
      return;
    }
    Json arr = Json::array();
    for (std::size_t i = 0; i < elements.size(); ++i) {
      Json row;
      row["w"] = to_json(rd, elements[i]);
      row["result"] = std::move(results[i]);
      arr.push_back(std::move(row));
    }
    out << dump(arr);
    return;
  }
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (q.all_w) out << "w=" << word_to_string(elements[i].reduced_word(rd)) << ": ";
    out << text(results[i]);
  }
}

NodeSet p_or_borel(const RootDatum& rd, const Query& q) {
  return q.p ? parse_nodes(rd, "--p", *q.p) : NodeSet::all(rd.rank());
}

void cmd_desing(const RootDatum& rd, const Query& q, std::ostream& out) {
  require_format(q, {"text", "json", "dot"});
  NodeSet p = p_or_borel(rd, q);
  if (q.format == "dot") {
    if (q.all_w) throw UsageError{"--format", "dot output needs a single element"};
    auto w = parse_element(rd, q);
    if (!w) throw UsageError{"--word", "is required for this command (or --perm)"};
    out << tower_dot(rd, build_tower(rd, p, *w));
    return;
  }
  for_each_element(
      rd, q, [&](const WeylElement& w) { return to_json(rd, build_tower(rd, p, w)); },
      [&](const Json& j) {
        std::ostringstream os;
        os << "w'=" << word_to_string(zero_based_word(j)) << " dimension " << j["dimension"].get<int>()
           << ", " << j["factors"].size() << " factor(s):";
        for (const auto& f : j["factors"]) {
          std::string kind = f["kind"].get<std::string>();
          std::string idx = std::to_string(f["index"].get<int>());
          os << " " << (kind == "primed" ? "P'" + idx : kind == "unprimed" ? "P" + idx : "P'" + idx + "=P" + idx)
             << NodeSet(zero_based_nodes(f["sigma"])).to_string();
        }
        os << "\n";
        return os.str();
      },
      out);
}

void cmd_refine(const RootDatum& rd, const Query& q, std::ostream& out) {
  require_format(q, {"text", "json"});
  NodeSet p = p_or_borel(rd, q);
  for_each_element(
      rd, q, [&](const WeylElement& w) { return to_json(rd, demazure_refinement(rd, build_tower(rd, p, w))); },
      [&](const Json& j) {
        std::ostringstream os;
        auto word = j["word"].get<std::vector<int>>();
        os << "word:";
        if (word.empty()) os << " e";
        for (int x : word) os << " " << x;
        os << "  owners:";
        for (const auto& f : j["minimal_factors"]) os << " " << f["owner"].get<int>() + 1;
        os << "\n";
        return os.str();
      },
      out);
}

void cmd_smooth(const RootDatum& rd, const Query& q, std::ostream& out) {
  require_format(q, {"text", "json"});
  NodeSet p = p_or_borel(rd, q);
  for_each_element(
      rd, q,
      [&](const WeylElement& w) {
        Json j;
        j["criterion"] = smoothness_sufficient(rd, p, w);
        if (p.size() == static_cast<std::size_t>(rd.rank())) {
          int r = reflections_below(rd, w);
          j["reflections_below"] = r;
          j["length"] = w.length();
          j["rationally_smooth"] = r == w.length();
        }
        return j;
      },
      [&](const Json& j) {
        std::string s = "criterion " + bool_text(j["criterion"].get<bool>());
        if (j.contains("rationally_smooth")) s += ", rationally smooth " + bool_text(j["rationally_smooth"].get<bool>());
        return s + "\n";
      },
      out);
}

void cmd_minimal(const RootDatum& rd, const Query& q, std::ostream& out) {
  require_format(q, {"text", "json"});
  NodeSet p = p_or_borel(rd, q);
  for_each_element(
      rd, q, [&](const WeylElement& w) { return to_json(rd, minimal_schubert(rd, p, w)); },
      [&](const Json& j) {
        std::ostringstream os;
        os << "minimal " << bool_text(j["is_minimal"].get<bool>()) << ", P1 marked "
           << NodeSet(zero_based_nodes(j["p1_nodes"])).to_string() << ", minimal model dimension "
           << j["minimal_dimension"].get<int>() << "\n";
        return os.str();
      },
      out);
}

struct Command {
  const char* name;
  const char* help;
  void (*run)(const RootDatum&, const Query&, std::ostream&);
  bool p, pprime, word, degrees, all_w;
};

const Command kCommands[] = {
    {"root-system", "Root system, Cartan matrix and Dynkin diagram", cmd_root_system, false, false, false, false, false},
    {"orbits", "P'-orbits on G/P with dimensions", cmd_orbits, true, true, false, false, false},
    {"codim", "Is the complement of the dense P'-orbit of codimension >= 2", cmd_codim, true, true, false, false, false},
    {"levi", "Levi quotient R'/R as marked diagrams", cmd_levi, true, true, false, false, false},
    {"nilradical", "Ascending central series of the nilradical of P' (or w(P'))", cmd_nilradical, false, true, true, false, false},
    {"curves", "Smooth rational curve existence for a curve class", cmd_curves, true, false, false, true, false},
    {"hilbert", "Hilbert scheme dimension at a curve class", cmd_hilbert, true, false, false, true, false},
    {"desing", "Desingularization tower of the Schubert variety of w in G/P", cmd_desing, true, false, true, false, true},
    {"refine", "Demazure refinement of the tower", cmd_refine, true, false, true, false, true},
    {"smooth", "Sufficient smoothness criterion", cmd_smooth, true, false, true, false, true},
    {"minimal", "Minimal Schubert variety attached to (P, w)", cmd_minimal, true, false, true, false, true},
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Combinatorics of Schubert varieties, P'-orbits and rational curves on G/P", "lie"};
  app.require_subcommand(1, 1);
  Query q;
  std::vector<std::pair<CLI::App*, const Command*>> subs;
  for (const auto& c : kCommands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--type", q.type, "Lie type: A, B, C, D, E, F or G")->required();
    sub->add_option("--rank", q.rank, "Rank of the simple type")->required();
    sub->add_option("--format", q.format, "Output format: text, json or dot");
    if (c.p) sub->add_option("--p", q.p, "Marked nodes of P, 1-based comma list (empty string for G)");
    if (c.pprime) sub->add_option("--pprime", q.pprime, "Marked nodes of P', 1-based comma list");
    if (c.word) {
      sub->add_option("--word", q.word, "Weyl element as 1-based simple reflections, e.g. \"2 1 3 2\"");
      sub->add_option("--perm", q.perm, "Type A only: one-line permutation, e.g. 3412");
    }
    if (c.degrees) sub->add_option("--degrees", q.degrees, "Curve class degrees, one per marked node");
    if (c.all_w) sub->add_flag("--all-w", q.all_w, "Sweep every element of W");
    subs.emplace_back(sub, &c);
  }

  std::vector<const char*> argv{"lie"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    err << "error: " << e.what() << "\n" << "Run with --help for more information.\n";
    return kUsage;
  }

  const Command* chosen = nullptr;
  for (const auto& [sub, c] : subs)
    if (sub->parsed()) chosen = c;
  q.command = chosen->name;

  try {
    if (q.format != "text" && q.format != "json" && q.format != "dot")
      throw UsageError{"--format", "expected text, json or dot"};
    RootDatum rd = parse_group(q);
    std::ostringstream buffer;
    chosen->run(rd, q, buffer);
    out << buffer.str();
    return kOk;
  } catch (const UsageError& e) {
    err << "error: " << e.flag << ": " << e.message << "\n" << "Run with --help for more information.\n";
    return kUsage;
  } catch (const DomainRefusal& e) {
    if (q.format == "json") {
      Json j;
      j["error"] = "domain_refusal";
      j["reason"] = e.what();
      out << dump(j);
    } else {
      err << "refused: " << e.what() << "\n";
    }
    return kRefused;
  } catch (const EnumerationLimit& e) {
    if (q.format == "json") {
      Json j;
      j["error"] = "enumeration_limit";
      j["reason"] = e.what();
      out << dump(j);
    } else {
      err << "refused: " << e.what() << " (raise LIE_MAX_WEYL to allow)\n";
    }
    return kRefused;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace lie::cli
