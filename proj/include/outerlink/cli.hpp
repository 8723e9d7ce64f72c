#pragma once

// Commands behind the outerlink tool. Each builds a self-contained run
// report (stable field order) and a human-readable rendering of it.

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "outerlink/classify.hpp"
#include "outerlink/io.hpp"
#include "outerlink/verify.hpp"

namespace outerlink::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kSuccess = 0, kFailure = 1, kInputError = 2 };

struct RunReport {
  Json document;
  std::string text;
  int exit_code = kSuccess;
};

// ---------------------------------------------------------------------------
// JSON pieces

inline Json labels_of(const Graph& g, const std::vector<Vertex>& vs) {
  Json out = Json::array();
  for (Vertex v : vs) out.push_back(g.label(v));
  return out;
}

inline Json graph_json(const Graph& g) {
  Json out;
  out["vertices"] = g.order();
  out["edges"] = g.size();
  out["graph6"] = to_graph6(g);
  if (g.has_labels()) out["labels"] = g.labels();
  return out;
}

inline Json minor_json(const Graph& g, const MinorWitness& w) {
  Json sets;
  for (int x = 0; x < w.minor.order(); ++x)
    sets[w.minor.label(x)] = labels_of(g, w.branch_sets[x]);
  Json out;
  out["minor"] = obstruction_name(w);
  out["branch_sets"] = std::move(sets);
  return out;
}

inline Json diagram_json(const OuterDiagram& d) {
  const Graph& g = d.graph();
  Json out;
  out["order"] = labels_of(g, d.boundary_order().sequence());
  Json crossings = Json::array();
  for (const Crossing& c : d.crossings()) {
    Json x;
    x["id"] = c.id;
    x["over"] = g.edge_label(c.over);
    x["under"] = g.edge_label(c.under);
    crossings.push_back(std::move(x));
  }
  out["crossings"] = std::move(crossings);
  return out;
}

inline Json outer_link_json(const Graph& g, const CycleEdgeLink& l) {
  Json out;
  out["cycle"] = labels_of(g, l.cycle);
  out["edge"] = g.edge_label(l.edge);
  return out;
}

inline Json rotation_json(const Graph& g, const RotationSystem& rs) {
  Json out;
  for (Vertex v = 0; v < g.order(); ++v) out[g.label(v)] = labels_of(g, rs.rotation[v]);
  return out;
}

// ---------------------------------------------------------------------------
// classify

inline Json classification_json(const Graph& g, const ClassificationReport& r) {
  Json flags;
  flags["outerplanar"] = r.outerplanar;
  flags["planar"] = r.planar;
  flags["intrinsically_s1_linked"] = r.intrinsically_s1_linked;
  flags["intrinsically_outer_linked"] = r.intrinsically_outer_linked;
  flags["outer_flat_and_linkless"] = r.outer_flat_and_linkless;
  flags["brute_force_checked"] = r.brute_force_checked;

  Json w;
  if (r.linkless_order) w["linkless_order"] = labels_of(g, r.linkless_order->sequence());
  if (r.sample_link) {
    Json s;
    s["order"] = labels_of(g, r.sample_order->sequence());
    s["link"] = {g.edge_label(r.sample_link->first), g.edge_label(r.sample_link->second)};
    w["s1_link"] = std::move(s);
  }
  if (r.outerplanarity.obstruction)
    w["outerplanarity_obstruction"] = minor_json(g, *r.outerplanarity.obstruction);
  if (r.planarity.obstruction) w["planarity_obstruction"] = minor_json(g, *r.planarity.obstruction);
  if (r.planarity.rotation_system) w["rotation_system"] = rotation_json(g, *r.planarity.rotation_system);
  if (r.linkless_diagram) w["linkless_diagram"] = diagram_json(*r.linkless_diagram);
  if (r.sample_diagram && r.sample_outer_link) {
    Json s;
    s["diagram"] = diagram_json(*r.sample_diagram);
    s["link"] = outer_link_json(g, *r.sample_outer_link);
    w["outer_link"] = std::move(s);
  }

  Json out;
  out["graph"] = graph_json(g);
  out["flags"] = std::move(flags);
  out["witnesses"] = std::move(w);
  return out;
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string count_of(std::size_t k, const std::string& noun) {
  return std::to_string(k) + " " + noun + (k == 1 ? "" : "s");
}

inline RunReport cmd_classify(const std::vector<Graph>& graphs, const std::string& source) {
  RunReport rep;
  rep.document["command"] = "classify";
  rep.document["input"] = source;
  Json results = Json::array();
  std::ostringstream text;
  text << "graph6      V   E  outerplanar planar IL_S1 IL_outer outer_flat\n";
  for (const Graph& g : graphs) {
    const ClassificationReport r = classify(g);
    results.push_back(classification_json(g, r));
    std::string g6 = to_graph6(g);
    if (g6.size() < 10) g6.resize(10, ' ');
    text << g6 << ' ';
    text.width(3);
    text << g.order() << ' ';
    text.width(3);
    text << g.size() << "  ";
    text << (r.outerplanar ? "yes        " : "no         ") << (r.planar ? "yes    " : "no     ")
         << (r.intrinsically_s1_linked ? "yes   " : "no    ")
         << (r.intrinsically_outer_linked ? "yes      " : "no       ")
         << yes_no(r.outer_flat_and_linkless) << '\n';
    if (r.linkless_order) text << "  linkless order " << r.linkless_order->to_string(g) << '\n';
    if (r.sample_link)
      text << "  order " << r.sample_order->to_string(g) << " links "
           << r.sample_link->to_string(g) << '\n';
    if (r.outerplanarity.obstruction)
      text << "  " << obstruction_name(*r.outerplanarity.obstruction) << " minor "
           << minor_json(g, *r.outerplanarity.obstruction)["branch_sets"].dump() << '\n';
    if (r.planarity.obstruction)
      text << "  " << obstruction_name(*r.planarity.obstruction) << " minor "
           << minor_json(g, *r.planarity.obstruction)["branch_sets"].dump() << '\n';
    if (r.linkless_diagram)
      text << "  two-page linkless diagram with "
           << count_of(r.linkless_diagram->crossings().size(), "crossing") << '\n';
    if (r.sample_outer_link)
      text << "  natural convex diagram links " << r.sample_outer_link->to_string(g) << '\n';
  }
  rep.document["results"] = std::move(results);
  rep.text = text.str();
  return rep;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOptions {
  int n = 6;
  int trials = 1000;
  std::uint64_t seed = 42;
  int jobs = 1;
};

inline const std::vector<std::string>& theorem_names() {
  static const std::vector<std::string> names{
      "s1-equivalence", "expansion-preservation", "k5-parity",     "k33-parity",
      "crossing-invariance", "apex-cg",          "outer-equivalence", "forbidden-minors",
      "linkless-order"};
  return names;
}

// Throws GraphError for an unknown theorem or an out-of-range bound.
inline RunReport cmd_verify(const std::string& theorem, const VerifyOptions& opt) {
  SweepResult r;
  bool seeded = false, bounded = false;
  if (theorem == "s1-equivalence") {
    r = verify_s1_equivalence(opt.n, opt.jobs);
    bounded = true;
  } else if (theorem == "expansion-preservation") {
    r = verify_expansion_preservation(opt.jobs);
  } else if (theorem == "k5-parity") {
    r = verify_outer_parity(complete_graph(5), opt.trials, opt.seed, opt.jobs);
    seeded = true;
  } else if (theorem == "k33-parity") {
    r = verify_outer_parity(complete_bipartite(3, 3), opt.trials, opt.seed, opt.jobs);
    seeded = true;
  } else if (theorem == "crossing-invariance") {
    r = verify_crossing_invariance(opt.trials, opt.seed, opt.jobs);
    seeded = true;
  } else if (theorem == "apex-cg") {
    r = verify_apex_cg(opt.trials, std::max(1, opt.trials / 5), opt.seed, opt.jobs);
    seeded = true;
  } else if (theorem == "outer-equivalence") {
    r = verify_outer_equivalence(opt.n, opt.jobs);
    bounded = true;
  } else if (theorem == "forbidden-minors") {
    r = verify_forbidden_minors(opt.n, opt.jobs);
    bounded = true;
  } else if (theorem == "linkless-order") {
    r = verify_linkless_orders(opt.n, opt.jobs);
    bounded = true;
  } else {
    throw GraphError("unknown theorem '" + theorem + "'");
  }

  RunReport rep;
  rep.document["command"] = "verify";
  rep.document["theorem"] = theorem;
  Json params = Json::object();
  if (bounded) params["n"] = opt.n;
  if (seeded) {
    params["trials"] = opt.trials;
    params["seed"] = opt.seed;
  }
  rep.document["parameters"] = std::move(params);
  rep.document["pass"] = r.pass;
  rep.document["checked"] = r.checked;
  rep.document["counterexample"] = r.pass ? Json(nullptr) : Json(r.counterexample);
  std::ostringstream text;
  text << theorem << ": " << (r.pass ? "PASS" : "FAIL") << " (" << r.checked << " cases";
  if (bounded) text << ", n <= " << opt.n;
  if (seeded) text << ", trials " << opt.trials << ", seed " << opt.seed;
  text << ")\n";
  if (!r.pass) text << "  counterexample: " << r.counterexample << '\n';
  rep.text = text.str();
  rep.exit_code = r.pass ? kSuccess : kFailure;
  return rep;
}

// ---------------------------------------------------------------------------
// witness

inline const std::vector<std::string>& witness_kinds() {
  static const std::vector<std::string> kinds{"linkless-order", "s1-link", "minor", "outer-link",
                                              "linkless-diagram"};
  return kinds;
}

// Emits the requested certificate, or a statement of why none can exist.
inline RunReport cmd_witness(const Graph& g, const std::string& kind, const std::string& source) {
  RunReport rep;
  rep.document["command"] = "witness";
  rep.document["kind"] = kind;
  rep.document["input"] = source;
  rep.document["graph"] = graph_json(g);
  std::ostringstream text;
  Json w;
  std::optional<std::string> impossible;

  if (kind == "linkless-order") {
    auto r = is_outerplanar(g);
    if (r.outerplanar) {
      CyclicOrder o = linkless_order_from_outerplanar(g);
      w["order"] = labels_of(g, o.sequence());
      text << "linkless order " << o.to_string(g) << '\n';
    } else {
      impossible = "graph has a " + obstruction_name(*r.obstruction) +
                   " minor, so it is not outerplanar and every cyclic order of its vertices "
                   "contains a non-split link";
      w["obstruction"] = minor_json(g, *r.obstruction);
    }
  } else if (kind == "s1-link") {
    if (is_outerplanar(g).outerplanar) {
      CyclicOrder o = linkless_order_from_outerplanar(g);
      impossible = "graph is outerplanar, so it is not intrinsically S^1-linked; order " +
                   o.to_string(g) + " has no non-split link";
      w["linkless_order"] = labels_of(g, o.sequence());
    } else {
      CyclicOrder o = natural_order(g.order());
      auto l = find_nonsplit_link(o, g);
      if (!l) throw CrossValidationError("non-outerplanar graph has a linkless order");
      w["order"] = labels_of(g, o.sequence());
      w["link"] = {g.edge_label(l->first), g.edge_label(l->second)};
      text << "order " << o.to_string(g) << " links " << l->to_string(g) << '\n';
    }
  } else if (kind == "minor") {
    auto outer = is_outerplanar(g);
    auto planar = is_planar(g);
    if (outer.outerplanar) {
      impossible = "graph is outerplanar, so it has no K4 or K3,2 minor";
    } else {
      w["outerplanarity"] = minor_json(g, *outer.obstruction);
      text << obstruction_name(*outer.obstruction) << " minor "
           << minor_json(g, *outer.obstruction)["branch_sets"].dump() << '\n';
      if (planar.obstruction) {
        w["planarity"] = minor_json(g, *planar.obstruction);
        text << obstruction_name(*planar.obstruction) << " minor "
             << minor_json(g, *planar.obstruction)["branch_sets"].dump() << '\n';
      }
    }
  } else if (kind == "outer-link") {
    if (is_planar(g).planar) {
      impossible = "graph is planar, so it has an outer-embedding in which every cycle-edge link "
                   "splits";
    } else if (g.order() > kSampleDiagramMaxOrder) {
      impossible = "graph exceeds the " + std::to_string(kSampleDiagramMaxOrder) +
                   "-vertex bound for cycle enumeration";
    } else {
      OuterDiagram d = convex_diagram(g, natural_order(g.order()));
      auto l = find_nonsplit_outer_link(d);
      if (!l) throw CrossValidationError("diagram of a non-planar graph has no non-split link");
      w["diagram"] = diagram_json(d);
      w["link"] = outer_link_json(g, *l);
      text << to_diagram_text(d) << "non-split link " << l->to_string(g) << '\n';
    }
  } else if (kind == "linkless-diagram") {
    auto planar = is_planar(g);
    if (!planar.planar) {
      impossible = "graph has a " + obstruction_name(*planar.obstruction) +
                   " minor, so it is intrinsically outer-linked: every outer-embedding contains "
                   "a non-split cycle-edge link";
      if (g.order() == 5 && g.size() == 10)
        *impossible += "; for K5 the mod-2 sum over all ten links is 1 in every diagram";
      w["obstruction"] = minor_json(g, *planar.obstruction);
    } else if (auto d = two_page_linkless_diagram(g)) {
      w["diagram"] = diagram_json(*d);
      text << to_diagram_text(*d);
    } else {
      impossible = "graph is planar (hence outer-linkless) but no two-page layout was found "
                   "within the search bound; no diagram-level witness is constructed";
    }
  } else {
    throw GraphError("unknown witness kind '" + kind + "'");
  }

  rep.document["found"] = !impossible.has_value();
  rep.document["witness"] = w.is_null() ? Json::object() : w;
  rep.document["impossibility"] = impossible ? Json(*impossible) : Json(nullptr);
  if (impossible) text << "no " << kind << " witness: " << *impossible << '\n';
  rep.text = text.str();
  return rep;
}

}  // namespace outerlink::cli
