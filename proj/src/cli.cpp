#include "xh/cli.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "xh/error.hpp"
#include "xh/graph_io.hpp"
#include "xh/groupoid.hpp"
#include "xh/groupoid_checks.hpp"
#include "xh/hom.hpp"
#include "xh/homotopy.hpp"
#include "xh/walk.hpp"

namespace xh {

namespace {

using nlohmann::json;

struct Globals {
  bool json = false;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> cap;
};

std::vector<VertexIndex> parse_vertex_list(const Graph& g, const std::string& text) {
  std::vector<VertexIndex> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw ParseError(0, "empty token in vertex list '" + text + "'");
    auto v = g.find(tok);
    if (!v) throw ParseError(0, "unknown vertex '" + tok + "'");
    out.push_back(*v);
  }
  if (out.empty()) throw ParseError(0, "empty vertex list");
  return out;
}

VertexIndex parse_vertex(const Graph& g, const std::string& tok) {
  auto v = g.find(tok);
  if (!v) throw ParseError(0, "unknown vertex '" + tok + "'");
  return *v;
}

json torsion_json(const AbelianInvariants& inv) {
  json t = json::array();
  for (const auto& x : inv.torsion) {
    if (x <= std::numeric_limits<long long>::max()) {
      t.push_back(x.convert_to<long long>());
    } else {
      t.push_back(x.str());
    }
  }
  return t;
}

json presentation_json(const Graph& g, const Presentation& p) {
  json gens = json::array();
  for (const auto& gen : p.generators) {
    gens.push_back({{"label", gen.label},
                    {"edge", {g.token(gen.edge.first), g.token(gen.edge.second)}},
                    {"involution", gen.involution}});
  }
  json rels = json::array();
  for (const auto& r : p.relators) {
    json word = json::array();
    for (const auto& l : r)
      word.push_back(static_cast<long long>(l.generator + 1) * l.exponent);
    rels.push_back(word);
  }
  const auto inv = abelian_invariants(p);
  return {{"basepoint", p.basepoint},
          {"generators", gens},
          {"relators", rels},
          {"rank", inv.rank},
          {"torsion", torsion_json(inv)}};
}

void print_presentation(std::ostream& out, const Graph& g, const Presentation& p) {
  out << "basepoint: " << p.basepoint << "\n";
  out << "generators: " << p.generators.size() << "\n";
  for (const auto& gen : p.generators) {
    out << "  " << gen.label << " = " << g.token(gen.edge.first) << " "
        << g.token(gen.edge.second);
    if (gen.involution) out << " (loop, order 2)";
    out << "\n";
  }
  out << "relators: " << p.relators.size() << "\n";
  const auto labels = p.labels();
  for (const auto& r : p.relators) out << "  " << format_word(r, labels) << "\n";
  out << "abelian invariants: " << abelian_invariants(p).to_string() << "\n";
}

json string_list(const std::vector<std::string>& v) { return json(v); }

struct Context {
  std::ostream& out;
  std::ostream& err;
  Globals globals;
};

// --- graph validate -------------------------------------------------------

int cmd_graph_validate(Context& c, const std::string& file) {
  const auto text = read_text_file(file);
  Graph g;
  try {
    g = parse_graph(text);
  } catch (const ParseError& e) {
    if (c.globals.json) {
      c.out << json{{"valid", false}, {"error", e.what()}}.dump(2) << "\n";
    }
    c.err << "invalid: " << e.what() << "\n";
    return 1;
  }
  std::size_t loops = 0;
  for (const auto& e : g.edges()) loops += e.is_loop();
  if (c.globals.json) {
    c.out << json{{"valid", true},
                  {"vertices", g.vertex_count()},
                  {"edges", g.edge_count()},
                  {"loops", loops}}
                 .dump(2)
          << "\n";
  } else {
    c.out << "valid: " << g.vertex_count() << " vertices, " << g.edge_count()
          << " edges (" << loops << " loops)\n";
  }
  return 0;
}

// --- walk normalize -------------------------------------------------------

int cmd_walk_normalize(Context& c, const std::string& file, const std::string& walk,
                       bool looped) {
  const auto g = read_graph_file(file);
  const auto w = Walk::parse(g, walk);
  const auto nf = prune_normalize(w, looped);
  const char* parity = nf.parity() == Parity::Even ? "even" : "odd";
  if (c.globals.json) {
    c.out << json{{"input", w.to_string()},
                  {"normal_form", nf.to_string()},
                  {"length", nf.length()},
                  {"parity", parity}}
                 .dump(2)
          << "\n";
  } else {
    c.out << nf.to_string() << "\n";
    c.out << "length " << nf.length() << ", " << parity << "\n";
  }
  return 0;
}

// --- homotopy -------------------------------------------------------------

int verdict_code(Verdict v) {
  switch (v) {
    case Verdict::Equal: return 0;
    case Verdict::Distinct: return 1;
    case Verdict::Unknown: return 2;
  }
  return 2;
}

json vector_json(const std::vector<long long>& v) { return json(v); }

std::string vector_text(const std::vector<long long>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

void print_non_equal(Context& c, const Decision& d, json& j) {
  if (d.verdict == Verdict::Distinct) {
    const auto& cert = d.distinct();
    j["reason"] = to_string(cert.reason);
    j["detail"] = cert.detail;
    if (cert.reason == DistinctReason::AbelianImage) {
      j["image_a"] = vector_json(cert.image_a);
      j["image_b"] = vector_json(cert.image_b);
    }
    if (cert.reason == DistinctReason::ClosureDisjoint) j["closure_size"] = cert.closure_size;
    if (!c.globals.json) {
      c.out << "reason: " << to_string(cert.reason) << "\n";
      if (!cert.detail.empty()) c.out << "detail: " << cert.detail << "\n";
      if (cert.reason == DistinctReason::AbelianImage)
        c.out << "images: " << vector_text(cert.image_a) << " vs "
              << vector_text(cert.image_b) << "\n";
      if (cert.reason == DistinctReason::ClosureDisjoint)
        c.out << "closure size: " << cert.closure_size << "\n";
    }
  } else if (d.verdict == Verdict::Unknown) {
    const auto& u = d.unknown();
    j["max_len"] = u.max_len;
    j["max_states"] = u.max_states;
    j["states_explored"] = u.states_explored;
    j["exhausted"] = u.exhausted;
    if (!c.globals.json) {
      c.out << "bounds: max_len " << u.max_len << ", max_states " << u.max_states
            << ", explored " << u.states_explored
            << (u.exhausted ? " (bounded space exhausted)" : " (state cap reached)") << "\n";
    }
  }
}

int cmd_homotopy_walks(Context& c, const std::string& file, const std::string& w1,
                       const std::string& w2, bool looped, std::size_t max_len,
                       std::size_t max_states) {
  const auto g = read_graph_file(file);
  const auto a = Walk::parse(g, w1);
  const auto b = Walk::parse(g, w2);
  HomotopyOptions opts;
  opts.looped_mode = looped;
  opts.max_len = max_len;
  opts.max_states = max_states;
  const auto d = walks_homotopic(a, b, opts);
  json j{{"verdict", to_string(d.verdict)}};
  if (!c.globals.json) c.out << to_string(d.verdict) << "\n";
  if (d.verdict == Verdict::Equal) {
    json steps = json::array();
    std::vector<VertexIndex> seq(a.vertices().begin(), a.vertices().end());
    if (!c.globals.json) c.out << "certificate: " << d.equal().moves.size() << " moves\n";
    std::size_t i = 0;
    for (const auto& m : d.equal().moves) {
      seq = apply_move(g, seq, m, looped);
      const auto state = format_walk(g, seq);
      steps.push_back({{"move", format_move(g, m)}, {"walk", state}});
      if (!c.globals.json) c.out << "  " << ++i << ". " << format_move(g, m) << "  => " << state << "\n";
    }
    j["certificate"] = steps;
  } else {
    print_non_equal(c, d, j);
  }
  if (c.globals.json) c.out << j.dump(2) << "\n";
  return verdict_code(d.verdict);
}

int cmd_homotopy_morphisms(Context& c, const std::string& gfile, const std::string& hfile,
                           const std::string& m1, const std::string& m2,
                           std::size_t max_steps) {
  const auto g = read_graph_file(gfile);
  const auto h = read_graph_file(hfile);
  const auto f = parse_morphism(read_text_file(m1), g, h);
  const auto k = parse_morphism(read_text_file(m2), g, h);
  const auto d = morphisms_homotopic(f, k, max_steps);
  json j{{"verdict", to_string(d.verdict)}};
  if (!c.globals.json) c.out << to_string(d.verdict) << "\n";
  if (d.verdict == Verdict::Equal) {
    json steps = json::array();
    if (!c.globals.json) c.out << "certificate: " << d.equal().moves.size() << " spider moves\n";
    std::size_t i = 0;
    for (const auto& m : d.equal().moves) {
      const auto& s = std::get<SpiderStep>(m);
      const auto& x = g.token(static_cast<VertexIndex>(s.position));
      steps.push_back({{"vertex", x},
                       {"old", h.token(s.old_image)},
                       {"new", h.token(s.new_image)}});
      if (!c.globals.json)
        c.out << "  " << ++i << ". " << x << ": " << h.token(s.old_image) << " -> "
              << h.token(s.new_image) << "\n";
    }
    j["certificate"] = steps;
  } else {
    print_non_equal(c, d, j);
  }
  if (c.globals.json) c.out << j.dump(2) << "\n";
  return verdict_code(d.verdict);
}

// --- reduce stiff ---------------------------------------------------------

int cmd_reduce_stiff(Context& c, const std::string& file) {
  const auto g = read_graph_file(file);
  const auto r = c.globals.seed ? stiff_reduce_random(g, *c.globals.seed) : stiff_reduce(g);
  if (c.globals.json) {
    json folds = json::array();
    for (const auto& f : r.folds)
      folds.push_back({{"vertex", f.map.source().token(f.vertex)},
                       {"onto", f.map.source().token(f.onto)}});
    c.out << json{{"folds", folds},
                  {"stiff", serialize_graph(r.stiff)},
                  {"vertices", r.stiff.tokens()}}
                 .dump(2)
          << "\n";
    return 0;
  }
  c.out << "folds: " << r.folds.size() << "\n";
  for (const auto& f : r.folds)
    c.out << "  " << f.map.source().token(f.vertex) << " -> " << f.map.source().token(f.onto) << "\n";
  c.out << "stiff graph:\n" << serialize_graph(r.stiff);
  return 0;
}

// --- pi1 ------------------------------------------------------------------

int cmd_pi1_present(Context& c, const std::string& file, const std::string& base,
                    bool walkgroup, bool looped) {
  const auto g = read_graph_file(file);
  if (g.vertex_count() == 0) throw PreconditionError("graph has no vertices");
  const VertexIndex v = base.empty() ? 0 : parse_vertex(g, base);
  Presentation p;
  Graph shown = g;
  if (looped) {
    p = looped_presentation(g, v);
    shown = looped_subgraph(g);
  } else if (walkgroup) {
    p = walk_group_presentation(g, v);
  } else {
    p = fundamental_group_presentation(g, v);
  }
  if (c.globals.json) {
    c.out << presentation_json(shown, p).dump(2) << "\n";
  } else {
    print_presentation(c.out, shown, p);
  }
  return 0;
}

int cmd_pi1_vankampen(Context& c, const std::string& file, const std::string& part1,
                      const std::string& part2, const std::string& base) {
  const auto g = read_graph_file(file);
  const auto v1 = parse_vertex_list(g, part1);
  const auto v2 = parse_vertex_list(g, part2);
  VertexIndex v;
  if (!base.empty()) {
    v = parse_vertex(g, base);
  } else {
    auto it = std::find_if(v1.begin(), v1.end(), [&](VertexIndex x) {
      return std::find(v2.begin(), v2.end(), x) != v2.end();
    });
    if (it == v1.end()) throw PreconditionError("parts do not intersect");
    v = *it;
  }
  const auto p = van_kampen_presentation(g, v1, v2, v);
  const auto direct = abelian_invariants(fundamental_group_presentation(g, v));
  const auto amalgam = abelian_invariants(p);
  if (c.globals.json) {
    auto j = presentation_json(g, p);
    j["direct_rank"] = direct.rank;
    j["direct_torsion"] = torsion_json(direct);
    j["agree"] = direct == amalgam;
    c.out << j.dump(2) << "\n";
  } else {
    print_presentation(c.out, g, p);
    c.out << "direct computation: " << direct.to_string() << "\n";
    c.out << "agree: " << (direct == amalgam ? "yes" : "no") << "\n";
  }
  return direct == amalgam ? 0 : 1;
}

void print_list(std::ostream& out, const char* title, const std::vector<std::string>& v,
                std::size_t limit = 20) {
  out << title << ": " << v.size() << "\n";
  for (std::size_t i = 0; i < v.size() && i < limit; ++i) out << "  " << v[i] << "\n";
  if (v.size() > limit) out << "  ...\n";
}

int cmd_pi1_product_check(Context& c, const std::string& f1, const std::string& f2,
                          std::size_t max_len) {
  const auto g = read_graph_file(f1);
  const auto h = read_graph_file(f2);
  const auto r = verify_product_pullback(g, h, max_len, c.globals.cap.value_or(1000000));
  if (c.globals.json) {
    c.out << json{{"passed", r.passed()},
                  {"max_len", r.max_len},
                  {"classes_g", r.classes_g},
                  {"classes_h", r.classes_h},
                  {"classes_product", r.classes_product},
                  {"pairs_lifted", r.pairs_lifted},
                  {"odd_pairs", r.odd_pairs},
                  {"even_pairs", r.even_pairs},
                  {"groups_resolved", r.groups_resolved},
                  {"product_components", r.product_components},
                  {"no_arrow", string_list(r.no_arrow)},
                  {"counterexamples", string_list(r.counterexamples)},
                  {"blocked", string_list(r.blocked)}}
                 .dump(2)
          << "\n";
  } else {
    c.out << "product check up to length " << r.max_len << ": "
          << (r.passed() ? "pass" : "FAIL") << "\n";
    c.out << "bounded classes: G " << r.classes_g << ", H " << r.classes_h << ", product "
          << r.classes_product << "\n";
    c.out << "lifted pairs: " << r.pairs_lifted << " (odd " << r.odd_pairs << ", even "
          << r.even_pairs << ")\n";
    c.out << "injectivity splits resolved: " << r.groups_resolved << "\n";
    c.out << "product components: " << r.product_components << "\n";
    print_list(c.out, "no arrow", r.no_arrow);
    print_list(c.out, "counterexamples", r.counterexamples);
    print_list(c.out, "blocked", r.blocked);
  }
  return r.passed() ? 0 : 1;
}

int cmd_pi1_reflexive_check(Context& c, const std::string& file, std::size_t max_len) {
  const auto g = read_graph_file(file);
  const auto r = verify_reflexive_split(g, max_len, c.globals.seed.value_or(1), 40,
                                        c.globals.cap.value_or(1000000));
  if (c.globals.json) {
    c.out << json{{"passed", r.passed()},
                  {"max_len", r.max_len},
                  {"even_classes", r.even_classes},
                  {"odd_classes", r.odd_classes},
                  {"sampled_pairs", r.sampled_pairs},
                  {"counterexamples", string_list(r.counterexamples)},
                  {"blocked", string_list(r.blocked)}}
                 .dump(2)
          << "\n";
  } else {
    c.out << "reflexive split up to length " << r.max_len << ": "
          << (r.passed() ? "pass" : "FAIL") << "\n";
    c.out << "classes: " << r.even_classes << " even, " << r.odd_classes << " odd\n";
    c.out << "sampled concatenations: " << r.sampled_pairs << "\n";
    print_list(c.out, "counterexamples", r.counterexamples);
    print_list(c.out, "blocked", r.blocked);
  }
  return r.passed() ? 0 : 1;
}

// --- hom ------------------------------------------------------------------

int cmd_hom_complex(Context& c, const std::string& f1, const std::string& f2) {
  const auto g = read_graph_file(f1);
  const auto h = read_graph_file(f2);
  const auto cx = hom_complex_2skeleton(g, h, c.globals.cap.value_or(100000));
  if (c.globals.json) {
    auto cells = [&](const std::vector<Multihom>& v) {
      json a = json::array();
      for (const auto& m : v) a.push_back(format_multihom(g, h, m));
      return a;
    };
    json e1 = json::array();
    for (const auto& e : cx.ends1) e1.push_back({e[0], e[1]});
    json f2j = json::array();
    for (std::size_t i = 0; i < cx.cells2.size(); ++i)
      f2j.push_back({{"corners", cx.corners2[i]}, {"faces", cx.faces2[i]}});
    c.out << json{{"counts", {cx.cells0.size(), cx.cells1.size(), cx.cells2.size()}},
                  {"cells0", cells(cx.cells0)},
                  {"cells1", cells(cx.cells1)},
                  {"cells2", cells(cx.cells2)},
                  {"boundary1", e1},
                  {"boundary2", f2j}}
                 .dump(2)
          << "\n";
    return 0;
  }
  c.out << "0-cells: " << cx.cells0.size() << "\n";
  c.out << "1-cells: " << cx.cells1.size() << "\n";
  c.out << "2-cells: " << cx.cells2.size() << "\n";
  for (std::size_t i = 0; i < cx.cells0.size(); ++i)
    c.out << "c" << i << " = " << format_multihom(g, h, cx.cells0[i]) << "\n";
  for (std::size_t i = 0; i < cx.cells1.size(); ++i)
    c.out << "e" << i << " = " << format_multihom(g, h, cx.cells1[i]) << "  boundary c"
          << cx.ends1[i][0] << " c" << cx.ends1[i][1] << "\n";
  for (std::size_t i = 0; i < cx.cells2.size(); ++i) {
    c.out << "f" << i << " = " << format_multihom(g, h, cx.cells2[i]) << "  boundary";
    for (auto e : cx.faces2[i]) c.out << " e" << e;
    c.out << "\n";
  }
  return 0;
}

int cmd_hom_exp(Context& c, const std::string& f1, const std::string& f2) {
  const auto g = read_graph_file(f1);
  const auto h = read_graph_file(f2);
  const auto k = exponential_graph(g, h, c.globals.cap.value_or(100000));
  if (c.globals.json) {
    c.out << json{{"vertices", k.vertex_count()},
                  {"edges", k.edge_count()},
                  {"graph", serialize_graph(k)}}
                 .dump(2)
          << "\n";
  } else {
    c.out << serialize_graph(k);
  }
  return 0;
}

int cmd_hom_compare(Context& c, const std::string& f1, const std::string& f2,
                    std::size_t max_len) {
  const auto g = read_graph_file(f1);
  const auto h = read_graph_file(f2);
  const auto r = compare_hom_complex(g, h, max_len, c.globals.cap.value_or(100000));
  if (c.globals.json) {
    json comps = json::array();
    for (const auto& cc : r.components)
      comps.push_back({{"members", cc.members},
                       {"same_members", cc.same_members},
                       {"looped", cc.looped_side.to_string()},
                       {"complex", cc.complex_side.to_string()},
                       {"match", cc.invariants_match}});
    c.out << json{{"ok", r.ok()},
                  {"exponential_vertices", r.exponential_vertices},
                  {"looped_vertices", r.looped_vertices},
                  {"cells", {r.cells0, r.cells1, r.cells2}},
                  {"looped_components", r.looped_components},
                  {"complex_components", r.complex_components},
                  {"zero_cells_match", r.zero_cells_match},
                  {"component_bijection", r.component_bijection},
                  {"components", comps},
                  {"relators_checked", r.relators_checked},
                  {"relators_certified", r.relators_certified},
                  {"uncertified", r.uncertified_relators}}
                 .dump(2)
          << "\n";
  } else {
    c.out << "exponential graph: " << r.exponential_vertices << " maps, "
          << r.looped_vertices << " looped\n";
    c.out << "Hom complex: " << r.cells0 << " 0-cells, " << r.cells1 << " 1-cells, "
          << r.cells2 << " 2-cells\n";
    c.out << "0-cells are the looped maps: " << (r.zero_cells_match ? "yes" : "no") << "\n";
    c.out << "components: " << r.looped_components << " looped, " << r.complex_components
          << " complex, bijection " << (r.component_bijection ? "yes" : "no") << "\n";
    for (std::size_t i = 0; i < r.components.size(); ++i) {
      const auto& cc = r.components[i];
      c.out << "  component " << i + 1 << " (" << cc.members.size() << " maps, from "
            << cc.members.front() << "): looped " << cc.looped_side.to_string()
            << " | complex " << cc.complex_side.to_string() << " | "
            << (cc.invariants_match && cc.same_members ? "match" : "MISMATCH") << "\n";
    }
    c.out << "looped relators certified: " << r.relators_certified << "/" << r.relators_checked
          << "\n";
    for (const auto& u : r.uncertified_relators) c.out << "  uncertified " << u << "\n";
    c.out << (r.ok() ? "agree" : "DISAGREE") << "\n";
  }
  return r.ok() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"xh: homotopy computations on finite graphs"};
  app.name("xh");
  app.require_subcommand(1);
  Context ctx{out, err, {}};
  std::uint64_t seed = 0;
  std::size_t cap = 0;
  app.add_flag("--json", ctx.globals.json, "Machine-readable output");
  auto* seed_opt = app.add_option("--seed", seed, "Seed for randomized commands");
  auto* cap_opt = app.add_option("--cap", cap, "Size guard for enumerations")
                      ->check(CLI::PositiveNumber);

  std::function<int()> action;
  auto group = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->require_subcommand(1);
    s->fallthrough();
    return s;
  };
  auto leaf = [&](CLI::App* parent, const char* name, const char* help) {
    auto* s = parent->add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  std::string file1, file2, file3, file4, walk1, walk2, base, part1, part2;
  bool looped = false, walkgroup = false;
  std::size_t max_len = 0, max_states = 200000, max_steps = 200000;

  auto* graph = group("graph", "Graph files");
  auto* validate = leaf(graph, "validate", "Check a graph file (exit 0 valid, 1 invalid)");
  validate->add_option("file", file1, "Graph file")->required();
  validate->callback([&] { action = [&] { return cmd_graph_validate(ctx, file1); }; });

  auto* walk = group("walk", "Walks");
  auto* normalize = leaf(walk, "normalize", "Prune normal form of a walk");
  normalize->add_option("graph", file1, "Graph file")->required();
  normalize->add_option("walk", walk1, "Comma-separated vertices")->required();
  normalize->add_flag("--looped", looped, "Also collapse repeated vertices");
  normalize->callback([&] { action = [&] { return cmd_walk_normalize(ctx, file1, walk1, looped); }; });

  auto* homotopy = group("homotopy", "Homotopy decisions (exit 0 Equal, 1 Distinct, 2 Unknown)");
  auto* hw = leaf(homotopy, "walks", "Are two walks homotopic rel endpoints?");
  hw->add_option("graph", file1, "Graph file")->required();
  hw->add_option("walk1", walk1, "First walk")->required();
  hw->add_option("walk2", walk2, "Second walk")->required();
  hw->add_flag("--looped", looped, "Looped groupoid");
  hw->add_option("--max-len", max_len, "Longest intermediate walk (default: input + 6)");
  hw->add_option("--max-states", max_states, "State budget")->check(CLI::PositiveNumber);
  hw->callback([&] {
    action = [&] {
      return cmd_homotopy_walks(ctx, file1, walk1, walk2, looped, max_len, max_states);
    };
  });
  auto* hm = leaf(homotopy, "morphisms", "Are two morphisms homotopic?");
  hm->add_option("source", file1, "Source graph")->required();
  hm->add_option("target", file2, "Target graph")->required();
  hm->add_option("map1", file3, "First map file")->required();
  hm->add_option("map2", file4, "Second map file")->required();
  hm->add_option("--max-steps", max_steps, "Budget of morphisms visited")
      ->check(CLI::PositiveNumber);
  hm->callback([&] {
    action = [&] { return cmd_homotopy_morphisms(ctx, file1, file2, file3, file4, max_steps); };
  });

  auto* reduce = group("reduce", "Reductions");
  auto* stiff = leaf(reduce, "stiff", "Fold down to a stiff graph (--seed picks random folds)");
  stiff->add_option("graph", file1, "Graph file")->required();
  stiff->callback([&] { action = [&] { return cmd_reduce_stiff(ctx, file1); }; });

  auto* pi1 = group("pi1", "Fundamental groups");
  auto* present = leaf(pi1, "present", "Presentation of the vertex group");
  present->add_option("graph", file1, "Graph file")->required();
  present->add_option("--base", base, "Basepoint (default: first vertex)");
  present->add_flag("--walkgroup", walkgroup, "Walk group only, no diamond relators");
  present->add_flag("--looped", looped, "Looped group on the looped subgraph");
  present->callback([&] {
    action = [&] { return cmd_pi1_present(ctx, file1, base, walkgroup, looped); };
  });
  auto* vk = leaf(pi1, "vankampen", "Amalgamated presentation from two parts");
  vk->add_option("graph", file1, "Graph file")->required();
  vk->add_option("--part1", part1, "Comma-separated vertices")->required();
  vk->add_option("--part2", part2, "Comma-separated vertices")->required();
  vk->add_option("--base", base, "Basepoint in both parts");
  vk->callback([&] { action = [&] { return cmd_pi1_vankampen(ctx, file1, part1, part2, base); }; });
  auto* pc = leaf(pi1, "product-check", "Product pullback check");
  pc->add_option("graph1", file1, "First factor")->required();
  pc->add_option("graph2", file2, "Second factor")->required();
  pc->add_option("--max-len", max_len, "Walk length bound")->required();
  pc->callback([&] { action = [&] { return cmd_pi1_product_check(ctx, file1, file2, max_len); }; });
  auto* rc = leaf(pi1, "reflexive-check", "Reflexive splitting check");
  rc->add_option("graph", file1, "Reflexive graph")->required();
  rc->add_option("--max-len", max_len, "Walk length bound")->required();
  rc->callback([&] { action = [&] { return cmd_pi1_reflexive_check(ctx, file1, max_len); }; });

  auto* hom = group("hom", "Hom complexes and exponential graphs");
  auto* hc = leaf(hom, "complex", "Cells of Hom(G,H) up to dimension 2");
  hc->add_option("source", file1, "G")->required();
  hc->add_option("target", file2, "H")->required();
  hc->callback([&] { action = [&] { return cmd_hom_complex(ctx, file1, file2); }; });
  auto* he = leaf(hom, "exp", "Exponential graph H^G in the graph file format");
  he->add_option("source", file1, "G")->required();
  he->add_option("target", file2, "H")->required();
  he->callback([&] { action = [&] { return cmd_hom_exp(ctx, file1, file2); }; });
  auto* hcmp = leaf(hom, "compare", "Compare the looped groupoid of H^G with Hom(G,H)");
  hcmp->add_option("source", file1, "G")->required();
  hcmp->add_option("target", file2, "H")->required();
  hcmp->add_option("--max-len", max_len, "Bound for certifying looped relators")->required();
  hcmp->callback([&] { action = [&] { return cmd_hom_compare(ctx, file1, file2, max_len); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (seed_opt->count()) ctx.globals.seed = seed;
  if (cap_opt->count()) ctx.globals.cap = cap;
  if (!action) {
    err << "error: no command\n";
    return kExitUsage;
  }
  try {
    return action();
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace xh
