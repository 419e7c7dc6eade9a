#include "sdim/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "sdim/constructions.hpp"
#include "sdim/dimension.hpp"
#include "sdim/distances.hpp"
#include "sdim/embedding.hpp"
#include "sdim/generators.hpp"
#include "sdim/json_io.hpp"
#include "sdim/threshold.hpp"
#include "sdim/vertex_cover.hpp"

namespace sdim::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Graph load_graph(const std::string& path) {
  Graph g = parse_edge_list(read_file(path));
  if (g.order() == 0) throw InputError(path + " contains no edges");
  require_connected(g);
  return g;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

std::vector<int> parse_params(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw InputError("bad parameter '" + item + "'");
    }
  }
  return out;
}

void expect_params(const std::string& family, const std::vector<int>& p, size_t count) {
  if (p.size() != count)
    throw InputError(family + " takes " + std::to_string(count) + " parameter(s), got " +
                     std::to_string(p.size()));
}

struct Options {
  std::string input;
  std::string mode;
  bool oracle = false;
  std::string embedding;
  std::string family;
  std::string params;
  std::uint64_t seed = 0;
  bool render = false;
  std::string embedding_out;
  std::uint64_t budget = PlacementSearchConfig{}.node_budget;
  int max_k = 0;
  int jobs = 0;
  bool timing = false;
  int n = 0;
};

ThresholdOptions threshold_options(const Options& o) {
  ThresholdOptions t;
  t.search.node_budget = o.budget;
  t.search.jobs = o.jobs;
  t.max_k = o.max_k;
  return t;
}

// Some anchor set ran out of budget and the answer is not pinned down.
bool partial(const ThresholdResult& r) {
  return r.stats.anchor_sets_exhausted > 0 && r.status != ThresholdStatus::exact;
}

int cmd_dim(const Options& o, std::ostream& out) {
  Graph g = load_graph(o.input);
  const DimensionMode mode = o.mode == "metric" ? DimensionMode::metric : DimensionMode::strong;
  DimensionResult r = mode == DimensionMode::strong ? strong_dimension(g)
                                                    : brute_force_dimension(g, DimensionMode::metric);
  Json j = to_json(g, r, mode);
  if (o.oracle) {
    DimensionResult b = brute_force_dimension(g, mode);
    Json oj;
    oj["value"] = b.value;
    oj["agrees"] = b.value == r.value;
    j["oracle"] = oj;
  }
  emit(out, j);
  return ok;
}

int cmd_srgraph(const Options& o, std::ostream& out) {
  Graph g = load_graph(o.input);
  auto srg = strong_resolving_graph(g);
  auto iso = labels_of(srg.sr, isolated_vertices(srg.sr));
  std::sort(iso.begin(), iso.end());
  out << "# isolated:";
  for (const auto& l : iso) out << " " << l;
  out << "\n" << serialize_edge_list(srg.sr);
  return ok;
}

int cmd_cover(const Options& o, std::ostream& out) {
  Graph g = load_graph(o.input);
  emit(out, to_json(g, min_vertex_cover(g)));
  return ok;
}

int cmd_threshold(const Options& o, std::ostream& out) {
  Graph g = load_graph(o.input);
  const ThresholdKind kind = o.mode == "metric" ? ThresholdKind::metric : ThresholdKind::strong;
  ThresholdResult r = threshold_dimension(g, kind, threshold_options(o));
  emit(out, to_json(g, r, kind, o.timing));
  return partial(r) ? budget : ok;
}

int cmd_certify(const Options& o, std::ostream& out) {
  Graph g = load_graph(o.input);
  Json ej;
  try {
    ej = Json::parse(read_file(o.embedding));
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed embedding JSON: ") + e.what());
  }
  Embedding e = embedding_from_json(ej, g);
  Verdict v = check_shape(e);
  if (v) v = is_w_resolved(e, g);
  if (v && o.mode == "strong") v = is_isometric_in_product(e);
  Json j;
  j["mode"] = o.mode;
  const Json vj = to_json(v);
  for (const auto& [key, value] : vj.items()) j[key] = value;
  emit(out, j);
  return ok;
}

int cmd_gen(const Options& o, std::ostream& out) {
  const auto p = parse_params(o.params);
  const std::string& f = o.family;
  std::optional<Graph> g;
  std::optional<Embedding> e;
  auto take = [&](EmbeddedGraph eg) {
    g = std::move(eg.graph);
    e = std::move(eg.embedding);
  };
  if (f == "path") {
    expect_params(f, p, 1);
    g = path_graph(p[0]);
  } else if (f == "cycle") {
    expect_params(f, p, 1);
    take(cycle_embedding(p[0]));
  } else if (f == "complete") {
    expect_params(f, p, 1);
    g = complete_graph(p[0]);
  } else if (f == "star") {
    expect_params(f, p, 1);
    g = star_graph(p[0]);
  } else if (f == "multipartite") {
    if (p.empty()) throw InputError("multipartite needs at least one part size");
    g = complete_multipartite(p);
  } else if (f == "random-tree") {
    expect_params(f, p, 1);
    g = random_tree(p[0], o.seed);
  } else if (f == "type") {
    expect_params(f, p, 3);
    g = type_graph({p[0], p[1], p[2]});
  } else if (f == "tree4") {
    expect_params(f, p, 5);
    FourLeafTreeParams t{p[0], p[1], p[2], p[3], p[4]};
    if (t.normalized())
      take(tree_dim3_embedding(t));
    else
      g = four_leaf_tree(t);
  } else if (f == "tree5") {
    expect_params(f, p, 7);
    FiveLeafTreeParams t{p[0], p[1], p[2], p[3], p[4], p[5], p[6]};
    if (t.normalized())
      take(tree_dim4_embedding(t));
    else
      g = five_leaf_tree(t);
  } else if (f == "l3n") {
    expect_params(f, p, 1);
    take(l3n_family(p[0]));
  } else if (f == "gn") {
    expect_params(f, p, 1);
    g = gn_family(p[0]);
    if (p[0] == 1) e = gadget_grid_embedding();
  } else {
    throw InputError("unknown family '" + f + "'");
  }
  out << serialize_edge_list(*g);
  if (o.render) {
    if (!e) throw InputError("family " + f + " has no embedding to render");
    std::istringstream grid(render_grid(*e));
    for (std::string line; std::getline(grid, line);) out << "# " << line << "\n";
  }
  if (!o.embedding_out.empty()) {
    if (!e) throw InputError("family " + f + " has no embedding to write");
    std::ofstream file(o.embedding_out);
    if (!file) throw InputError("cannot write " + o.embedding_out);
    file << to_json(*e).dump(2) << "\n";
  }
  return ok;
}

Json bound_json(const Graph& g, const BoundSupergraph& b) {
  DimensionResult r = strong_dimension(b.h);
  Json j;
  j["bound"] = b.bound;
  j["added_edges"] = b.h.size() - g.size();
  j["strong_dimension_of_supergraph"] = r.value;
  j["verified"] = r.value == b.bound;
  j["witness"] = labels_of(b.h, r.witness);
  return j;
}

int cmd_bounds(const Options& o, std::ostream& out) {
  Graph g = load_graph(o.input);
  ProperColoring c = greedy_coloring(g);
  Json j;
  Json chrom = bound_json(g, chromatic_bound_supergraph(g, c));
  Json classes = Json::array();
  for (const auto& cls : c.classes) classes.push_back(labels_of(g, cls));
  chrom["coloring"] = classes;
  j["chromatic"] = chrom;
  j["tree"] = is_tree(g) && g.order() >= 2 ? bound_json(g, tree_bound_supergraph(g)) : Json(nullptr);
  emit(out, j);
  return ok;
}

int cmd_gap(const Options& o, std::ostream& out) {
  if (o.n < 1) throw InputError("--n must be at least 1");
  GapRow row = tau_gap_experiment(o.n, threshold_options(o));
  Graph g = gn_family(o.n);
  Json j;
  j["n"] = row.n;
  j["order"] = row.order;
  j["diameter"] = row.diameter;
  j["tau"] = to_json(g, row.tau, ThresholdKind::metric, o.timing);
  j["tau_s"] = to_json(g, row.tau_s, ThresholdKind::strong, o.timing);
  emit(out, j);
  return partial(row.tau) || partial(row.tau_s) ? budget : ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"strong metric dimension and threshold dimension toolkit", "sdim"};
  app.require_subcommand(1, 1);
  Options o;

  auto add_input = [&](CLI::App* c) {
    c->add_option("--input", o.input, "edge-list file")->required()->check(CLI::ExistingFile);
  };
  auto add_search = [&](CLI::App* c) {
    c->add_option("--budget", o.budget, "search nodes per anchor set")->check(CLI::PositiveNumber);
    c->add_option("--max-k", o.max_k, "largest anchor-set size to search")->check(CLI::NonNegativeNumber);
    c->add_option("--jobs", o.jobs, "worker threads")->check(CLI::NonNegativeNumber);
    c->add_flag("--timing", o.timing, "include wall_ms in stats");
  };

  auto* dim = app.add_subcommand("dim", "metric or strong dimension");
  add_input(dim);
  o.mode = "strong";
  dim->add_option("--mode", o.mode)->check(CLI::IsMember({"metric", "strong"}));
  dim->add_flag("--oracle", o.oracle, "cross-check with brute force");

  auto* sr = app.add_subcommand("srgraph", "strong resolving graph as an edge list");
  add_input(sr);

  auto* cover = app.add_subcommand("cover", "minimum vertex cover");
  add_input(cover);

  auto* thr = app.add_subcommand("threshold", "threshold dimension by placement search");
  add_input(thr);
  thr->add_option("--mode", o.mode)->required()->check(CLI::IsMember({"metric", "strong"}));
  add_search(thr);

  auto* cert = app.add_subcommand("certify", "check an embedding");
  add_input(cert);
  cert->add_option("--embedding", o.embedding)->required()->check(CLI::ExistingFile);
  cert->add_option("--mode", o.mode)->required()->check(CLI::IsMember({"resolved", "strong"}));

  auto* gen = app.add_subcommand("gen", "generate a family member");
  gen->add_option("--family", o.family)
      ->required()
      ->check(CLI::IsMember({"path", "cycle", "complete", "star", "multipartite", "random-tree", "type",
                             "tree4", "tree5", "l3n", "gn"}));
  gen->add_option("--params", o.params, "comma-separated integers")->required();
  gen->add_option("--seed", o.seed, "seed for random families");
  gen->add_flag("--render", o.render, "append the grid as comments (k=2 only)");
  gen->add_option("--embedding-out", o.embedding_out, "write embedding JSON here");

  auto* bounds = app.add_subcommand("bounds", "constructive upper bounds");
  add_input(bounds);

  auto* gap = app.add_subcommand("gap-experiment", "tau and tau_s of the gadget chain");
  gap->add_option("--n", o.n)->required();
  add_search(gap);

  std::vector<std::string> argv_store{"sdim"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  }

  try {
    if (dim->parsed()) return cmd_dim(o, out);
    if (sr->parsed()) return cmd_srgraph(o, out);
    if (cover->parsed()) return cmd_cover(o, out);
    if (thr->parsed()) return cmd_threshold(o, out);
    if (cert->parsed()) return cmd_certify(o, out);
    if (gen->parsed()) return cmd_gen(o, out);
    if (bounds->parsed()) return cmd_bounds(o, out);
    if (gap->parsed()) return cmd_gap(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return input;
  }
  return usage;
}

}  // namespace sdim::cli
