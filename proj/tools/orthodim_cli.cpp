#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "orthodim/orthodim.hpp"

using namespace orthodim;
using nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kInvalid = 1, kBadArgs = 2, kParse = 3, kCapacity = 4 };

struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Context {
  Context(std::ostream& o, std::ostream& e) : out(o), err(e) {}

  std::ostream& out;
  std::ostream& err;
  bool json = false;
  std::uint64_t seed = 0;
  bool has_seed = false;
  unsigned workers = 1;
  ordered_json inputs = ordered_json::object();
  ordered_json outputs = ordered_json::object();
  ordered_json results = ordered_json::object();
  std::vector<std::string> lines;
  bool stdout_payload = false;  // an instance went to stdout; text summary moves to stderr

  template <class T>
  void emit(const std::string& key, const T& value) {
    results[key] = value;
    std::ostringstream s;
    s << key << ' ' << value;
    lines.push_back(s.str());
  }
  void note(const std::string& text) {
    results["notes"].push_back(text);
    lines.push_back("note " + text);
  }
  void need_seed(const std::string& what) {
    if (!has_seed) throw InvalidArgument(what + " is randomized: pass --seed");
  }
};

std::string slurp(Context& ctx, const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  ctx.inputs[path] = digest_hex(buf.str());
  return buf.str();
}

template <class F>
auto parse_file(Context& ctx, const std::string& path, F&& reader) {
  const std::string text = slurp(ctx, path);
  std::istringstream in(text);
  try {
    return reader(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

// Writes to `path`, or to stdout when it is empty or "-".
void deliver(Context& ctx, const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    ctx.out << text;
    ctx.stdout_payload = true;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw IoFailure("cannot write '" + path + "'");
  ctx.outputs[path] = digest_hex(text);
}

template <class W, class T>
std::string render(W&& writer, const T& value) {
  std::ostringstream s;
  writer(s, value);
  return s.str();
}

std::string edge_text(std::span<const Vertex> e) {
  std::string s = "{";
  for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i] + 1);
  return s + "}";
}

// ---- generate --------------------------------------------------------------

struct GenerateArgs {
  std::string family, out, coloring_out, assignment_out;
  std::vector<std::string> params;
  std::string kind;
  double p = 0.5;
  std::size_t left = 4, right = 2, degree = 1;
  std::uint32_t R = 6, L = 3;
  bool biregular = false;
};

std::uint32_t int_param(const GenerateArgs& a, std::size_t i, const char* name) {
  if (a.params.size() <= i) throw InvalidArgument(a.family + ": missing parameter " + name);
  try {
    std::size_t pos = 0;
    const long v = std::stol(a.params[i], &pos);
    if (pos != a.params[i].size() || v < 0) throw std::invalid_argument("");
    return static_cast<std::uint32_t>(v);
  } catch (const std::logic_error&) {
    throw InvalidArgument(a.family + ": parameter " + name + " must be a nonnegative integer");
  }
}

void expect_params(const GenerateArgs& a, std::size_t n) {
  if (a.params.size() != n)
    throw InvalidArgument(a.family + ": expected " + std::to_string(n) + " parameters, got " + std::to_string(a.params.size()));
}

void cmd_generate(Context& ctx, const GenerateArgs& a) {
  auto graph_out = [&](const Graph& g) {
    deliver(ctx, a.out, render(write_graph, g));
    ctx.emit("vertices", g.num_vertices());
    ctx.emit("edges", g.num_edges());
  };
  if (a.family == "kneser" || a.family == "schrijver") {
    expect_params(a, 2);
    const auto d = int_param(a, 0, "d"), s = int_param(a, 1, "s");
    graph_out(a.family == "kneser" ? kneser_graph(d, s).graph : schrijver_graph(d, s).graph);
  } else if (a.family == "frankl-rodl") {
    expect_params(a, 1);
    graph_out(frankl_rodl_graph(int_param(a, 0, "t")).graph);
  } else if (a.family == "lexi") {
    expect_params(a, 2);
    const auto f = parse_file(ctx, a.params[0], read_graph);
    const auto g = parse_file(ctx, a.params[1], read_graph);
    graph_out(lexicographic_product(f, g));
  } else if (a.family == "planted") {
    expect_params(a, 1);
    ctx.need_seed("generate planted");
    const auto inst = planted_od3_instance(int_param(a, 0, "n"), parse_planted_kind(a.kind.empty() ? "tripartite" : a.kind),
                                           ctx.seed, a.p);
    graph_out(inst.graph);
    if (!a.coloring_out.empty()) deliver(ctx, a.coloring_out, render(write_coloring, inst.coloring));
  } else if (a.family == "labelcover") {
    expect_params(a, 0);
    ctx.need_seed("generate labelcover");
    ToyLabelCoverKind kind;
    if (a.kind.empty() || a.kind == "satisfiable") kind = ToyLabelCoverKind::satisfiable;
    else if (a.kind == "random") kind = ToyLabelCoverKind::random;
    else throw InvalidArgument("labelcover: kind must be satisfiable or random");
    Assignment rho;
    const auto lc = toy_label_cover(kind, {a.left, a.right, a.R, a.L, a.degree, a.biregular}, ctx.seed, &rho);
    deliver(ctx, a.out, render(write_label_cover, lc));
    if (!a.assignment_out.empty()) {
      if (kind != ToyLabelCoverKind::satisfiable) throw InvalidArgument("labelcover: only satisfiable instances have a planted assignment");
      deliver(ctx, a.assignment_out, render(write_assignment, rho));
    }
    ctx.emit("left", lc.left);
    ctx.emit("right", lc.right);
    ctx.emit("edges", lc.edges.size());
  } else {
    throw InvalidArgument("unknown family '" + a.family + "' (kneser, schrijver, frankl-rodl, lexi, planted, labelcover)");
  }
}

// ---- bounds ----------------------------------------------------------------

struct BoundsArgs {
  std::string in, gram_out;
  bool no_sdp = false, no_refuter = false;
  double eps_sdp = 1e-3;
};

void cmd_bounds(Context& ctx, const BoundsArgs& a) {
  const auto h = parse_file(ctx, a.in, read_any_hypergraph);
  SandwichOptions opt;
  opt.use_sdp = !a.no_sdp;
  opt.use_refuter = !a.no_refuter;
  opt.eps_sdp = a.eps_sdp;
  if (ctx.has_seed) opt.sdp.seed = ctx.seed;
  const auto b = od_sandwich(h, opt);
  ctx.emit("lower", b.lower);
  ctx.emit("upper", b.upper);
  ctx.emit("closed", b.closed() ? "yes" : "no");
  for (const auto& r : b.lower_reasons) {
    ctx.results["lower_reasons"].push_back(r);
    ctx.lines.push_back("reason " + r);
  }
  if (b.chromatic) ctx.emit("chromatic", *b.chromatic);
  else ctx.emit("coloring_colors", b.coloring.palette);
  if (b.clique) ctx.emit("clique", *b.clique);
  if (b.strict_sdp) {
    std::ostringstream k;
    k.precision(6);
    k << std::fixed << b.strict_sdp->kappa;
    ctx.emit("svchrom", k.str());
    ctx.emit("svchrom_converged", b.strict_sdp->converged ? "yes" : "no");
    if (!a.gram_out.empty())
      deliver(ctx, a.gram_out, render(write_gram, GramMatrix::from_vectors(b.strict_sdp->coloring.vectors)));
  } else if (!a.gram_out.empty()) {
    throw InvalidArgument("bounds: no SDP solution to write (graph input and SDP enabled required)");
  }
  if (b.refuter)
    ctx.emit("refuter", *b.refuter == RefutationOutcome::refuted   ? "refuted"
                        : *b.refuter == RefutationOutcome::budget ? "budget"
                                                                  : "inconclusive");
  for (const auto& n : b.notes) ctx.note(n);
}

// ---- reduce ----------------------------------------------------------------

struct ReduceArgs {
  std::string kind, out, directory_out;
  std::vector<std::string> inputs;
  std::size_t k2 = 0, m = 0;
  std::uint32_t t = 0;
};

void cmd_reduce(Context& ctx, const ReduceArgs& a) {
  auto need_inputs = [&](std::size_t n) {
    if (a.inputs.size() != n)
      throw InvalidArgument("reduce " + a.kind + ": expected " + std::to_string(n) + " input files");
  };
  if (a.kind == "uniformity") {
    need_inputs(1);
    if (!a.k2 || !a.m) throw InvalidArgument("reduce uniformity: --k2 and --m are required");
    const auto h1 = parse_file(ctx, a.inputs[0], read_any_hypergraph);
    const auto r = uniformity_reduce(h1, a.k2, a.m);
    std::ostringstream s;
    r.provenance.write(s);
    write_hypergraph(s, r.hypergraph);
    deliver(ctx, a.out, s.str());
    ctx.emit("s", r.s);
    ctx.emit("ell", r.copies);
    ctx.emit("vertices", r.hypergraph.num_vertices());
    ctx.emit("hyperedges", r.hypergraph.num_hyperedges());
  } else if (a.kind == "lexi") {
    need_inputs(2);
    const auto f = parse_file(ctx, a.inputs[0], read_graph);
    const auto g = parse_file(ctx, a.inputs[1], read_graph);
    const auto r = lexicographic_reduce(f, g);
    std::ostringstream s;
    r.provenance.write(s);
    write_graph(s, r.graph);
    deliver(ctx, a.out, s.str());
    ctx.emit("vertices", r.graph.num_vertices());
    ctx.emit("edges", r.graph.num_edges());
  } else if (a.kind == "labelcover") {
    need_inputs(1);
    if (!a.t) throw InvalidArgument("reduce labelcover: --t is required");
    const auto lc = parse_file(ctx, a.inputs[0], read_label_cover);
    const auto r = label_cover_to_hypergraph(lc, a.t);
    std::ostringstream s;
    r.provenance.write(s);
    write_hypergraph(s, r.hypergraph);
    deliver(ctx, a.out, s.str());
    if (!a.directory_out.empty()) deliver(ctx, a.directory_out, render(write_directory, r));
    ctx.emit("s", r.s);
    ctx.emit("block", r.block_size());
    ctx.emit("vertices", r.hypergraph.num_vertices());
    ctx.emit("hyperedges", r.hypergraph.num_hyperedges());
  } else {
    throw InvalidArgument("unknown reduction '" + a.kind + "' (uniformity, lexi, labelcover)");
  }
}

// ---- color -----------------------------------------------------------------

struct ColorArgs {
  std::string in, report_out, coloring_out, policy = "best-effort";
  double exponent = 0.75;
};

void cmd_color(Context& ctx, const ColorArgs& a) {
  ctx.need_seed("color");
  const auto g = parse_file(ctx, a.in, read_graph);
  ColoringRunConfig cfg;
  cfg.seed = ctx.seed;
  cfg.sdp.seed = ctx.seed;
  cfg.exponent = a.exponent;
  if (a.policy == "strict") cfg.policy = ViolationPolicy::strict;
  else if (a.policy != "best-effort") throw InvalidArgument("color: policy must be best-effort or strict");
  const auto rep = color_od3_graph(g, cfg);
  if (!a.report_out.empty()) deliver(ctx, a.report_out, render([](std::ostream& o, const ColoringReport& r) { r.write(o); }, rep));
  if (!a.coloring_out.empty()) deliver(ctx, a.coloring_out, render(write_coloring, rep.coloring));
  ctx.emit("colors", rep.colors);
  ctx.emit("iterations", rep.log.size());
  ctx.emit("violations", rep.violation_count());
  for (const auto& it : rep.log)
    for (const auto& v : it.violations) ctx.note("iteration " + std::to_string(it.iteration) + ": " + v);
  for (const auto& n : rep.notes) ctx.note(n);
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::string kind;
  std::vector<std::string> inputs;
  double kappa = 0;
};

int report_verification(Context& ctx, const UniformHypergraph& h, const VerificationReport& r) {
  ctx.emit("valid", r.valid() ? "yes" : "no");
  if (!r.bad_vertices.empty()) ctx.emit("bad_vertex", r.bad_vertices[0] + 1);
  if (!r.bad_edges.empty()) {
    ctx.emit("bad_hyperedges", r.bad_edges.size());
    ctx.emit("violating_hyperedge", edge_text(h.hyperedge(r.bad_edges[0])));
  }
  return r.valid() ? kOk : kInvalid;
}

int cmd_verify(Context& ctx, const VerifyArgs& a) {
  auto need_inputs = [&](std::size_t n) {
    if (a.inputs.size() != n) throw InvalidArgument("verify " + a.kind + ": expected " + std::to_string(n) + " input files");
  };
  if (a.kind == "rep") {
    need_inputs(2);
    const auto h = parse_file(ctx, a.inputs[0], read_any_hypergraph);
    const auto rep = parse_file(ctx, a.inputs[1], read_representation);
    if (const auto* ex = std::get_if<ExactOrthogonalRepresentation>(&rep)) {
      ctx.emit("dimension", ex->dim);
      return report_verification(ctx, h, verify_exact(h, *ex));
    }
    const auto& re = std::get<RealOrthogonalRepresentation>(rep);
    ctx.emit("dimension", re.dim());
    return report_verification(ctx, h, verify_real(h, re));
  }
  if (a.kind == "coloring") {
    need_inputs(2);
    const auto h = parse_file(ctx, a.inputs[0], read_any_hypergraph);
    const auto c = parse_file(ctx, a.inputs[1], read_coloring);
    if (c.colors.size() != h.num_vertices()) throw InvalidArgument("verify coloring: size mismatch");
    ctx.emit("colors", c.colors_used());
    for (std::size_t i = 0; i < h.num_hyperedges(); ++i) {
      auto e = h.hyperedge(i);
      if (std::all_of(e.begin(), e.end(), [&](Vertex v) { return c.colors[v] == c.colors[e[0]]; })) {
        ctx.emit("valid", "no");
        ctx.emit("violating_hyperedge", edge_text(e));
        return kInvalid;
      }
    }
    ctx.emit("valid", "yes");
    return kOk;
  }
  if (a.kind == "subspace") {
    need_inputs(2);
    const auto g = parse_file(ctx, a.inputs[0], read_graph);
    const auto s = parse_file(ctx, a.inputs[1], read_subspace);
    ctx.emit("ambient", s.ambient);
    ctx.emit("k", s.k);
    return report_verification(ctx, UniformHypergraph::from_graph(g), verify_subspace(g, s));
  }
  if (a.kind == "grw") {
    need_inputs(1);
    const auto m = parse_file(ctx, a.inputs[0], read_matrix);
    const auto r = grw_check(m);
    ctx.emit("sparsity", r.sparsity);
    ctx.emit("rank", r.rank);
    ctx.emit("bound", r.bound);
    ctx.emit("holds", r.holds ? "yes" : "no");
    return r.holds ? kOk : kInvalid;
  }
  if (a.kind == "vectors") {
    need_inputs(2);
    if (!(a.kappa > 1)) throw InvalidArgument("verify vectors: --kappa above 1 is required");
    const auto g = parse_file(ctx, a.inputs[0], read_graph);
    VectorColoring vc;
    vc.vectors = parse_file(ctx, a.inputs[1], read_vectors);
    vc.kappa = a.kappa;
    try {
      check_vector_coloring(g, vc);
    } catch (const VerificationError& e) {
      ctx.emit("valid", "no");
      ctx.note(e.what());
      return kInvalid;
    }
    ctx.emit("valid", "yes");
    return kOk;
  }
  if (a.kind == "assignment") {
    need_inputs(2);
    const auto lc = parse_file(ctx, a.inputs[0], read_label_cover);
    const auto rho = parse_file(ctx, a.inputs[1], read_assignment);
    ctx.emit("satisfied", satisfied_edges(lc, rho));
    ctx.emit("edges", lc.edges.size());
    ctx.emit("value", label_cover_value(lc, rho));
    ctx.emit("valid", "yes");
    return kOk;
  }
  throw InvalidArgument("unknown verification '" + a.kind + "' (rep, coloring, subspace, grw, vectors, assignment)");
}

// ---- driver ----------------------------------------------------------------

struct Outcome {
  int code = kOk;
  ordered_json results;
  ordered_json outputs;
};

Outcome run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cmd_replay(Context& ctx, const std::string& path) {
  const std::string text = slurp(ctx, path);
  std::istringstream in(text);
  std::string line;
  std::size_t n = 0, bad = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ++n;
    ordered_json rec;
    try {
      rec = ordered_json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(path + ": " + e.what(), n);
    }
    std::vector<std::string> argv = rec.at("argv").get<std::vector<std::string>>();
    std::ostringstream sink;
    const auto got = run(argv, sink, sink);
    const bool same = got.code == rec.at("exit").get<int>() && got.results == rec.at("results") &&
                      got.outputs == rec.at("outputs");
    if (!same) {
      ++bad;
      ctx.note("entry " + std::to_string(n) + " differs: " + rec.at("command").get<std::string>());
    }
  }
  ctx.emit("entries", n);
  ctx.emit("mismatches", bad);
  return bad ? kInvalid : kOk;
}

Outcome run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx(out, err);
  std::string manifest;
  GenerateArgs gen;
  BoundsArgs bnd;
  ReduceArgs red;
  ColorArgs col;
  VerifyArgs ver;
  std::string replay_path;

  CLI::App app{"Orthogonality dimension toolkit"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();
  auto* seed_opt = app.add_option("--seed", ctx.seed, "Seed for randomized commands");
  app.add_flag("--json", ctx.json, "Print a JSON record instead of text lines");
  app.add_option("--workers", ctx.workers, "Worker count (accepted; searches run single-threaded)")->check(CLI::PositiveNumber);
  app.add_option("--manifest", manifest, "Append a JSON-lines experiment record to this file");

  auto* g = app.add_subcommand("generate", "Write a graph or Label Cover instance");
  g->add_option("family", gen.family, "kneser | schrijver | frankl-rodl | lexi | planted | labelcover")->required();
  g->add_option("params", gen.params, "Family parameters");
  g->add_option("-o,--out", gen.out, "Output file (default stdout)");
  g->add_option("--kind", gen.kind, "planted: tripartite | kneser-sub; labelcover: satisfiable | random");
  g->add_option("--p", gen.p, "Cross-part edge probability for planted tripartite graphs");
  g->add_option("--coloring", gen.coloring_out, "Write the planted 3-coloring here");
  g->add_option("--assignment", gen.assignment_out, "Write the planted Label Cover assignment here");
  g->add_option("--left", gen.left, "Label Cover |U|");
  g->add_option("--right", gen.right, "Label Cover |V|");
  g->add_option("--R", gen.R, "Left label range");
  g->add_option("--L", gen.L, "Right label range");
  g->add_option("--degree", gen.degree, "Right neighbours per left vertex");
  g->add_flag("--biregular", gen.biregular, "Bi-regular constraint graph");

  auto* b = app.add_subcommand("bounds", "Sandwich bounds on the orthogonality dimension");
  b->add_option("input", bnd.in, "Graph or hypergraph file")->required();
  b->add_flag("--no-sdp", bnd.no_sdp, "Skip the strict vector chromatic number");
  b->add_flag("--no-refuter", bnd.no_refuter, "Skip the dimension 3 refuter");
  b->add_option("--eps-sdp", bnd.eps_sdp, "Slack subtracted before rounding the SDP value up");
  b->add_option("--gram", bnd.gram_out, "Write the Gram matrix of the strict SDP solution");

  auto* r = app.add_subcommand("reduce", "Apply a reduction");
  r->add_option("kind", red.kind, "uniformity | lexi | labelcover")->required();
  r->add_option("inputs", red.inputs, "Input files")->required();
  r->add_option("-o,--out", red.out, "Output file (default stdout)");
  r->add_option("--k2", red.k2, "Target uniformity");
  r->add_option("--m", red.m, "Capacity parameter m");
  r->add_option("--t", red.t, "Dimension threshold t");
  r->add_option("--directory", red.directory_out, "Write the vertex directory here");

  auto* c = app.add_subcommand("color", "Color a graph promised to have od <= 3");
  c->add_option("input", col.in, "Graph file")->required();
  c->add_option("--report", col.report_out, "Write the iteration report here");
  c->add_option("--coloring", col.coloring_out, "Write the coloring here");
  c->add_option("--exponent", col.exponent, "High-degree threshold exponent");
  c->add_option("--policy", col.policy, "best-effort | strict");

  auto* v = app.add_subcommand("verify", "Check a certificate");
  v->add_option("kind", ver.kind, "rep | coloring | subspace | grw | vectors | assignment")->required();
  v->add_option("inputs", ver.inputs, "Input files")->required();
  v->add_option("--kappa", ver.kappa, "Vector coloring level (verify vectors)");

  auto* rp = app.add_subcommand("replay", "Re-run every manifest entry and compare results");
  rp->add_option("manifest", replay_path, "Manifest file")->required();

  std::vector<const char*> argv{"orthodim"};
  for (const auto& s : args) argv.push_back(s.c_str());
  Outcome res;
  const auto start = std::chrono::steady_clock::now();
  try {
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e, out, err);
      res.code = code == 0 ? kOk : kBadArgs;
      return res;
    }
    ctx.has_seed = seed_opt->count() > 0;
    if (g->parsed()) cmd_generate(ctx, gen);
    else if (b->parsed()) cmd_bounds(ctx, bnd);
    else if (r->parsed()) cmd_reduce(ctx, red);
    else if (c->parsed()) cmd_color(ctx, col);
    else if (v->parsed()) res.code = cmd_verify(ctx, ver);
    else if (rp->parsed()) res.code = cmd_replay(ctx, replay_path);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    res.code = kParse;
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << '\n';
    res.code = kCapacity;
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << '\n';
    res.code = kInvalid;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    res.code = kBadArgs;
  } catch (const IoFailure& e) {
    err << "error: " << e.what() << '\n';
    res.code = kBadArgs;
  }
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (res.code == kOk || res.code == kInvalid) {
    std::ostream& text = ctx.stdout_payload ? err : out;
    if (ctx.json) {
      ordered_json j = ctx.results;
      j["exit"] = res.code;
      text << j.dump() << '\n';
    } else {
      for (const auto& l : ctx.lines) text << l << '\n';
    }
  }
  res.results = ctx.results;
  res.outputs = ctx.outputs;
  if (!manifest.empty() && !(rp->parsed())) {
    std::vector<std::string> replay_args;
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (args[i] == "--manifest") {
        ++i;
        continue;
      }
      if (args[i].rfind("--manifest=", 0) == 0) continue;
      replay_args.push_back(args[i]);
    }
    std::string command;
    for (const auto& s : replay_args) command += (command.empty() ? "" : " ") + s;
    ordered_json rec;
    rec["command"] = command;
    rec["argv"] = replay_args;
    rec["seed"] = ctx.has_seed ? ordered_json(ctx.seed) : ordered_json(nullptr);
    rec["version"] = kVersion;
    rec["inputs"] = ctx.inputs;
    rec["outputs"] = ctx.outputs;
    rec["exit"] = res.code;
    rec["wall_clock_s"] = wall;
    rec["results"] = ctx.results;
    std::ofstream mf(manifest, std::ios::app);
    if (!mf || !(mf << rec.dump() << '\n')) {
      err << "error: cannot append to manifest '" << manifest << "'\n";
      if (res.code == kOk) res.code = kBadArgs;
    }
  }
  return res;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr).code;
}
