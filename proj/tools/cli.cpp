#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "rigidity/bounds.hpp"
#include "rigidity/generators.hpp"
#include "rigidity/graph_io.hpp"
#include "rigidity/pebble.hpp"
#include "rigidity/realization.hpp"
#include "rigidity/reductions.hpp"
#include "rigidity/report_io.hpp"
#include "rigidity/rigidity_matrix.hpp"

namespace rigidity::cli {

namespace {

using nlohmann::ordered_json;

// Input or request problems that map to exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input = "-";
  std::uint64_t seed = 0;
  int trials = 3;
  std::string format;
  bool rational = false;
  bool timing = false;
  std::optional<int> theorem;
  std::optional<int> lemma;
  std::string family;
  std::size_t count = 1;
  std::optional<std::size_t> degree;
  std::string size;
  int max_degree = 4;
  std::string out;
  std::string op;
  std::optional<Vertex> vertex;
  std::vector<std::string> edges;
  std::string pair;
  std::size_t sweep_count = 500;  // selfcheck keeps its own default
  std::size_t max_vertices = 15;
};

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

Graph load_graph(const Options& o, std::istream& in) {
  if (o.input == "-") return read_edge_list(in);
  std::ifstream file(o.input);
  if (!file) throw UsageError("cannot open " + o.input);
  return read_edge_list(file);
}

std::string graph_name(const Options& o) { return o.input == "-" ? "stdin" : o.input; }

Vertex parse_vertex(std::string_view text) {
  Vertex v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError("bad vertex id '" + std::string(text) + "'");
  }
  return v;
}

// "u-v" or "u,v".
Edge parse_edge(std::string_view text) {
  const auto sep = text.find_first_of("-,");
  if (sep == std::string_view::npos) throw UsageError("edge must look like u-v, got '" + std::string(text) + "'");
  const Vertex a = parse_vertex(text.substr(0, sep));
  const Vertex b = parse_vertex(text.substr(sep + 1));
  if (a == b) throw UsageError("edge endpoints coincide in '" + std::string(text) + "'");
  return Edge(a, b);
}

std::pair<std::size_t, std::size_t> parse_size(const std::string& text, std::size_t fallback) {
  if (text.empty()) return {fallback, fallback};
  auto number = [&](std::string_view s) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw UsageError("bad --size '" + text + "'");
    return v;
  };
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    const auto v = number(text);
    return {v, v};
  }
  const auto lo = number(std::string_view(text).substr(0, colon));
  const auto hi = number(std::string_view(text).substr(colon + 1));
  if (lo > hi) throw UsageError("empty --size range '" + text + "'");
  return {lo, hi};
}

ReportFormat report_format(const std::string& name) {
  if (name.empty() || name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  if (name == "text") return ReportFormat::text;
  throw UsageError("format must be json, csv or text here");
}

void write_output(const Options& o, Io& io, const std::string& text) {
  if (o.out.empty()) {
    io.out << text;
    return;
  }
  std::ofstream file(o.out);
  if (!file) throw UsageError("cannot write " + o.out);
  file << text;
}

int cmd_rank(const Options& o, Io& io, bool stress_first) {
  const Graph g = load_graph(o, io.in);
  const std::size_t pebble = pebble_rank(g);
  const std::size_t linear = generic_rank(
      g, o.trials, o.seed, o.rational ? ScalarDomain::rational : ScalarDomain::prime_field);
  const bool agree = pebble == linear;
  const std::size_t stress = g.edge_count() - pebble;
  if (o.format == "json") {
    ordered_json j;
    j["graph_id"] = graph_name(o);
    j["vertex_count"] = g.vertex_count();
    j["edge_count"] = g.edge_count();
    j["rank"] = pebble;
    j["stress"] = stress;
    j["pebble_rank"] = pebble;
    j["linear_rank"] = linear;
    j["oracle_agreement"] = agree;
    j["domain"] = o.rational ? "rational" : "prime_field";
    io.out << j.dump() << '\n';
  } else if (o.format.empty() || o.format == "text") {
    if (stress_first) {
      io.out << "stress " << stress << "\nrank " << pebble << '\n';
    } else {
      io.out << "rank " << pebble << "\nstress " << stress << '\n';
    }
    io.out << "oracle_agreement " << (agree ? "true" : "false") << " (pebble " << pebble
           << ", linear " << linear << ")\n";
  } else {
    throw UsageError("format must be text or json here");
  }
  if (!agree) {
    io.err << "error: rank oracles disagree (pebble " << pebble << ", linear " << linear << ")\n";
    return kViolation;
  }
  return kPass;
}

FamilySpec family_spec(const Options& o) {
  auto family = parse_family(o.family);
  if (!family) throw UsageError("unknown family '" + o.family + "'");
  FamilySpec spec;
  spec.family = *family;
  std::size_t default_degree = 4;
  if (o.theorem) default_degree = *o.theorem == 1 ? 4 : 5;
  spec.degree = o.degree.value_or(default_degree);
  std::size_t default_size = 3;
  if (spec.family == Family::complete) default_size = 5;
  if (spec.family == Family::random_regular) default_size = 20;
  std::tie(spec.min_size, spec.max_size) = parse_size(o.size, default_size);
  return spec;
}

int finish_reports(const Options& o, Io& io, const std::vector<BoundReport>& reports) {
  std::ostringstream text;
  write_reports(text, reports, report_format(o.format));
  write_output(o, io, text.str());
  bool ok = true;
  for (const auto& r : reports) {
    if (!r.satisfied) {
      io.err << "violation: " << r.graph_id << " rank " << r.rank << " below bound "
             << to_string(r.theorem_bound) << '\n';
      ok = false;
    }
    if (!r.oracle_agreement) {
      io.err << "oracle mismatch: " << r.graph_id << " pebble " << r.rank << ", linear "
             << r.linear_rank << '\n';
      ok = false;
    }
  }
  return ok ? kPass : kViolation;
}

int cmd_verify(const Options& o, Io& io) {
  if (o.theorem && o.lemma) throw UsageError("--theorem and --lemma are exclusive");
  VerifyOptions vo{o.trials, o.seed, o.timing};
  if (!o.family.empty()) {
    if (o.lemma) throw UsageError("--lemma applies to a single input graph");
    const FamilySpec spec = family_spec(o);
    if (o.theorem && spec.family == Family::random_regular &&
        spec.degree != (*o.theorem == 1 ? 4u : 5u)) {
      throw UsageError("--degree does not match --theorem");
    }
    const auto entries = batch_verify(spec, o.count, o.seed, vo);
    std::vector<BoundReport> reports;
    bool errors = false;
    for (const auto& e : entries) {
      if (!e.report) {
        io.err << "error: item " << e.index << ": " << e.error << '\n';
        errors = true;
        continue;
      }
      if (o.theorem) {
        const auto want = *o.theorem == 1 ? BoundCheck::theorem1 : BoundCheck::theorem2;
        if (e.report->check != want) {
          io.err << "error: item " << e.index << " (" << e.graph_id << ") is not covered by theorem "
                 << *o.theorem << '\n';
          errors = true;
          continue;
        }
      }
      reports.push_back(*e.report);
    }
    const int status = finish_reports(o, io, reports);
    return errors ? kUsage : status;
  }
  const Graph g = load_graph(o, io.in);
  const std::string id = graph_name(o);
  BoundReport report;
  if (o.theorem) {
    report = *o.theorem == 1 ? verify_theorem1(g, id, vo) : verify_theorem2(g, id, vo);
  } else if (o.lemma) {
    report = verify_lemma_bound(g, *o.lemma, id, vo);
  } else {
    report = verify_auto(g, id, vo);
  }
  return finish_reports(o, io, {report});
}

int cmd_generate(const Options& o, Io& io) {
  if (o.family.empty()) throw UsageError("generate needs --family");
  const FamilySpec spec = family_spec(o);
  if (o.count > 1 && !o.out.empty()) std::filesystem::create_directories(o.out);
  for (std::size_t i = 0; i < o.count; ++i) {
    std::string id;
    const Graph g = generate_family_member(spec, i, o.seed, &id);
    if (o.count > 1 && !o.out.empty()) {
      std::ofstream file(std::filesystem::path(o.out) / (id + ".edges"));
      if (!file) throw UsageError("cannot write into " + o.out);
      write_edge_list(file, g);
      continue;
    }
    std::ostringstream text;
    if (o.count > 1) text << "# " << id << '\n';
    write_edge_list(text, g);
    if (o.out.empty()) {
      io.out << text.str();
    } else {
      write_output(o, io, text.str());
    }
  }
  return kPass;
}

std::pair<Graph, ReductionTrace> apply_reduction(const Options& o, const Graph& g) {
  const std::string& op = o.op;
  std::vector<Edge> edges;
  for (const auto& text : o.edges) edges.push_back(parse_edge(text));
  auto need_vertex = [&] {
    if (!o.vertex) throw UsageError("--op " + op + " needs --vertex");
    return *o.vertex;
  };
  auto single = [&](std::pair<Graph, ReductionStep> result) {
    ReductionTrace trace{g, {}, g, StressRelation::equal()};
    trace.append(std::move(result.second), result.first);
    return std::pair{std::move(result.first), std::move(trace)};
  };
  if (op == "delete-vertex" || op == "delete-low-degree-vertex" || op == "delete-vertex-general") {
    return single(delete_vertex(g, need_vertex()));
  }
  if (op == "remove-bridge") {
    if (edges.size() != 1) throw UsageError("remove-bridge needs one --edge");
    return single(remove_bridge(g, edges[0]));
  }
  if (op == "remove-two-cut") {
    if (edges.size() != 2) throw UsageError("remove-two-cut needs two --edge");
    return single(remove_two_cut(g, edges[0], edges[1]));
  }
  if (op == "disconnect-split") {
    if (edges.empty()) throw UsageError("disconnect-split needs at least one --edge");
    auto split = disconnect_split(g, edges, o.seed);
    return single({g.without_edges(split.step.removed_edges), std::move(split.step)});
  }
  if (op == "inverse-one-extension" || op == "inverse-one-extension-deg4") {
    if (o.pair.empty()) throw UsageError("--op " + op + " needs --pair i-j");
    const Edge ij = parse_edge(o.pair);
    return single(op == "inverse-one-extension"
                      ? inverse_one_extension(g, need_vertex(), ij.u, ij.v)
                      : inverse_one_extension_deg4(g, need_vertex(), ij.u, ij.v));
  }
  if (op == "peel-closure") return peel_closure(g, need_vertex());
  throw UsageError("unknown reduction '" + op + "'");
}

int cmd_reduce(const Options& o, Io& io) {
  if (o.op.empty()) throw UsageError("reduce needs --op");
  const Graph g = load_graph(o, io.in);
  ReductionTrace trace;
  try {
    trace = apply_reduction(o, g).second;
  } catch (const ReductionError& e) {
    throw UsageError(e.what());
  }
  // Re-check every step against certified stress counts.
  Graph cur = trace.initial_graph;
  long long before = static_cast<long long>(certified_stress(cur, o.trials, o.seed));
  bool ok = true;
  for (auto& step : trace.steps) {
    Graph next = apply_step(cur, step);
    const long long after = static_cast<long long>(certified_stress(next, o.trials, o.seed));
    step.stress_before = before;
    step.stress_after = after;
    if (!step.relation.holds(before, after)) {
      io.err << "violation: " << to_string(step.kind) << " breaks " << step.relation.describe()
             << " (" << before << " -> " << after << ")\n";
      ok = false;
    }
    cur = std::move(next);
    before = after;
  }
  write_output(o, io, trace_to_json(trace).dump() + "\n");
  return ok ? kPass : kViolation;
}

int cmd_certify(const Options& o, Io& io) {
  const Graph g = load_graph(o, io.in);
  if (auto why = lemma_hypothesis_violation(g, o.max_degree)) throw UsageError(*why);
  StressCertificate cert;
  try {
    cert = certify_stress_bound(g, o.max_degree, o.seed);
  } catch (const ReductionError& e) {
    io.err << "certificate failed: " << e.what() << '\n';
    return kViolation;
  }
  write_output(o, io, certificate_to_json(cert).dump() + "\n");
  return kPass;
}

int cmd_selfcheck(const Options& o, Io& io) {
  const auto result = oracle_agreement_sweep(o.sweep_count, o.max_vertices, o.seed, o.trials);
  if (o.format == "json") {
    ordered_json j;
    j["graphs"] = result.graphs;
    j["mismatches"] = result.mismatches.size();
    ordered_json seeds = ordered_json::array();
    for (const auto& m : result.mismatches) seeds.push_back(m.first);
    j["mismatch_seeds"] = std::move(seeds);
    io.out << j.dump() << '\n';
  } else {
    io.out << "selfcheck: " << result.graphs << " graphs, " << result.mismatches.size()
           << " oracle mismatches\n";
  }
  for (const auto& [item_seed, graph] : result.mismatches) {
    io.err << "oracle mismatch at item seed " << item_seed << ":\n";
    write_edge_list(io.err, graph);
  }
  return result.mismatches.empty() ? kPass : kViolation;
}

int cmd_export(const Options& o, Io& io) {
  const Graph g = load_graph(o, io.in);
  std::ostringstream text;
  if (o.format.empty() || o.format == "dot") {
    write_dot(text, g);
  } else if (o.format == "svg") {
    write_svg(text, g, sample_rational_realization(g, o.seed));
  } else {
    throw UsageError("export format must be dot or svg");
  }
  write_output(o, io, text.str());
  return kPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generic 2D rigidity rank, stress counts, reductions and bound checks", "rigidity"};
  app.require_subcommand(1);
  Options o;
  Io io{in, out, err};

  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "Base seed for realizations and generators");
    sub->add_option("--trials", o.trials, "Random realizations per linear-algebra rank")
        ->check(CLI::PositiveNumber);
  };
  auto input = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "Edge-list file, '-' for stdin");
  };

  auto* rank = app.add_subcommand("rank", "Print r(G) and s(G) with oracle agreement");
  auto* stress = app.add_subcommand("stress", "Print s(G) and r(G) with oracle agreement");
  for (auto* sub : {rank, stress}) {
    common(sub);
    input(sub);
    sub->add_option("--format", o.format, "text or json");
    sub->add_flag("--rational", o.rational, "Exact rational realizations instead of F_p");
  }

  auto* verify = app.add_subcommand("verify", "Check the regular-graph rank bound or s <= z");
  common(verify);
  input(verify);
  verify->add_option("--format", o.format, "json, csv or text");
  verify->add_option("--theorem", o.theorem, "1 (4-regular) or 2 (5-regular)")
      ->check(CLI::IsMember({1, 2}));
  verify->add_option("--lemma", o.lemma, "Degree cap 4 or 5 for s <= z")->check(CLI::IsMember({4, 5}));
  verify->add_flag("--timing", o.timing, "Fill runtime_ms (output no longer reproducible)");
  verify->add_option("--out", o.out, "Write reports to this file");

  auto* generate = app.add_subcommand("generate", "Write edge lists for a graph family");
  common(generate);
  generate->add_option("--out", o.out, "Output file, or directory when --count > 1");
  for (auto* sub : {verify, generate}) {
    sub->add_option("--family", o.family, "k5chain, k6chain, random-regular or complete");
    sub->add_option("--count", o.count, "Number of graphs");
    sub->add_option("--degree", o.degree, "Degree for random-regular");
    sub->add_option("--size", o.size, "N or MIN:MAX (vertices, or copies for chains)");
  }

  auto* reduce = app.add_subcommand("reduce", "Apply one reduction and emit its trace");
  common(reduce);
  input(reduce);
  reduce->add_option("--op", o.op,
                     "delete-vertex, remove-bridge, remove-two-cut, disconnect-split, "
                     "inverse-one-extension, inverse-one-extension-deg4 or peel-closure")
      ->required();
  reduce->add_option("--vertex", o.vertex, "Vertex the reduction acts on");
  reduce->add_option("--edge", o.edges, "Edge u-v (repeat for cuts)");
  reduce->add_option("--pair", o.pair, "Missing neighbour pair i-j");
  reduce->add_option("--out", o.out, "Write the trace to this file");

  auto* certify = app.add_subcommand("certify", "Replay the case analysis behind s <= z");
  common(certify);
  input(certify);
  certify->add_option("--max-degree", o.max_degree, "Degree cap 4 or 5")->check(CLI::IsMember({4, 5}));
  certify->add_option("--out", o.out, "Write the certificate to this file");

  auto* selfcheck = app.add_subcommand("selfcheck", "Pebble vs linear-algebra rank on random graphs");
  common(selfcheck);
  selfcheck->add_option("--count", o.sweep_count, "Number of graphs")->capture_default_str();
  selfcheck->add_option("--max-vertices", o.max_vertices, "Largest vertex count")->capture_default_str();
  selfcheck->add_option("--format", o.format, "text or json");

  auto* exporter = app.add_subcommand("export", "Write DOT, or SVG of a sampled realization");
  common(exporter);
  input(exporter);
  exporter->add_option("--format", o.format, "dot or svg");
  exporter->add_option("--out", o.out, "Output file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (rank->parsed()) return cmd_rank(o, io, false);
    if (stress->parsed()) return cmd_rank(o, io, true);
    if (verify->parsed()) return cmd_verify(o, io);
    if (generate->parsed()) return cmd_generate(o, io);
    if (reduce->parsed()) return cmd_reduce(o, io);
    if (certify->parsed()) return cmd_certify(o, io);
    if (selfcheck->parsed()) return cmd_selfcheck(o, io);
    if (exporter->parsed()) return cmd_export(o, io);
  } catch (const OracleMismatch& e) {
    err << "oracle mismatch: " << e.what() << '\n';
    return kViolation;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace rigidity::cli
