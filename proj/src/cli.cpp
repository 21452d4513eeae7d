#include "levgraph/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "levgraph/edit_distance.hpp"
#include "levgraph/graph.hpp"
#include "levgraph/parallel.hpp"
#include "levgraph/resolving.hpp"
#include "levgraph/symmetry.hpp"

namespace levgraph {

namespace {

struct CommonOptions {
  int k1 = 0;
  int k2 = 0;
  int a = 2;
  std::string out_path;
  std::int64_t max_vertices = kDefaultVertexBudget;
  bool max_vertices_set = false;
  int threads = 0;

  GraphSpec spec() const { return GraphSpec(k1, k2, a); }
  std::int64_t guard_or(std::int64_t fallback) const {
    return max_vertices_set ? max_vertices : fallback;
  }
};

void add_common(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--k1", opt.k1, "minimum string length")->required();
  cmd->add_option("--k2", opt.k2, "maximum string length")->required();
  cmd->add_option("--a", opt.a, "alphabet size (>= 2)")->required();
  cmd->add_option("--out", opt.out_path, "write output to this file instead of stdout");
  cmd->add_option("--max-vertices", opt.max_vertices,
                  "size guard for graph construction and exhaustive searches");
  cmd->add_option("--threads", opt.threads, "worker threads (0 = all cores)");
}

std::string format_witness(const GraphSpec& spec, const std::vector<StringRank>& ranks) {
  std::string out;
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    if (i > 0) out += " ";
    out += format_string(unrank(ranks[i], spec), spec.alphabet());
  }
  return out;
}

std::int64_t factorial(int n) {
  std::int64_t out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

// ---------------------------------------------------------------------------
// Subcommand bodies. Each returns the text to emit.

std::string cmd_dist(const CommonOptions& opt, const std::string& u_literal,
                     const std::string& v_literal) {
  const GraphSpec spec = opt.spec();
  const LevString u = parse_string(u_literal, spec.alphabet());
  const LevString v = parse_string(v_literal, spec.alphabet());
  for (const LevString* w : {&u, &v}) {
    if (!spec.contains_length(static_cast<std::int64_t>(w->size()))) {
      throw std::invalid_argument("string length " + std::to_string(w->size()) +
                                  " outside [" + std::to_string(spec.k1) + ", " +
                                  std::to_string(spec.k2) + "]");
    }
  }
  std::string out = "edit = " + std::to_string(edit_distance_banded(u, v)) + "\n";
  if (u.size() == v.size()) {
    out += "hamming = " + std::to_string(hamming_distance(u, v)) + "\n";
  }
  out += "geodesic = " + std::to_string(geodesic_distance(spec, u, v)) + "\n";
  return out;
}

std::string cmd_gen(const CommonOptions& opt, const std::string& format) {
  const LevGraph g = LevGraph::build(opt.spec(), opt.max_vertices);
  return format == "json" ? to_json(g) : to_dot(g);
}

std::string cmd_resolve(const CommonOptions& opt, const std::string& format) {
  const ResolvingSet set = build_resolving_set(opt.spec());
  return format == "json" ? resolving_set_to_json(set) : resolving_set_to_text(set);
}

std::string cmd_embed(const CommonOptions& opt, const std::vector<std::string>& literals,
                      bool all, const std::string& format) {
  const GraphSpec spec = opt.spec();
  if (all == !literals.empty()) {
    throw std::invalid_argument("pass either string literals or --all");
  }
  const ResolvingSet set = build_resolving_set(spec);
  std::vector<LevString> inputs;
  if (all) {
    const std::int64_t n = spec.vertex_count();
    if (n > opt.max_vertices) {
      throw ResourceLimitError("vertex count " + std::to_string(n) +
                               " exceeds the budget of " +
                               std::to_string(opt.max_vertices) + " vertices");
    }
    inputs = enumerate_strings(spec);
  } else {
    inputs.reserve(literals.size());
    for (const std::string& lit : literals) inputs.push_back(parse_string(lit, spec.alphabet()));
  }
  return format == "csv" ? embedding_to_csv(set, inputs) : embedding_to_json(set, inputs);
}

std::string cmd_auto(const CommonOptions& opt, const std::string& format) {
  const LevGraph g = LevGraph::build(opt.spec(), opt.max_vertices);
  const auto automorphisms =
      enumerate_automorphisms(g, opt.guard_or(kDefaultAutomorphismGuard));
  if (format == "text") {
    return "automorphisms = " + std::to_string(automorphisms.size()) + "\n";
  }
  return automorphisms_to_json(g, automorphisms);
}

std::string search_result_json(const GraphSpec& spec, const std::string& key,
                               const SubsetSearchResult& result) {
  nlohmann::json j;
  j["format_version"] = 1;
  j["spec"] = {{"k1", spec.k1}, {"k2", spec.k2}, {"a", spec.a}};
  j[key] = result.size;
  nlohmann::json witness = nlohmann::json::array();
  for (StringRank r : result.witness) {
    witness.push_back(format_string(unrank(r, spec), spec.alphabet()));
  }
  j["witness"] = std::move(witness);
  return j.dump(2) + "\n";
}

std::string cmd_dim(const CommonOptions& opt, int max_size, const std::string& format) {
  const LevGraph g = LevGraph::build(opt.spec(), opt.max_vertices);
  const SubsetSearchResult result =
      exact_metric_dimension(g, max_size, opt.guard_or(kDefaultDimensionGuard));
  if (format == "json") return search_result_json(opt.spec(), "beta", result);
  return "beta = " + std::to_string(result.size) + "\n" +
         "witness = " + format_witness(opt.spec(), result.witness) + "\n";
}

std::string cmd_det(const CommonOptions& opt, const std::string& format) {
  const LevGraph g = LevGraph::build(opt.spec(), opt.max_vertices);
  const SubsetSearchResult result =
      exact_determining_number(g, opt.guard_or(kDefaultAutomorphismGuard));
  if (format == "json") return search_result_json(opt.spec(), "det", result);
  return "det = " + std::to_string(result.size) + "\n" +
         "witness = " + format_witness(opt.spec(), result.witness) + "\n";
}

// ---------------------------------------------------------------------------
// verify: per-check pass/fail report.

struct CheckLine {
  enum class Status { kPass, kFail, kSkip };
  Status status;
  std::string text;
};

// All-pairs comparisons are quadratic; keep them to modest graphs unless
// the caller raises the guard explicitly.
constexpr std::int64_t kAllPairsGuard = 4096;

void verify_geodesic(const CommonOptions& opt, std::vector<CheckLine>& lines) {
  const GraphSpec spec = opt.spec();
  const LevGraph g = LevGraph::build(spec, opt.max_vertices);
  const std::int64_t n = g.vertex_count();
  if (n > opt.guard_or(kAllPairsGuard)) {
    throw ResourceLimitError("vertex count " + std::to_string(n) +
                             " exceeds the all-pairs guard of " +
                             std::to_string(opt.guard_or(kAllPairsGuard)) +
                             " vertices");
  }

  const std::vector<int> from_first = geodesic_bfs(g, StringRank{0});
  const std::int64_t reached =
      n - std::count(from_first.begin(), from_first.end(), -1);
  lines.push_back({reached == n ? CheckLine::Status::kPass : CheckLine::Status::kFail,
                   "geodesic: BFS reaches " + std::to_string(reached) + " of " +
                       std::to_string(n) + " vertices"});

  std::int64_t mismatches = 0;
  std::string first_bad;
  for (StringRank u = 0; u < n; ++u) {
    const std::vector<int> dist = geodesic_bfs(g, u);
    const LevString us = g.vertex(u);
    for (StringRank v = u + 1; v < n; ++v) {
      if (dist[v] != geodesic_distance(spec, us, g.vertex(v))) {
        if (mismatches == 0) {
          first_bad = format_string(us, spec.alphabet()) + "," +
                      format_string(g.vertex(v), spec.alphabet());
        }
        ++mismatches;
      }
    }
  }
  lines.push_back({mismatches == 0 ? CheckLine::Status::kPass : CheckLine::Status::kFail,
                   mismatches == 0
                       ? "geodesic: closed-form distance equals BFS on all " +
                             std::to_string(n * (n - 1) / 2) + " pairs"
                       : "geodesic: " + std::to_string(mismatches) +
                             " closed-form/BFS mismatches, first at (" + first_bad + ")"});

  std::int64_t bad_degrees = 0;
  std::string first_vertex;
  for (StringRank r = 0; r < n; ++r) {
    const LevString u = g.vertex(r);
    DegreeTriple expected = degree_formula(u, spec.alphabet());
    const int len = static_cast<int>(u.size());
    if (len - 1 < spec.k1) expected.down = 0;
    if (len + 1 > spec.k2) expected.up = 0;
    if (neighbor_length_split(g, r) != expected) {
      if (bad_degrees == 0) first_vertex = format_string(u, spec.alphabet());
      ++bad_degrees;
    }
  }
  lines.push_back({bad_degrees == 0 ? CheckLine::Status::kPass : CheckLine::Status::kFail,
                   bad_degrees == 0
                       ? "geodesic: neighbor counts split by length match the degree "
                         "formula on all vertices"
                       : "geodesic: degree formula mismatch on " +
                             std::to_string(bad_degrees) + " vertices, first at " +
                             first_vertex});
}

void verify_resolve(const CommonOptions& opt, std::vector<CheckLine>& lines) {
  const GraphSpec spec = opt.spec();
  const LevGraph g = LevGraph::build(spec, opt.max_vertices);
  const ResolvingSet set = build_resolving_set(spec);
  const ResolveCheck check = is_resolving(g, set.nodes);
  if (check.resolving) {
    lines.push_back({CheckLine::Status::kPass,
                     "resolve: constructed set of size " + std::to_string(set.size()) +
                         " resolves all " + std::to_string(g.vertex_count()) +
                         " vertices"});
  } else {
    const auto [x, y] = *check.witness;
    lines.push_back({CheckLine::Status::kFail,
                     "resolve: unresolved pair (" +
                         format_string(g.vertex(x), spec.alphabet()) + ", " +
                         format_string(g.vertex(y), spec.alphabet()) + ")"});
  }
  const std::int64_t raw = resolving_set_raw_size(spec);
  const std::int64_t bound = resolving_set_size_bound(spec);
  const bool sizes_ok = set.raw_size == raw && set.size() <= bound;
  lines.push_back({sizes_ok ? CheckLine::Status::kPass : CheckLine::Status::kFail,
                   "resolve: size accounting: " + std::to_string(set.raw_size) +
                       " raw pieces, " + std::to_string(set.size()) +
                       " after dedup, bound " + std::to_string(bound)});
}

void verify_auto(const CommonOptions& opt, std::vector<CheckLine>& lines) {
  const GraphSpec spec = opt.spec();
  const LevGraph g = LevGraph::build(spec, opt.max_vertices);
  const auto automorphisms =
      enumerate_automorphisms(g, opt.guard_or(kDefaultAutomorphismGuard));
  const std::int64_t count = static_cast<std::int64_t>(automorphisms.size());

  std::int64_t expected = 0;
  std::string rule;
  if (spec.k1 != spec.k2 && spec.k2 >= 2) {
    expected = 2 * factorial(spec.a);
    rule = "2*a!";
  } else if (spec.k1 == spec.k2) {
    expected = factorial(spec.k2);
    for (int i = 0; i < spec.k2; ++i) expected *= factorial(spec.a);
    rule = "k!*(a!)^k";
  } else {
    expected = factorial(spec.a + 1);
    rule = "(a+1)!";
  }
  lines.push_back({count == expected ? CheckLine::Status::kPass : CheckLine::Status::kFail,
                   "auto: " + std::to_string(count) + " automorphisms, expected " +
                       std::to_string(expected) + " = " + rule});
  if (spec.k1 != spec.k2 && spec.k2 >= 2) {
    std::vector<VertexPermutation> structural;
    for (const StructuralAutomorphism& phi : construct_structural_group(spec.alphabet())) {
      structural.push_back(to_vertex_permutation(phi, spec));
    }
    std::sort(structural.begin(), structural.end());
    const bool matches = match_groups(g, opt.guard_or(kDefaultAutomorphismGuard));
    std::string text = "auto: enumerated group equals the character-bijection/"
                       "reversal group";
    if (!matches) {
      // Name the first enumerated map missing from the structural side by
      // its action on a moved vertex.
      for (const VertexPermutation& perm : automorphisms) {
        if (std::binary_search(structural.begin(), structural.end(), perm)) continue;
        for (std::size_t v = 0; v < perm.size(); ++v) {
          if (perm[v] != static_cast<std::int32_t>(v)) {
            text = "auto: unexpected automorphism maps " +
                   format_string(g.vertex(static_cast<StringRank>(v)), spec.alphabet()) +
                   " to " + format_string(g.vertex(perm[v]), spec.alphabet());
            break;
          }
        }
        break;
      }
    }
    lines.push_back({matches ? CheckLine::Status::kPass : CheckLine::Status::kFail, text});
  }
}

void verify_det(const CommonOptions& opt, std::vector<CheckLine>& lines) {
  const GraphSpec spec = opt.spec();
  if (spec.k1 == spec.k2) {
    lines.push_back({CheckLine::Status::kSkip,
                     "det: no closed-form determining number for k1 = k2"});
    return;
  }
  const LevGraph g = LevGraph::build(spec, opt.max_vertices);
  const std::int64_t guard = opt.guard_or(kDefaultAutomorphismGuard);
  const SubsetSearchResult exact = exact_determining_number(g, guard);
  if (spec.k2 >= 2 && !(spec.k2 == 2 && spec.a == 2)) {
    const DeterminingSet built = build_determining_set(spec);
    const bool determining = is_determining(g, built.nodes, guard);
    lines.push_back({determining ? CheckLine::Status::kPass : CheckLine::Status::kFail,
                     "det: closed-form set of size " + std::to_string(built.nodes.size()) +
                         " is determining"});
    const int expected = (spec.a + spec.k2 - 1) / spec.k2;
    const bool value_ok = exact.size == expected &&
                          static_cast<int>(built.nodes.size()) == expected;
    lines.push_back({value_ok ? CheckLine::Status::kPass : CheckLine::Status::kFail,
                     "det: determining number " + std::to_string(exact.size) +
                         ", expected " + std::to_string(expected) + " = ceil(a/k2)"});
  } else if (spec.k2 == 2 && spec.a == 2) {
    lines.push_back({exact.size == 2 ? CheckLine::Status::kPass : CheckLine::Status::kFail,
                     "det: determining number " + std::to_string(exact.size) +
                         ", expected 2 (k2 = a = 2 exception)"});
  } else {
    lines.push_back({exact.size == spec.a ? CheckLine::Status::kPass
                                          : CheckLine::Status::kFail,
                     "det: determining number " + std::to_string(exact.size) +
                         ", expected a = " + std::to_string(spec.a) +
                         " (complete graph)"});
  }
}

std::pair<std::string, bool> cmd_verify(const CommonOptions& opt, const std::string& suite) {
  std::vector<CheckLine> lines;
  const auto run_suite = [&](const std::string& name,
                             void (*body)(const CommonOptions&, std::vector<CheckLine>&)) {
    if (suite != "all" && suite != name) return;
    try {
      body(opt, lines);
    } catch (const ResourceLimitError& e) {
      lines.push_back({CheckLine::Status::kSkip, name + ": " + e.what()});
    }
  };
  run_suite("geodesic", verify_geodesic);
  run_suite("resolve", verify_resolve);
  run_suite("auto", verify_auto);
  run_suite("det", verify_det);

  std::string out;
  int passed = 0, failed = 0, skipped = 0;
  for (const CheckLine& line : lines) {
    switch (line.status) {
      case CheckLine::Status::kPass:
        out += "[PASS] ";
        ++passed;
        break;
      case CheckLine::Status::kFail:
        out += "[FAIL] ";
        ++failed;
        break;
      case CheckLine::Status::kSkip:
        out += "[SKIP] ";
        ++skipped;
        break;
    }
    out += line.text + "\n";
  }
  out += "verify: " + std::to_string(passed) + " passed, " + std::to_string(failed) +
         " failed, " + std::to_string(skipped) + " skipped\n";
  return {out, failed == 0};
}

void write_output(const CommonOptions& opt, const std::string& text, std::ostream& out) {
  if (opt.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opt.out_path, std::ios::binary);
  if (!file) {
    throw std::runtime_error("cannot open output file " + opt.out_path);
  }
  file << text;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Levenshtein graph toolkit: construction, edit-distance kernels, "
               "resolving-set embeddings, and symmetry analysis"};
  app.require_subcommand(1);

  CommonOptions opt;
  std::string u_literal, v_literal;
  std::vector<std::string> embed_literals;
  bool embed_all = false;
  std::string gen_format = "dot";
  std::string resolve_format = "text";
  std::string embed_format = "json";
  std::string auto_format = "json";
  std::string dim_format = "text";
  std::string det_format = "text";
  std::string suite = "all";
  int dim_max_size = -1;

  CLI::App* gen = app.add_subcommand("gen", "export the graph");
  add_common(gen, opt);
  gen->add_option("--format", gen_format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}));

  CLI::App* dist = app.add_subcommand("dist", "distances between two strings");
  add_common(dist, opt);
  dist->add_option("u", u_literal, "first string literal")->required();
  dist->add_option("v", v_literal, "second string literal")->required();

  CLI::App* resolve = app.add_subcommand("resolve", "construct a resolving set");
  add_common(resolve, opt);
  resolve->add_option("--format", resolve_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* embed = app.add_subcommand("embed", "embed strings as distance vectors");
  add_common(embed, opt);
  embed->add_option("strings", embed_literals, "string literals to embed");
  embed->add_flag("--all", embed_all, "embed every vertex");
  embed->add_option("--format", embed_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  CLI::App* verify = app.add_subcommand("verify", "run verification checks");
  add_common(verify, opt);
  verify->add_option("suite", suite, "geodesic, resolve, auto, det, or all")
      ->check(CLI::IsMember({"geodesic", "resolve", "auto", "det", "all"}));

  CLI::App* auto_cmd = app.add_subcommand("auto", "enumerate graph automorphisms");
  add_common(auto_cmd, opt);
  auto_cmd->add_option("--format", auto_format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  CLI::App* dim = app.add_subcommand("dim", "exact metric dimension (small graphs)");
  add_common(dim, opt);
  dim->add_option("--max-size", dim_max_size, "cap on the searched subset size");
  dim->add_option("--format", dim_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* det = app.add_subcommand("det", "exact determining number (small graphs)");
  add_common(det, opt);
  det->add_option("--format", det_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    for (const CLI::App* cmd : {gen, dist, resolve, embed, verify, auto_cmd, dim, det}) {
      opt.max_vertices_set |= cmd->count("--max-vertices") > 0;
    }
    set_thread_count(opt.threads);
    if (app.got_subcommand(gen)) {
      write_output(opt, cmd_gen(opt, gen_format), out);
    } else if (app.got_subcommand(dist)) {
      write_output(opt, cmd_dist(opt, u_literal, v_literal), out);
    } else if (app.got_subcommand(resolve)) {
      write_output(opt, cmd_resolve(opt, resolve_format), out);
    } else if (app.got_subcommand(embed)) {
      write_output(opt, cmd_embed(opt, embed_literals, embed_all, embed_format), out);
    } else if (app.got_subcommand(verify)) {
      const auto [report, ok] = cmd_verify(opt, suite);
      write_output(opt, report, out);
      return ok ? 0 : 1;
    } else if (app.got_subcommand(auto_cmd)) {
      write_output(opt, cmd_auto(opt, auto_format), out);
    } else if (app.got_subcommand(dim)) {
      write_output(opt, cmd_dim(opt, dim_max_size, dim_format), out);
    } else if (app.got_subcommand(det)) {
      write_output(opt, cmd_det(opt, det_format), out);
    }
    return 0;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace levgraph
