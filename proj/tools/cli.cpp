// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "dmkit/io.hpp"
#include "dmkit/oracle.hpp"
#include "dmkit/repsets.hpp"
#include "dmkit/sparsifier.hpp"

namespace dmkit::cli {
namespace {

constexpr std::size_t kMaxQ = 3;

struct Globals {
  std::string seed_text;
  unsigned field_bits = 64;
  std::string output;
};

struct Context {
  std::uint64_t seed = 1;
  FieldCtx field = FieldCtx::make(64);
  std::string output;
  std::ostream* out = nullptr;
};

std::uint64_t parse_seed(const std::string& text, const char* source) {
  std::uint64_t v = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw FormatError(std::string("invalid seed from ") + source + ": '" + text + "'");
  }
  return v;
}

LabelSet parse_set(const std::string& text) {
  LabelSet out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    const auto e = item.find_last_not_of(" \t");
    out.insert(item.substr(b, e - b + 1));
  }
  return out;
}

Json meta(const Context& ctx, const std::string& command) {
  return Json{{"command", command}, {"seed", ctx.seed}, {"field_bits", ctx.field.bits()}};
}

void emit(const Context& ctx, const Json& j) {
  if (ctx.output.empty()) {
    *ctx.out << j.dump(2) << '\n';
  } else {
    write_json_file(ctx.output, j);
  }
}

Json graph_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return Json{{"vertices", g.vertices()}, {"edges", std::move(edges)}};
}

// ---- sparsify -------------------------------------------------------------

struct SparsifyArgs {
  std::string input;
  std::string mode = "mader";
  bool verify = false;
  std::string report;
  std::optional<std::size_t> rounds;
};

struct SparsifyRun {
  MaderNetwork network;
  SparsifyReport report;
};

SparsifyRun sparsify_once(const MaderNetwork& net, const SparsifyArgs& a, const FieldCtx& f,
                          std::uint64_t seed) {
  SparsifyOptions opts;
  opts.seed = seed;
  opts.rounds = a.rounds;
  if (a.mode == "mader") {
    auto [out, report] = sparsify(net, f, opts);
    return {std::move(out), std::move(report)};
  }
  auto [g, report] = a.mode == "multicut" ? multicut_sparsifier(net.graph, net.terminals(), f, opts)
                                          : sparsify_all_partitions(net.graph, net.terminals(), f, opts);
  return {MaderNetwork{std::move(g), net.partition}, std::move(report)};
}

// Null when the output passes.
Json verify_run(const MaderNetwork& in, const SparsifyRun& run, const std::string& mode) {
  if (mode == "mader") {
    const MimicResult r = check_mimicking(in, run.network);
    if (r.ok) return nullptr;
    return Json{{"subset", to_json(*r.witness)},
                {"matchable_in_input", r.matchable_in_a},
                {"matchable_in_output", r.matchable_in_b}};
  }
  for (const auto& partition : set_partitions(in.terminals())) {
    const MaderNetwork a{in.graph, partition};
    const MaderNetwork b{run.network.graph, partition};
    const std::size_t nu_in = packing_number(a);
    const std::size_t nu_out = packing_number(b);
    if (nu_in != nu_out) {
      Json blocks = Json::array();
      for (const auto& blk : partition) blocks.push_back(to_json(blk));
      return Json{{"partition", std::move(blocks)}, {"nu_input", nu_in}, {"nu_output", nu_out}};
    }
  }
  return nullptr;
}

int cmd_sparsify(const Context& ctx, const SparsifyArgs& a) {
  const MaderNetwork net = network_from_json(read_json_file(a.input));
  SparsifyRun run = sparsify_once(net, a, ctx.field, ctx.seed);
  Json verification;
  bool passed = true;
  if (a.verify) {
    Json attempts = Json::array();
    std::uint64_t seed = ctx.seed;
    Json failure = verify_run(net, run, a.mode);
    attempts.push_back({{"seed", seed}, {"passed", failure.is_null()}, {"failure", failure}});
    if (!failure.is_null()) {
      // A failure may be an unlucky draw; retry once with a fresh seed.
      seed = ctx.seed + 1;
      run = sparsify_once(net, a, ctx.field, seed);
      failure = verify_run(net, run, a.mode);
      attempts.push_back({{"seed", seed}, {"passed", failure.is_null()}, {"failure", failure}});
    }
    passed = failure.is_null();
    verification = Json{{"passed", passed}, {"attempts", std::move(attempts)}};
  }
  Json report = to_json(run.report);
  report["mode"] = a.mode;
  if (a.verify) report["verification"] = verification;
  Json result = to_json(run.network);
  result["report"] = report;
  result["meta"] = meta(ctx, "sparsify");
  emit(ctx, result);
  if (!a.report.empty()) write_json_file(a.report, Json{{"report", report}, {"meta", result["meta"]}});
  return passed ? kOk : kVerificationFailed;
}

// ---- repset ---------------------------------------------------------------

struct RepsetArgs {
  std::string input;
  std::string mode;
  std::string family;
  std::optional<std::string> terminals;
  std::optional<std::size_t> q;
};

int cmd_repset(Context ctx, const RepsetArgs& a) {
  const Json in = read_json_file(a.input);
  QSetFamily fam;
  if (!a.family.empty()) {
    fam = family_from_json(read_json_file(a.family));
  } else if (in.is_object() && in.contains("family")) {
    fam = family_from_json(in["family"]);
  } else {
    throw FormatError("no family given (use --family or an instance bundle)");
  }
  if (a.q && *a.q != fam.q) {
    throw FormatError("--q " + std::to_string(*a.q) + " does not match the family's q = " +
                      std::to_string(fam.q));
  }
  if (fam.q > kMaxQ) {
    throw MonomialBoundError("q = " + std::to_string(fam.q) + " exceeds the supported maximum of " +
                             std::to_string(kMaxQ));
  }

  RepresentativeSet rep;
  Json extra = Json::object();
  if (a.mode == "matroid") {
    const LinearMatrix m = linear_matrix_from_json(in.contains("matrix") ? in["matrix"] : in);
    ctx.field = m.ctx;
    rep = matroid_representative_set(m, fam);
  } else {
    const DeltaMatroid d = delta_matroid_from_json(in.contains("delta_matroid") ? in["delta_matroid"] : in);
    ctx.field = d.matrix().ctx();
    LabelSet t;
    if (a.terminals) {
      t = parse_set(*a.terminals);
    } else if (in.contains("terminals")) {
      t = label_set_from_json(in["terminals"]);
    } else {
      throw FormatError("no terminals given (use --terminals or an instance bundle)");
    }
    rep = a.mode == "dm-rank" ? dm_repset_rank(d, t, fam) : dm_repset_cardinality(d, t, fam);
    extra["terminals"] = to_json(t);
    if (a.mode == "dm-rank") extra["rank"] = rank_of(d, t);
  }
  Json result{{"mode", a.mode},
              {"q", fam.q},
              {"retained", to_json(rep.retained)},
              {"indices", rep.indices},
              {"size", rep.retained.sets.size()},
              {"input_size", fam.sets.size()},
              {"bound", rep.bound},
              {"arity", rep.arity},
              {"degree", rep.degree}};
  result.update(extra);
  result["meta"] = meta(ctx, "repset");
  emit(ctx, result);
  return kOk;
}

// ---- oracle ---------------------------------------------------------------

struct OracleArgs {
  std::string input;
  std::string other;
  std::string set;
};

Json packing_json(const std::optional<PathPacking>& p) {
  return p ? to_json(*p) : Json(nullptr);
}

int cmd_oracle(const Context& ctx, const std::string& which, const OracleArgs& a) {
  const MaderNetwork net = network_from_json(read_json_file(a.input));
  Json result{{"query", which}};
  int code = kOk;
  if (which == "matchable") {
    const LabelSet s = parse_set(a.set);
    const auto p = find_mader_packing(net, s);
    result["set"] = to_json(s);
    result["matchable"] = p.has_value();
    result["packing"] = packing_json(p);
  } else if (which == "nu") {
    const PathPacking p = max_mader_packing(net);
    result["nu"] = p.size();
    result["packing"] = to_json(p);
  } else if (which == "deficiency") {
    const LabelSet s = parse_set(a.set);
    result["set"] = to_json(s);
    result["deficiency"] = deficiency(net, s);
  } else if (which == "multiway-cut") {
    const LabelSet cut = min_vertex_multiway_cut_set(net);
    result["size"] = cut.size();
    result["cut"] = to_json(cut);
  } else {
    const MaderNetwork other = network_from_json(read_json_file(a.other));
    const MimicResult r = check_mimicking(net, other);
    result["ok"] = r.ok;
    result["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
    if (r.witness) {
      result["matchable_in_first"] = r.matchable_in_a;
      result["matchable_in_second"] = r.matchable_in_b;
    }
    if (!r.ok) code = kVerificationFailed;
  }
  result["meta"] = meta(ctx, "oracle");
  emit(ctx, result);
  return code;
}

// ---- gen ------------------------------------------------------------------

struct GenArgs {
  std::string family;
  std::size_t k = 2;
  std::size_t q = 1;
  std::size_t n = 10;
  std::optional<std::size_t> blocks;
  double p = 0.3;
};

Json bundle(const RepsetInstance& inst) {
  return Json{{"graph", graph_json(inst.graph)},
              {"delta_matroid", to_json(inst.dm)},
              {"terminals", to_json(inst.terminals)},
              {"family", to_json(inst.family)}};
}

int cmd_gen(const Context& ctx, const GenArgs& a) {
  Rng rng(ctx.seed);
  Json result;
  if (a.family == "lb-repairs") {
    result = bundle(gen_lb_repairs(a.k, a.q, ctx.field, rng));
  } else if (a.family == "lb-extends") {
    result = bundle(gen_lb_extends(a.k, a.q, ctx.field, rng));
  } else if (a.family == "k4-pendants") {
    result = to_json(k4_pendants());
  } else {
    if (!(a.p >= 0.0 && a.p <= 1.0)) throw FormatError("--p must lie in [0, 1]");
    const std::size_t blocks = a.blocks.value_or(std::min<std::size_t>(a.k, 2));
    result = to_json(random_network(a.n, a.k, blocks, a.p, rng));
  }
  result["meta"] = meta(ctx, "gen " + a.family);
  emit(ctx, result);
  return kOk;
}

// ---- dispatch -------------------------------------------------------------

// Inside sparsify every guard counts as internal, whatever raised it.
int guarded(const std::function<int()>& body, bool guards_internal, std::ostream& err) {
  try {
    return body();
  } catch (const GuardError& e) {
    if (!guards_internal) throw;
    err << "dmkit: guard: " << e.what() << '\n';
    return kInternalGuard;
  }
}

int mapped(const std::function<int()>& body, bool guards_internal, std::ostream& err) {
  try {
    return guarded(body, guards_internal, err);
  } catch (const OracleSizeError& e) {
    err << "dmkit: oracle size guard: " << e.what() << '\n';
    return kOracleSize;
  } catch (const MonomialBoundError& e) {
    err << "dmkit: monomial bound: " << e.what() << '\n';
    return kMonomialBound;
  } catch (const GuardError& e) {
    err << "dmkit: guard: " << e.what() << '\n';
    return kInternalGuard;
  } catch (const std::invalid_argument& e) {
    err << "dmkit: invalid input: " << e.what() << '\n';
    return kMalformedInput;
  } catch (const std::exception& e) {
    err << "dmkit: internal error: " << e.what() << '\n';
    return kInternalGuard;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Delta-matroid representations, representative sets and terminal sparsifiers",
               "dmkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed_text, "Random seed (default: $DMKIT_SEED, then 1)");
  app.add_option("--field-bits", g.field_bits, "Field size 2^l for random constructions")
      ->check(CLI::IsMember({8u, 16u, 32u, 64u}));
  app.add_option("--output,-o", g.output, "Write the JSON result here instead of stdout");

  SparsifyArgs sp;
  auto* sparsify_cmd = app.add_subcommand("sparsify", "Shrink a terminal network");
  sparsify_cmd->add_option("network", sp.input, "MaderNetwork JSON")->required();
  sparsify_cmd->add_option("--mode", sp.mode)
      ->check(CLI::IsMember({"mader", "all-partitions", "multicut"}));
  sparsify_cmd->add_flag("--verify", sp.verify, "Check the output against the exact oracles");
  sparsify_cmd->add_option("--report", sp.report, "Also write the report to this file");
  sparsify_cmd->add_option("--rounds", sp.rounds, "Marking rounds per pass");

  RepsetArgs rp;
  auto* repset_cmd = app.add_subcommand("repset", "Compute a representative subfamily");
  repset_cmd->add_option("input", rp.input, "Matrix, delta-matroid or instance bundle")->required();
  repset_cmd->add_option("--mode", rp.mode)
      ->required()
      ->check(CLI::IsMember({"matroid", "dm-card", "dm-rank"}));
  repset_cmd->add_option("--family", rp.family, "Family JSON");
  repset_cmd->add_option("--terminals", rp.terminals, "Comma-separated terminal labels");
  repset_cmd->add_option("--q", rp.q, "Expected set size");

  OracleArgs oa;
  std::string oracle_which;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exact brute-force queries");
  oracle_cmd->require_subcommand(1);
  for (const char* name : {"matchable", "nu", "deficiency", "multiway-cut", "check-mimic"}) {
    auto* sub = oracle_cmd->add_subcommand(name);
    sub->add_option("network", oa.input, "MaderNetwork JSON")->required();
    if (std::string(name) == "check-mimic") {
      sub->add_option("other", oa.other, "Second MaderNetwork JSON")->required();
    }
    if (std::string(name) == "matchable" || std::string(name) == "deficiency") {
      sub->add_option("--set", oa.set, "Comma-separated terminal labels")->required();
    }
    sub->callback([&oracle_which, name] { oracle_which = name; });
  }

  GenArgs ga;
  auto* gen_cmd = app.add_subcommand("gen", "Generate instances");
  gen_cmd->add_option("family", ga.family)
      ->required()
      ->check(CLI::IsMember({"lb-repairs", "lb-extends", "random", "k4-pendants"}));
  gen_cmd->add_option("--k", ga.k, "Terminal count");
  gen_cmd->add_option("--q", ga.q, "Set size");
  gen_cmd->add_option("--n", ga.n, "Vertex count (random)");
  gen_cmd->add_option("--blocks", ga.blocks, "Partition block count (random)");
  gen_cmd->add_option("--p", ga.p, "Edge probability (random)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "dmkit: " << e.what() << '\n';
    return kMalformedInput;
  }

  return mapped(
      [&]() -> int {
        Context ctx;
        ctx.out = &out;
        ctx.output = g.output;
        ctx.field = FieldCtx::make(g.field_bits);
        if (!g.seed_text.empty()) {
          ctx.seed = parse_seed(g.seed_text, "--seed");
        } else if (const char* env = std::getenv("DMKIT_SEED"); env != nullptr && *env != '\0') {
          ctx.seed = parse_seed(env, "DMKIT_SEED");
        }
        if (sparsify_cmd->parsed()) return cmd_sparsify(ctx, sp);
        if (repset_cmd->parsed()) return cmd_repset(ctx, rp);
        if (oracle_cmd->parsed()) return cmd_oracle(ctx, oracle_which, oa);
        return cmd_gen(ctx, ga);
      },
      sparsify_cmd->parsed(), err);
}

}  // namespace dmkit::cli
