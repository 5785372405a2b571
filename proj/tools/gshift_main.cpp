// Command-line front end: enumerate relations at finite scale, decide
// symbolic instances, emit witness traces, and run the verification suite.
//
// Exit codes
//   enumerate: 0 no mismatches, 1 mismatches, 2 validation or budget error
//   decide:    0 true, 3 false, 2 parse or validation error
//   witness:   0 valid trace, 1 trace failed to validate, 2 precondition error
//   verify:    0 all criteria pass, 1 any failure, 2 grid does not fit budget

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gshift/gshift.hpp"

namespace {

using namespace gshift;

struct CommonOpts {
  std::string alphabet = "a,b";
  std::string gamma = "countable";
  std::string relation;
  std::string semigroup;
  std::uint64_t seed = verify::kDefaultSeed;
  std::uint64_t budget = std::uint64_t{1} << 25;
  std::uint64_t bound = 256;
  std::uint64_t depth = 8;
  bool force_depth = false;
  std::string window;
  std::string format = "json";
  std::string out;
};

AlphabetPtr parse_alphabet(const std::string& spec) {
  std::vector<std::string> tokens;
  std::size_t start = 0;
  while (start <= spec.size()) {
    std::size_t comma = spec.find(',', start);
    if (comma == std::string::npos) comma = spec.size();
    tokens.push_back(spec.substr(start, comma - start));
    start = comma + 1;
  }
  return make_alphabet(std::move(tokens));
}

IndexSet parse_gamma(const std::string& spec) {
  if (spec == "countable") return IndexSet::countable();
  try {
    std::size_t used = 0;
    unsigned long long n = std::stoull(spec, &used);
    require(used == spec.size(), Errc::InvalidArgument, "");
    return IndexSet::finite(n);
  } catch (const std::exception&) {
    raise(Errc::InvalidArgument, "--gamma expects a positive size or 'countable'");
  }
}

RelationKind parse_relation(const std::string& spec) {
  if (spec == "P") return RelationKind::P;
  if (spec == "Q") return RelationKind::Q;
  if (spec == "L") return RelationKind::L;
  raise(Errc::InvalidArgument, "--relation expects P, Q or L");
}

SemigroupKind parse_semigroup(const std::string& spec) {
  if (spec == "S") return SemigroupKind::S;
  if (spec == "H") return SemigroupKind::H;
  raise(Errc::InvalidArgument, "--semigroup expects S or H");
}

Window build_window(const CommonOpts& opts, const IndexSet& gamma) {
  std::uint64_t cap = 16;
  if (!opts.window.empty()) {
    std::vector<Index> indices;
    std::size_t start = 0;
    while (start <= opts.window.size()) {
      std::size_t comma = opts.window.find(',', start);
      if (comma == std::string::npos) comma = opts.window.size();
      indices.push_back(std::stoull(opts.window.substr(start, comma - start)));
      start = comma + 1;
    }
    require(opts.force_depth || indices.size() <= cap, Errc::InvalidArgument,
            "window depth capped at 16; pass --force-depth to override");
    Window w = Window::of(std::move(indices));
    w.validate_for(gamma);
    return w;
  }
  require(opts.force_depth || opts.depth <= cap, Errc::InvalidArgument,
          "window depth capped at 16; pass --force-depth to override");
  Window w = Window::prefix(opts.depth);
  w.validate_for(gamma);
  return w;
}

/// Whole-report-at-once output; files go through a rename so no partial
/// report survives a failure.
void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  namespace fs = std::filesystem;
  fs::path target(out_path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) raise(Errc::InvalidArgument, "cannot open output path " + out_path);
    f.write(text.data(), static_cast<std::streamsize>(text.size()));
  }
  fs::rename(tmp, target);
}

int cmd_enumerate(const CommonOpts& opts) {
  IndexSet gamma = parse_gamma(opts.gamma);
  require(gamma.is_finite(), Errc::InvalidArgument, "enumerate needs a finite --gamma");
  require(opts.format == "json" || opts.format == "csv", Errc::InvalidArgument,
          "--format expects json or csv");
  AlphabetPtr alphabet = parse_alphabet(opts.alphabet);
  RelationKind relation = parse_relation(opts.relation);
  SemigroupKind kind = parse_semigroup(opts.semigroup);

  HarnessReport report =
      equivalence_harness(alphabet->size(), gamma.size(), relation, kind, {opts.budget});
  if (opts.format == "csv")
    emit(to_csv(report), opts.out);
  else
    emit(to_json(report).dump(2) + "\n", opts.out);
  return report.mismatches.empty() ? 0 : 1;
}

int cmd_decide(const CommonOpts& opts, const std::string& x_literal,
               const std::string& y_literal) {
  require(opts.format == "json", Errc::InvalidArgument,
          "decide reports are JSON only (the fixed CSV columns describe harness rows)");
  IndexSet gamma = parse_gamma(opts.gamma);
  AlphabetPtr alphabet = parse_alphabet(opts.alphabet);
  RelationKind relation = parse_relation(opts.relation);
  SemigroupKind kind = parse_semigroup(opts.semigroup);
  Config x = parse_config(x_literal, alphabet, gamma);
  Config y = parse_config(y_literal, alphabet, gamma);

  Verdict verdict = decide_for(relation, kind, x, y);
  emit(to_json(verdict, relation, kind, x, y).dump(2) + "\n", opts.out);
  return verdict.value ? 0 : 3;
}

int cmd_witness(const CommonOpts& opts, const std::string& construction_spec,
                const std::string& x_literal, const std::string& y_literal,
                std::optional<Index> beta, const std::string& p_token,
                const std::string& q_token, const std::string& u_literal) {
  require(opts.format == "json", Errc::InvalidArgument, "witness traces are JSON only");
  IndexSet gamma = parse_gamma(opts.gamma);
  AlphabetPtr alphabet = parse_alphabet(opts.alphabet);
  auto construction = construction_from_name(construction_spec);
  require(construction.has_value(), Errc::InvalidArgument,
          "unknown construction '" + construction_spec + "'");
  Config x = parse_config(x_literal, alphabet, gamma);
  Config y = parse_config(y_literal, alphabet, gamma);

  auto symbol_of = [&](const std::string& token, const char* what) {
    auto s = alphabet->find(token);
    require(s.has_value(), Errc::InvalidArgument,
            std::string(what) + " token '" + token + "' not in alphabet");
    return *s;
  };

  WitnessTrace trace;
  switch (*construction) {
    case Construction::ConstantMapWitness: {
      Index index = 0;
      if (beta) {
        index = *beta;
      } else {
        auto hint = decide_P_S(x, y).hint_beta;
        require(hint.has_value(), Errc::NotAnAgreementIndex,
                "points agree nowhere; pass --beta explicitly to see the failure");
        index = *hint;
      }
      trace = witness_P_S(x, y, index);
      break;
    }
    case Construction::PairingDoubleShift:
      trace = witness_Q_infinite(x, y, symbol_of(p_token, "--p"), build_window(opts, gamma),
                                 opts.bound);
      break;
    case Construction::MatchingWitness:
      trace = witness_P_H_countable(x, y, build_window(opts, gamma), opts.bound);
      break;
    case Construction::BlockPartitionWitness:
      trace = witness_P_H_blocks(x, y, build_window(opts, gamma), opts.bound);
      break;
    case Construction::SwapRefutation:
      trace = witness_L_violation(x, y, symbol_of(p_token, "--p"), symbol_of(q_token, "--q"),
                                  build_window(opts, gamma));
      break;
    case Construction::CollapsePair: {
      Config u = parse_config(u_literal, alphabet, gamma);
      trace = collapse_pair_trace(x, y, u, symbol_of(p_token, "--p"), symbol_of(q_token, "--q"));
      break;
    }
  }
  emit(to_json(trace).dump(2) + "\n", opts.out);
  return trace.valid() ? 0 : 1;
}

int cmd_verify(const CommonOpts& opts) {
  require(opts.format == "json" || opts.format == "text", Errc::InvalidArgument,
          "--format expects text or json for verify");
  if (verify::grid_cost_estimate() > opts.budget)
    raise(Errc::BudgetExceeded, "acceptance grid does not fit the requested budget");

  auto results = verify::run_acceptance({opts.seed, opts.budget});
  bool all = true;
  std::string summary;
  Json jcriteria = Json::array();
  for (const auto& r : results) {
    all = all && r.passed;
    summary += std::string(r.passed ? "PASS" : "FAIL") + " " + std::to_string(r.id) + " " +
               r.name + ": " + r.detail + "\n";
    jcriteria.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed},
                         {"detail", r.detail}});
    std::fprintf(stderr, "# criterion %d (%s) took %.3fs\n", r.id, r.name.c_str(), r.seconds);
  }
  summary += std::string(all ? "PASS" : "FAIL") + " overall: " +
             std::to_string(results.size()) + " criteria, seed " + std::to_string(opts.seed) +
             "\n";
  if (opts.format == "json") {
    Json j;
    j["seed"] = opts.seed;
    j["criteria"] = jcriteria;
    j["all_passed"] = all;
    emit(j.dump(2) + "\n", opts.out);
  } else {
    emit(summary, opts.out);
  }
  return all ? 0 : 1;
}

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--alphabet", opts.alphabet, "comma-separated symbol tokens");
  cmd->add_option("--gamma", opts.gamma, "index set: a positive size or 'countable'");
  cmd->add_option("--seed", opts.seed, "campaign seed");
  cmd->add_option("--budget", opts.budget, "shift-application budget");
  cmd->add_option("--bound", opts.bound, "convergence bound for witness reports");
  cmd->add_option("--depth", opts.depth, "window depth (prefix window 0..depth-1)");
  cmd->add_option("--window", opts.window, "explicit window indices, comma-separated");
  cmd->add_flag("--force-depth", opts.force_depth, "lift the depth cap of 16");
  cmd->add_option("--format", opts.format, "output format");
  cmd->add_option("--out", opts.out, "output path (default: stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized-shift proximality toolkit"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string x_literal, y_literal, u_literal, construction;
  std::string p_token, q_token;
  std::optional<Index> beta;

  CLI::App* enumerate = app.add_subcommand("enumerate", "oracle vs decider over a finite grid");
  add_common(enumerate, opts);
  enumerate->add_option("--relation", opts.relation, "P, Q or L")->required();
  enumerate->add_option("--semigroup", opts.semigroup, "S or H")->required();

  CLI::App* decide = app.add_subcommand("decide", "decide one pair from literals");
  add_common(decide, opts);
  decide->add_option("--relation", opts.relation, "P, Q or L")->required();
  decide->add_option("--semigroup", opts.semigroup, "S or H")->required();
  decide->add_option("x", x_literal, "left configuration literal")->required();
  decide->add_option("y", y_literal, "right configuration literal")->required();

  CLI::App* witness = app.add_subcommand("witness", "emit a constructive witness trace");
  add_common(witness, opts);
  witness->add_option("construction", construction,
                      "ConstantMapWitness | PairingDoubleShift | MatchingWitness | "
                      "BlockPartitionWitness | SwapRefutation | CollapsePair")
      ->required();
  witness->add_option("x", x_literal, "left configuration literal")->required();
  witness->add_option("y", y_literal, "right configuration literal")->required();
  witness->add_option("--beta", beta, "agreement index for ConstantMapWitness");
  witness->add_option("--p", p_token, "symbol token (defaults to the first alphabet token)");
  witness->add_option("--q", q_token, "symbol token (defaults to the second alphabet token)");
  witness->add_option("--u", u_literal, "carrier configuration for CollapsePair");

  CLI::App* verify_cmd = app.add_subcommand("verify", "run the full verification suite");
  add_common(verify_cmd, opts);

  CLI11_PARSE(app, argc, argv);

  try {
    if (enumerate->parsed()) return cmd_enumerate(opts);
    if (decide->parsed()) return cmd_decide(opts, x_literal, y_literal);
    if (witness->parsed()) {
      AlphabetPtr alphabet = parse_alphabet(opts.alphabet);
      if (p_token.empty()) p_token = alphabet->token(0);
      if (q_token.empty()) q_token = alphabet->token(1);
      if (u_literal.empty())
        u_literal = parse_gamma(opts.gamma).is_finite()
                        ? print_config(Config::constant(alphabet, parse_gamma(opts.gamma), 0))
                        : "default=" + alphabet->token(0);
      return cmd_witness(opts, construction, x_literal, y_literal, beta, p_token, q_token,
                         u_literal);
    }
    if (verify_cmd->parsed()) {
      if (verify_cmd->count("--format") == 0) opts.format = "text";
      return cmd_verify(opts);
    }
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
