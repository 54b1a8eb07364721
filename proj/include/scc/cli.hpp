#pragma once

// Command-line front door. Five subcommands: eval (run a rule on a profile
// file), construct (emit a verified witness), range (exhaustive range
// report), verify (the whole claim checklist), min-gauge (minimal approval
// gauge search). Exit codes: 0 success, 1 verification failure, 2 usage
// error, 3 infeasible construction, 4 self-check failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "scc/constructions.hpp"
#include "scc/core.hpp"
#include "scc/oracle.hpp"
#include "scc/rules.hpp"

namespace scc::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInfeasible = 3;
inline constexpr int kExitSelfCheck = 4;

namespace detail {

inline std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      out.push_back(v);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string(what) + ": '" + token +
                                  "' is not an integer");
    }
  }
  if (out.empty())
    throw std::invalid_argument(std::string(what) + ": empty list");
  return out;
}

inline AltSet parse_set(const std::string& text) {
  AltSet s;
  for (int v : parse_int_list(text, "--set")) {
    if (v < 0 || v >= kMaxAlternatives)
      throw std::invalid_argument("--set: id " + std::to_string(v) + " out of range");
    if (s.contains(v))
      throw std::invalid_argument("--set: duplicate id " + std::to_string(v));
    s.insert(v);
  }
  return s;
}

inline std::string read_profile_text(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file)
    throw std::invalid_argument("--profile: cannot open '" + path + "'");
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

inline std::string render_scores(const std::vector<int>& scores) {
  std::string out = "(";
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(scores[i]);
  }
  return out + ")";
}

inline nlohmann::ordered_json json_ids(AltSet s) {
  return nlohmann::ordered_json(s.ids());
}

/// Rule-specific score vector and its display label; rules without a score
/// notion return nothing.
inline std::optional<std::pair<std::string, std::vector<int>>> scores_for(
    Rule rule, const Profile& u, const IndexVector& ballots) {
  switch (rule) {
    case Rule::Maximin: return {{"worst_ranks", maximin_worst_ranks(u)}};
    case Rule::Borda: return {{"scores", borda_scores(u)}};
    case Rule::Plurality: return {{"counts", plurality_counts(u)}};
    case Rule::Copeland: return {{"scores", copeland_scores(u)}};
    case Rule::Approval: return {{"scores", approval_scores(u, ballots)}};
    default: return std::nullopt;
  }
}

struct ConstructResult {
  Profile profile;
  std::optional<IndexVector> ballots;
};

/// Permutation sending the sorted members of `from` onto the sorted members
/// of `to` and the sorted non-members onto the sorted non-members.
inline std::vector<int> match_sets_permutation(int m, AltSet from, AltSet to) {
  std::vector<int> perm(static_cast<std::size_t>(m), -1);
  const std::vector<Alt> from_in = from.ids(), to_in = to.ids();
  for (std::size_t i = 0; i < from_in.size(); ++i)
    perm[static_cast<std::size_t>(from_in[i])] = to_in[i];
  std::vector<Alt> from_out, to_out;
  for (Alt x = 0; x < m; ++x) {
    if (!from.contains(x)) from_out.push_back(x);
    if (!to.contains(x)) to_out.push_back(x);
  }
  for (std::size_t i = 0; i < from_out.size(); ++i)
    perm[static_cast<std::size_t>(from_out[i])] = to_out[i];
  return perm;
}

/// Build a witness for the requested rule and target (a set, or a bare
/// size). Size requests on set-parameterized builders use {0..k-1}; set
/// requests on size-parameterized builders (copeland, maximin) build
/// natively and then relabel the achieved choice set onto the target.
inline ConstructResult run_construct(Rule rule, int m, int n,
                                     std::optional<AltSet> set, std::optional<int> size) {
  const bool by_size = size.has_value();
  if (by_size && (*size < 1 || *size > m))
    throw std::invalid_argument("--size must be in [1, m]");

  if (rule == Rule::Copeland || rule == Rule::Maximin) {
    const int k = by_size ? *size : set->size();
    Profile u = rule == Rule::Copeland ? construct_copeland(m, n, k)
                                       : construct_maximin(m, n, k);
    if (!by_size) {
      const AltSet choice = evaluate(rule, u);
      if (choice.size() != k)
        throw std::logic_error("witness choice set has the wrong size");
      u = relabel_alternatives(u, match_sets_permutation(m, choice, *set));
    }
    return ConstructResult{std::move(u), std::nullopt};
  }

  AltSet target;
  if (by_size) {
    for (Alt x = 0; x < *size; ++x) target.insert(x);
  } else {
    target = *set;
  }
  switch (rule) {
    case Rule::Pareto:
      return ConstructResult{construct_pareto(m, n, target), std::nullopt};
    case Rule::Borda:
      return ConstructResult{construct_borda(m, n, target), std::nullopt};
    case Rule::Plurality:
      return ConstructResult{construct_plurality(m, n, target), std::nullopt};
    case Rule::TopCycle:
      return ConstructResult{construct_top_cycle(m, n, target), std::nullopt};
    case Rule::Approval: {
      ApprovalWitness w = construct_approval(m, n, target);
      return ConstructResult{std::move(w.profile), std::move(w.ballots)};
    }
    default:
      throw std::invalid_argument("no witness construction exists for rule '" +
                                  to_string(rule) + "'");
  }
}

}  // namespace detail

/// Run one CLI invocation. args excludes the program name. All normal
/// output goes to `out`, diagnostics to `err`, profile data for
/// `--profile -` is read from `in`.
inline int execute(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err, std::istream& in = std::cin) {
  CLI::App app{"Voting-rule evaluation, witness construction, and exhaustive "
               "range verification for ranked-ballot profiles"};
  app.name("scc-range");
  app.require_subcommand(1);

  std::string rule_name, profile_path, ballots_text, set_text, mode_name = "anonymous";
  std::string format = "text";
  int m = 0, n = 0, size = 0, m_max = 5, n_max = 6;
  bool override_guards = false;

  CLI::App* eval = app.add_subcommand("eval", "Evaluate a rule on a profile file");
  eval->add_option("--rule", rule_name, "Rule name")->required();
  eval->add_option("--profile", profile_path, "Profile file path, or - for stdin")
      ->required();
  eval->add_option("--ballots", ballots_text,
                   "Approval ballot indices, comma-separated, one per individual");
  eval->add_option("--format", format, "Output format: text or json");

  CLI::App* construct =
      app.add_subcommand("construct", "Emit a witness profile for a target choice set");
  construct->add_option("--rule", rule_name, "Rule name")->required();
  construct->add_option("-m", m, "Number of alternatives")->required();
  construct->add_option("-n", n, "Number of individuals")->required();
  CLI::Option* c_set =
      construct->add_option("--set", set_text, "Target choice set, e.g. 0,2,4");
  construct->add_option("--size", size, "Target choice-set size")->excludes(c_set);
  construct->add_option("--format", format, "Output format: text or json");

  CLI::App* range = app.add_subcommand("range", "Enumerate the achievable choice sets");
  range->add_option("--rule", rule_name, "Rule name")->required();
  range->add_option("-m", m, "Number of alternatives")->required();
  range->add_option("-n", n, "Number of individuals")->required();
  range->add_option("--mode", mode_name, "Enumeration mode: full or anonymous");
  range->add_option("--format", format, "Output format: text or json");
  range->add_flag("--override-guards", override_guards, "Ignore practical size guards");

  CLI::App* verify = app.add_subcommand("verify", "Run the verification checklist");
  verify->add_option("--m-max", m_max, "Cap on m for enumeration-backed checks");
  verify->add_option("--n-max", n_max, "Cap on n for enumeration-backed checks");
  verify->add_option("--format", format, "Output format: text or json");
  verify->add_flag("--override-guards", override_guards, "Ignore practical size guards");

  CLI::App* min_gauge_cmd =
      app.add_subcommand("min-gauge", "Search the minimal approval gauge for a set");
  min_gauge_cmd->add_option("-m", m, "Number of alternatives")->required();
  min_gauge_cmd->add_option("-n", n, "Number of individuals")->required();
  CLI::Option* g_set =
      min_gauge_cmd->add_option("--set", set_text, "Target choice set, e.g. 0,2,4");
  min_gauge_cmd->add_option("--size", size, "Target choice-set size")->excludes(g_set);
  min_gauge_cmd->add_flag("--override-guards", override_guards,
                          "Ignore practical size guards");
  min_gauge_cmd->add_option("--format", format, "Output format: text or json");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitSuccess : kExitUsage;
  }

  try {
    if (format != "text" && format != "json")
      throw std::invalid_argument("--format must be 'text' or 'json'");
    const bool json = format == "json";

    if (eval->parsed()) {
      const Rule rule = parse_rule(rule_name);
      const Profile u = codec_parse(detail::read_profile_text(profile_path, in));
      IndexVector ballots;
      if (!ballots_text.empty())
        ballots = detail::parse_int_list(ballots_text, "--ballots");
      if (rule == Rule::Approval && ballots.empty())
        throw std::invalid_argument("approval needs --ballots");
      const AltSet choice = evaluate(rule, u, ballots);
      const auto scores = detail::scores_for(rule, u, ballots);
      if (json) {
        nlohmann::ordered_json j;
        j["rule"] = to_string(rule);
        j["m"] = u.m();
        j["n"] = u.n();
        j["choice"] = detail::json_ids(choice);
        if (scores) j[scores->first] = scores->second;
        if (rule == Rule::Plurality) j["plurality_number"] = plurality_number(u);
        out << j.dump(2) << "\n";
      } else {
        out << "choice: " << to_string(choice) << "\n";
        if (scores)
          out << scores->first << ": " << detail::render_scores(scores->second) << "\n";
        if (rule == Rule::Plurality)
          out << "plurality_number: " << plurality_number(u) << "\n";
      }
      return kExitSuccess;
    }

    if (construct->parsed()) {
      const Rule rule = parse_rule(rule_name);
      const bool has_set = c_set->count() > 0;
      const bool has_size = construct->count("--size") > 0;
      if (has_set == has_size)
        throw std::invalid_argument("construct needs exactly one of --set or --size");
      std::optional<AltSet> target_set;
      std::optional<int> target_size;
      if (has_set) target_set = detail::parse_set(set_text);
      else target_size = size;

      detail::ConstructResult result =
          detail::run_construct(rule, m, n, target_set, target_size);
      const AltSet choice = result.ballots
                                ? approval_choice(result.profile, *result.ballots)
                                : evaluate(rule, result.profile);
      const bool self_check_ok =
          has_set ? choice == *target_set
                  : (rule == Rule::Copeland ? choice.size() == *target_size
                                            : choice == AltSet::full(*target_size));
      if (!self_check_ok) {
        err << "self-check failed: witness evaluates to " << to_string(choice) << "\n";
        return kExitSelfCheck;
      }
      if (json) {
        nlohmann::ordered_json j;
        j["rule"] = to_string(rule);
        j["m"] = m;
        j["n"] = n;
        if (has_set) j["set"] = detail::json_ids(*target_set);
        else j["size"] = *target_size;
        j["profile"] = codec_emit(result.profile);
        if (result.ballots) j["ballots"] = *result.ballots;
        j["choice"] = detail::json_ids(choice);
        out << j.dump(2) << "\n";
      } else {
        out << codec_emit(result.profile);
        if (result.ballots) {
          out << "ballots: ";
          for (std::size_t i = 0; i < result.ballots->size(); ++i)
            out << (i ? "," : "") << (*result.ballots)[i];
          out << "\n";
        }
      }
      return kExitSuccess;
    }

    if (range->parsed()) {
      const Rule rule = parse_rule(rule_name);
      const oracle::Mode mode = oracle::parse_mode(mode_name);
      const oracle::RangeReport report =
          oracle::range_report(rule, m, n, mode, override_guards);
      if (json) {
        out << oracle::range_report_to_json(report).dump(2) << "\n";
      } else {
        out << "rule: " << to_string(report.rule) << "\n";
        out << "m: " << report.m << "\n";
        out << "n: " << report.n << "\n";
        out << "mode: " << oracle::to_string(report.mode) << "\n";
        out << "sizes:";
        for (int s : report.sizes) out << " " << s;
        out << "\n";
        out << "achievable sets: " << report.witnesses.size() << "\n";
        for (const auto& [mask, witness] : report.witnesses) {
          out << "set " << to_string(AltSet(mask)) << " witness\n";
          std::istringstream lines(codec_emit(witness));
          std::string line;
          while (std::getline(lines, line)) out << "  " << line << "\n";
        }
      }
      return kExitSuccess;
    }

    if (verify->parsed()) {
      const oracle::ClaimReport report =
          oracle::verify_claims(m_max, n_max, override_guards);
      if (json) {
        out << oracle::claim_report_to_json(report).dump(2) << "\n";
      } else {
        for (const oracle::Claim& c : report.claims)
          out << (c.pass ? "[PASS] " : "[FAIL] ") << "criterion " << c.criterion
              << " " << c.name << " (" << c.params << "): expected " << c.expected
              << ", observed " << c.observed << "\n";
        out << report.passed() << "/" << report.claims.size() << " claims pass\n";
      }
      return report.all_pass() ? kExitSuccess : kExitVerificationFailure;
    }

    if (min_gauge_cmd->parsed()) {
      const bool has_set = g_set->count() > 0;
      const bool has_size = min_gauge_cmd->count("--size") > 0;
      if (has_set == has_size)
        throw std::invalid_argument("min-gauge needs exactly one of --set or --size");
      AltSet target;
      if (has_set) {
        target = detail::parse_set(set_text);
      } else {
        if (size < 1 || size > m)
          throw std::invalid_argument("--size must be in [1, m]");
        for (Alt x = 0; x < size; ++x) target.insert(x);
      }
      const int g = oracle::min_gauge(m, n, target, override_guards);
      if (json) {
        nlohmann::ordered_json j;
        j["m"] = m;
        j["n"] = n;
        j["set"] = detail::json_ids(target);
        j["min_gauge"] = g;
        out << j.dump(2) << "\n";
      } else {
        out << "min gauge: " << g << "\n";
      }
      return kExitSuccess;
    }

    throw std::invalid_argument("no subcommand given");
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const GuardError& e) {
    err << "guard: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    err << "self-check failure: " << e.what() << "\n";
    return kExitSelfCheck;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace scc::cli
