#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "argex/errors.hpp"
#include "argex/explain.hpp"
#include "argex/io.hpp"
#include "argex/necsuff.hpp"
#include "argex/oracle.hpp"
#include "argex/relations.hpp"
#include "argex/semantics.hpp"

namespace argex::cli {
namespace {

using Json = nlohmann::ordered_json;

class UsageError : public Error {
 public:
  using Error::Error;
};

class InputError : public Error {
 public:
  using Error::Error;
};

struct Options {
  std::string file;
  std::string format;
  std::string out = "text";
  std::string arg;
  std::string semantics;
  std::string strategy;
  std::string mode;
  std::string depth;
  std::string minimal;
  std::string pick;
  bool strict = false;
  std::string from, to;
  std::string property = "all";
  std::size_t count = 100;
  std::size_t n = 7;
  std::vector<double> probs;
  std::uint64_t seed = 1;
  bool self_attacks = false;
  std::string render_to = "apx";
};

Framework load(const Options& o, std::istream& in) {
  std::optional<InputFormat> format;
  if (!o.format.empty()) {
    format = input_format_from_name(o.format);
    if (!format) throw UsageError("unknown input format '" + o.format + "'");
  } else {
    format = input_format_from_path(o.file);
    if (!format) throw UsageError("cannot infer the input format of '" + o.file + "'; use --format");
  }
  if (o.file == "-") return parse_framework(in, *format);
  std::ifstream file(o.file);
  if (!file) throw InputError("cannot read '" + o.file + "'");
  return parse_framework(file, *format);
}

SemanticsKind semantics_of(const std::string& name) {
  if (auto s = semantics_from_name(name)) return *s;
  throw UsageError("unknown semantics '" + name + "'");
}

Strategy strategy_of(const std::string& name) {
  if (auto s = strategy_from_name(name)) return *s;
  throw UsageError("unknown strategy '" + name + "'");
}

QueryMode mode_of(const std::string& name) {
  if (name == "acc") return QueryMode::acceptance;
  if (name == "nonacc") return QueryMode::non_acceptance;
  throw UsageError("unknown mode '" + name + "'");
}

std::optional<MinimalityOrder> order_of(const std::string& name) {
  if (name.empty()) return std::nullopt;
  if (name == "card") return MinimalityOrder::cardinality;
  if (name == "set") return MinimalityOrder::set_inclusion;
  throw UsageError("unknown minimality order '" + name + "'");
}

NecSuffOptions necsuff_options() {
  NecSuffOptions options;
  if (const char* cap = std::getenv("ARGEX_SUBSET_CAP")) {
    try {
      options.subset_cap = std::stoul(cap);
    } catch (const std::exception&) {
      throw UsageError("ARGEX_SUBSET_CAP must be a non-negative integer");
    }
  }
  return options;
}

Json set_json(const Framework& fw, const ArgSet& s) { return fw.names_of(s); }

Json family_json(const Framework& fw, const SetFamily& family) {
  Json j = Json::array();
  for (const auto& s : family) j.push_back(set_json(fw, s));
  return j;
}

class Printer {
 public:
  Printer(const Options& o, std::ostream& out) : json_(o.out == "json"), out_(out) {
    if (o.out != "text" && o.out != "json") throw UsageError("unknown output '" + o.out + "'");
  }

  bool json() const { return json_; }

  void emit(const Json& query, const Json& result, std::optional<bool> independent,
            const std::string& text) {
    if (!json_) {
      out_ << text;
      return;
    }
    Json j;
    j["query"] = query;
    j["result"] = result;
    if (independent) j["semantics_independent"] = *independent;
    out_ << j.dump(2) << "\n";
  }

 private:
  bool json_;
  std::ostream& out_;
};

std::string family_text(const Framework& fw, const SetFamily& family) {
  std::string text;
  for (const auto& s : family) text += fw.format(s) + "\n";
  return text;
}

int cmd_extensions(const Options& o, std::istream& in, std::ostream& out) {
  Printer p(o, out);
  const auto sem = semantics_of(o.semantics);
  const Framework fw = load(o, in);
  const SetFamily family = enumerate_extensions(fw, sem);
  p.emit({{"command", "extensions"}, {"semantics", to_string(sem)}}, family_json(fw, family),
         std::nullopt, family_text(fw, family));
  return kOk;
}

int cmd_status(const Options& o, std::istream& in, std::ostream& out) {
  Printer p(o, out);
  const auto sem = semantics_of(o.semantics);
  const auto strategy = strategy_of(o.strategy);
  const Framework fw = load(o, in);
  const auto status = acceptance_status(fw, sem, strategy, fw.index_of(o.arg));
  p.emit({{"command", "status"},
          {"arg", o.arg},
          {"semantics", to_string(sem)},
          {"strategy", to_string(strategy)}},
         to_string(status), std::nullopt, std::string(to_string(status)) + "\n");
  return kOk;
}

int cmd_explain(const Options& o, std::istream& in, std::ostream& out) {
  Printer p(o, out);
  const auto sem = semantics_of(o.semantics);
  const auto strategy = strategy_of(o.strategy);
  const auto mode = mode_of(o.mode);
  const std::string depth_name =
      o.depth.empty() ? (mode == QueryMode::acceptance ? "defby" : "notdef") : o.depth;
  const auto depth = depth_from_name(depth_name);
  if (!depth) throw UsageError("unknown depth '" + depth_name + "'");
  if (!depth_allowed(mode, *depth))
    throw UsageError("depth '" + depth_name + "' does not apply to mode '" + o.mode + "'");
  const auto order = order_of(o.minimal);
  if (!o.pick.empty() && o.pick != "first") throw UsageError("--pick accepts only 'first'");

  const Framework fw = load(o, in);
  const ArgIndex a = fw.index_of(o.arg);
  const NecSuffOptions options = necsuff_options();

  Json query{{"command", "explain"},
             {"arg", o.arg},
             {"semantics", to_string(sem)},
             {"strategy", to_string(strategy)},
             {"mode", o.mode},
             {"depth", depth_name}};
  if (order) query["minimal"] = o.minimal;
  if (!o.pick.empty()) query["pick"] = o.pick;

  std::string kind;
  SetFamily family;
  bool independent = false;
  if (order) {
    family = minimal_explanation(fw, sem, strategy, a, *depth, *order, mode, options);
    kind = "candidates";
    independent = *depth != DepthKind::def_by && *depth != DepthKind::not_def &&
                  *depth != DepthKind::nec_not;
  } else {
    const ExplanationResult r = mode == QueryMode::acceptance
                                    ? acc_explanation(fw, sem, strategy, a, *depth, options)
                                    : not_acc_explanation(fw, sem, strategy, a, *depth, options);
    family = r.family;
    kind = r.kind == ResultKind::single ? "single" : "candidates";
    independent = r.semantics_independent;
  }
  if (!o.pick.empty() && family.size() > 1) family.resize(1);

  p.emit(query, {{"kind", kind}, {"sets", family_json(fw, family)}}, independent,
         family_text(fw, family));
  return kOk;
}

int cmd_sufficient(const Options& o, std::istream& in, std::ostream& out) {
  Printer p(o, out);
  const auto mode = mode_of(o.mode);
  if (o.strict && mode != QueryMode::acceptance)
    throw UsageError("--strict applies only to --mode acc");
  const auto order = order_of(o.minimal);
  const Framework fw = load(o, in);
  const ArgIndex a = fw.index_of(o.arg);
  const NecSuffOptions options = necsuff_options();

  SetFamily family;
  if (order)
    family = minimal_sufficient_sets(fw, a, {mode, o.strict}, *order, options);
  else
    family = mode == QueryMode::acceptance ? sufficient_sets_acc(fw, a, o.strict, options)
                                           : sufficient_sets_nonacc(fw, a, options);
  Json query{{"command", "sufficient"}, {"arg", o.arg}, {"mode", o.mode}, {"strict", o.strict}};
  if (order) query["minimal"] = o.minimal;
  p.emit(query, family_json(fw, family), true, family_text(fw, family));
  return kOk;
}

int cmd_necessary(const Options& o, std::istream& in, std::ostream& out) {
  Printer p(o, out);
  const auto mode = mode_of(o.mode);
  Json query{{"command", "necessary"}, {"arg", o.arg}, {"mode", o.mode}};
  if (mode == QueryMode::acceptance) {
    if (!o.semantics.empty() || !o.strategy.empty())
      throw UsageError("--semantics/--strategy apply only to --mode nonacc");
    const Framework fw = load(o, in);
    const ArgSet s = necessary_args_acc(fw, fw.index_of(o.arg));
    p.emit(query, set_json(fw, s), true, fw.format(s) + "\n");
    return kOk;
  }
  if (o.semantics.empty() || o.strategy.empty())
    throw UsageError("--mode nonacc needs --semantics and --strategy");
  const auto sem = semantics_of(o.semantics);
  const auto strategy = strategy_of(o.strategy);
  const Framework fw = load(o, in);
  const ArgIndex a = fw.index_of(o.arg);
  if (acceptance_status(fw, sem, strategy, a) != AcceptanceStatus::non_accepted)
    throw StatusMismatch("argument '" + o.arg + "' is accepted under " +
                         std::string(to_string(sem)) + "/" + std::string(to_string(strategy)));
  const ArgSet s = necessary_args_nonacc(fw, a, sem, strategy);
  query["semantics"] = to_string(sem);
  query["strategy"] = to_string(strategy);
  p.emit(query, set_json(fw, s), false, fw.format(s) + "\n");
  return kOk;
}

int cmd_paths(const Options& o, std::istream& in, std::ostream& out) {
  Printer p(o, out);
  const Framework fw = load(o, in);
  const ArgIndex from = fw.index_of(o.from);
  const ArgIndex to = fw.index_of(o.to);
  Json result = Json::array();
  std::string text;
  for (const auto& path : attack_paths(fw, from, to)) {
    Json entry;
    std::vector<std::string> names;
    for (ArgIndex v : path.nodes) names.push_back(fw.name(v));
    entry["nodes"] = names;
    std::string line;
    for (std::size_t i = 0; i < names.size(); ++i) line += (i ? "," : "") + names[i];
    if (!path.is_attack()) {
      entry["parity"] = "defense";
      text += line + " defense\n";
      result.push_back(entry);
      continue;
    }
    const ContestReport report = classify_attack(fw, path);
    entry["parity"] = "attack";
    entry["verdict"] = report.contested ? "contested" : "uncontested";
    entry["contest_points"] = Json::array();
    line += report.contested ? " attack contested" : " attack uncontested";
    for (const auto& point : report.points) {
      entry["contest_points"].push_back(
          {{"contested", fw.name(point.contested)}, {"attackers", set_json(fw, point.attackers)}});
      line += " at " + fw.name(point.contested) + " by " + fw.format(point.attackers);
    }
    text += line + "\n";
    result.push_back(entry);
  }
  p.emit({{"command", "paths"}, {"from", o.from}, {"to", o.to}}, result, std::nullopt, text);
  return kOk;
}

int cmd_check(const Options& o, std::istream& in, std::ostream& out) {
  Printer p(o, out);
  std::vector<oracle::PropertyId> ids;
  if (o.property == "all") {
    ids.assign(std::begin(oracle::kAllProperties), std::end(oracle::kAllProperties));
  } else if (auto id = oracle::property_from_name(o.property)) {
    ids.push_back(*id);
  } else {
    throw UsageError("unknown property '" + o.property + "'");
  }

  Json query{{"command", "check"}, {"property", o.property}};
  std::vector<Framework> corpus;
  if (!o.file.empty()) {
    corpus.push_back(load(o, in));
    query["file"] = o.file;
  } else {
    oracle::CorpusConfig cfg;
    cfg.count = o.count;
    cfg.max_n = o.n;
    if (!o.probs.empty()) cfg.edge_probs = o.probs;
    cfg.allow_self_attacks = o.self_attacks;
    cfg.seed = o.seed;
    if (cfg.max_n < 1 || cfg.max_n > oracle::kMaxCheckedArgs)
      throw TooLarge("--n must be between 1 and " + std::to_string(oracle::kMaxCheckedArgs));
    corpus = oracle::random_corpus(cfg);
    query["count"] = cfg.count;
    query["n"] = cfg.max_n;
    query["p"] = cfg.edge_probs;
    query["seed"] = cfg.seed;
    query["self_attacks"] = cfg.allow_self_attacks;
    query["generator"] = "mt19937_64";
  }

  Json result = Json::array();
  std::string text;
  bool clean = true;
  for (auto id : ids) {
    oracle::PropertyReport report;
    report.property = id;
    for (const auto& fw : corpus) report.merge(oracle::check_property(fw, id));
    clean = clean && report.ok();
    result.push_back(oracle::to_json(report));
    text += std::string(oracle::to_string(id)) + ": " + (report.ok() ? "ok" : "VIOLATED") +
            " checked=" + std::to_string(report.checked_instances) +
            " violations=" + std::to_string(report.violations.size()) + "\n";
    for (const auto& v : report.violations) {
      std::string apx = v.framework;
      for (auto& c : apx)
        if (c == '\n') c = ' ';
      text += "  argument " + v.argument + ": " + v.detail + " | " + apx + "\n";
    }
  }
  p.emit(query, result, std::nullopt, text);
  return clean ? kOk : kViolations;
}

int cmd_gen(const Options& o, std::ostream& out) {
  const auto format = output_format_from_name(o.render_to);
  if (!format) throw UsageError("unknown output format '" + o.render_to + "'");
  oracle::GeneratorConfig cfg{o.n, o.probs.empty() ? 0.3 : o.probs.front(), o.self_attacks,
                              o.seed};
  if (o.probs.size() > 1) throw UsageError("gen takes a single --p");
  out << serialize_framework(oracle::random_framework(cfg), *format);
  return kOk;
}

int cmd_render(const Options& o, std::istream& in, std::ostream& out) {
  const auto format = output_format_from_name(o.render_to);
  if (!format) throw UsageError("unknown output format '" + o.render_to + "'");
  out << serialize_framework(load(o, in), *format);
  return kOk;
}

int report(std::ostream& err, int code, const std::string& kind, const std::string& message) {
  std::string line = message;
  for (auto& c : line)
    if (c == '\n') c = ' ';
  err << "error: " << kind << ": " << line << "\n";
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Extensions and explanations for abstract argumentation frameworks", "argex"};
  app.require_subcommand(1);
  Options o;

  auto add_input = [&](CLI::App* cmd, bool required = true) {
    auto* opt = cmd->add_option("file", o.file, "input framework (.apx/.tgf, '-' for stdin)");
    if (required) opt->required();
    cmd->add_option("--format", o.format, "input format: apx or tgf");
  };
  auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", o.out, "output: text or json");
  };

  auto* extensions = app.add_subcommand("extensions", "enumerate extensions");
  add_input(extensions);
  add_out(extensions);
  extensions->add_option("--semantics", o.semantics, "adm, cmp, grd, prf or stb")->required();

  auto* status = app.add_subcommand("status", "acceptance status of an argument");
  add_input(status);
  add_out(status);
  status->add_option("--arg", o.arg)->required();
  status->add_option("--semantics", o.semantics)->required();
  status->add_option("--strategy", o.strategy, "skeptical or credulous")->required();

  auto* explain = app.add_subcommand("explain", "(non-)acceptance explanation");
  add_input(explain);
  add_out(explain);
  explain->add_option("--arg", o.arg)->required();
  explain->add_option("--semantics", o.semantics)->required();
  explain->add_option("--strategy", o.strategy)->required();
  explain->add_option("--mode", o.mode, "acc or nonacc")->required();
  explain->add_option("--depth", o.depth,
                     "defby, notdef, suff, nec, suffnot, necnot, minsuff-{card,set}, "
                     "minsuffnot-{card,set}");
  explain->add_option("--minimal", o.minimal, "card or set");
  explain->add_option("--pick", o.pick, "first: keep only the canonical first candidate");

  auto* sufficient = app.add_subcommand("sufficient", "sufficient sets");
  add_input(sufficient);
  add_out(sufficient);
  sufficient->add_option("--arg", o.arg)->required();
  sufficient->add_option("--mode", o.mode)->required();
  sufficient->add_flag("--strict", o.strict, "also require admissibility (acc only)");
  sufficient->add_option("--minimal", o.minimal, "card or set");

  auto* necessary = app.add_subcommand("necessary", "necessary arguments");
  add_input(necessary);
  add_out(necessary);
  necessary->add_option("--arg", o.arg)->required();
  necessary->add_option("--mode", o.mode)->required();
  necessary->add_option("--semantics", o.semantics);
  necessary->add_option("--strategy", o.strategy);

  auto* paths = app.add_subcommand("paths", "simple attack paths and their contest points");
  add_input(paths);
  add_out(paths);
  paths->add_option("--from", o.from)->required();
  paths->add_option("--to", o.to)->required();

  auto* check = app.add_subcommand("check", "run property checkers");
  add_input(check, false);
  add_out(check);
  check->add_option("--property", o.property, "prop1..prop8, lemma1 or all");
  check->add_option("--count", o.count, "number of random frameworks");
  check->add_option("--n", o.n, "maximum argument count");
  check->add_option("--p", o.probs, "edge probability (repeatable)");
  check->add_option("--seed", o.seed);
  check->add_flag("--self-attacks", o.self_attacks);

  auto* gen = app.add_subcommand("gen", "generate a random framework");
  gen->add_option("--n", o.n)->required();
  gen->add_option("--p", o.probs)->required();
  gen->add_option("--seed", o.seed);
  gen->add_flag("--self-attacks", o.self_attacks);
  gen->add_option("--to", o.render_to, "apx, tgf, dot or json");

  auto* render = app.add_subcommand("render", "convert a framework");
  add_input(render);
  render->add_option("--to", o.render_to, "apx, tgf, dot or json");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    return report(err, kUsage, "usage", e.what());
  }

  try {
    if (app.got_subcommand(extensions)) return cmd_extensions(o, in, out);
    if (app.got_subcommand(status)) return cmd_status(o, in, out);
    if (app.got_subcommand(explain)) return cmd_explain(o, in, out);
    if (app.got_subcommand(sufficient)) return cmd_sufficient(o, in, out);
    if (app.got_subcommand(necessary)) return cmd_necessary(o, in, out);
    if (app.got_subcommand(paths)) return cmd_paths(o, in, out);
    if (app.got_subcommand(check)) return cmd_check(o, in, out);
    if (app.got_subcommand(gen)) return cmd_gen(o, out);
    if (app.got_subcommand(render)) return cmd_render(o, in, out);
  } catch (const UsageError& e) {
    return report(err, kUsage, "usage", e.what());
  } catch (const InvalidConfig& e) {
    return report(err, kUsage, "invalid_config", e.what());
  } catch (const InputError& e) {
    return report(err, kParse, "io_error", e.what());
  } catch (const ParseError& e) {
    return report(err, kParse, "parse_error", e.what());
  } catch (const UndeclaredArgument& e) {
    return report(err, kParse, "undeclared_argument", e.what());
  } catch (const UnknownArgument& e) {
    return report(err, kUnknownArgument, "unknown_argument", e.what());
  } catch (const StatusMismatch& e) {
    return report(err, kStatusMismatch, "status_mismatch", e.what());
  } catch (const SelfAttacker& e) {
    return report(err, kStatusMismatch, "self_attacker", e.what());
  } catch (const NoExtensions& e) {
    return report(err, kNoExtensions, "no_extensions", e.what());
  } catch (const TooLarge& e) {
    return report(err, kTooLarge, "too_large", e.what());
  } catch (const Error& e) {
    return report(err, kUsage, "error", e.what());
  }
  return report(err, kUsage, "usage", "no subcommand");
}

}  // namespace argex::cli
