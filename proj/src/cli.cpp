#include "lgroup/cli.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lgroup/presentation.hpp"
#include "lgroup/report.hpp"

namespace lgroup {
namespace {

constexpr const char* kArtifactName = "lgroup";
constexpr const char* kArtifactVersion = "1.0.0";

// A presentation argument is a built-in name first, a file path second.
GroupPresentation resolve_presentation(const std::string& arg) {
  try {
    return builtin(arg);
  } catch (const std::invalid_argument&) {
    // Not a built-in; fall through to the file route.
  }
  std::ifstream in(arg, std::ios::binary);
  if (!in) {
    throw PresentationError(
        "'" + arg + "' is neither a built-in presentation nor a readable file", "$");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_presentation_text(buf.str());
}

std::string witness_text(const ClassVerdict& v) {
  const auto piece = [](const std::string& term, const std::string& desc) {
    return term.empty() ? desc : term;
  };
  std::string out;
  if (!v.witness_f_term.empty() || !v.witness_f_desc.empty()) {
    out += "f = " + piece(v.witness_f_term, v.witness_f_desc) + ", ";
  }
  out += "g = " + piece(v.witness_g_term, v.witness_g_desc);
  if (!v.condition.empty()) out += "; " + v.condition;
  return out;
}

// --- verify-paper -------------------------------------------------------

int cmd_verify_paper(std::uint64_t budget, std::uint64_t seed, const std::string& format) {
  const auto report = run_paper_verification(budget, seed);
  if (format == "json") {
    std::cout << paper_report_to_json(report).dump(2) << "\n";
  } else {
    std::cout << paper_report_to_text(report);
  }
  return report.all_ok() ? 0 : 1;
}

// --- check ----------------------------------------------------------------

int cmd_check(const std::string& pres_arg, const std::vector<std::string>& class_flags,
              std::uint64_t budget, std::uint64_t seed, const std::string& format) {
  const auto p = resolve_presentation(pres_arg);
  const auto analysis = analyze_group(p, budget, /*with_cross=*/false);

  // Requested classes, deduplicated, in canonical order.
  std::vector<ClassVerdict> verdicts;
  for (std::size_t i = 0; i < all_classes().size(); ++i) {
    const auto cls = all_classes()[i];
    bool wanted = class_flags.empty();
    for (const auto& flag : class_flags) {
      if (class_from_string(flag) == cls) wanted = true;
    }
    if (wanted) verdicts.push_back(analysis.classes[i]);
  }

  std::size_t holding = 0;
  for (const auto& v : verdicts) {
    if (v.holds()) ++holding;
  }
  const bool all_hold = holding == verdicts.size();

  if (format == "json") {
    nlohmann::json out{{"artifact", kArtifactName},
                       {"version", kArtifactVersion},
                       {"subject", presentation_name(p)},
                       {"budget", budget},
                       {"seed", seed},
                       {"classes", nlohmann::json::array()},
                       {"all_hold", all_hold}};
    for (const auto& v : verdicts) out["classes"].push_back(verdict_to_json(v));
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "subject: " << presentation_name(p) << "\n";
    std::cout << "budget: " << budget << "  seed: " << seed << "\n";
    for (const auto& v : verdicts) {
      if (v.holds()) {
        std::cout << "[ok] " << to_string(v.cls) << ": " << to_string(v.status) << "\n";
      } else {
        std::cout << "[FAIL] " << to_string(v.cls) << ": Fails (" << witness_text(v)
                  << ")\n";
      }
    }
    if (all_hold) {
      std::cout << "result: ALL REQUESTED CLASSES HOLD (" << holding << "/"
                << verdicts.size() << ")\n";
    } else {
      std::cout << "result: SOME CLASSES FAIL (" << holding << "/" << verdicts.size()
                << " hold)\n";
    }
  }
  return all_hold ? 0 : 1;
}

// --- element ----------------------------------------------------------------

const std::vector<std::string>& pair_predicates() {
  static const std::vector<std::string> kPreds{"in-principal", "in-polar", "in-zkernel",
                                               "in-perp"};
  return kPreds;
}

const std::vector<std::string>& single_predicates() {
  static const std::vector<std::string> kPreds{"weak-unit",  "strong-unit", "regular-open",
                                               "coz-closed", "clcoz-open",  "coz",
                                               "zset"};
  return kPreds;
}

bool is_pair_predicate(const std::string& pred) {
  for (const auto& s : pair_predicates()) {
    if (s == pred) return true;
  }
  return false;
}

bool is_single_predicate(const std::string& pred) {
  for (const auto& s : single_predicates()) {
    if (s == pred) return true;
  }
  return false;
}

template <SpaceModel M>
int element_impl(const TypedPresentation<M>& p, const std::string& pred,
                 const std::vector<std::string>& term_args, const std::string& format) {
  const auto& m = p.model;
  const std::map<std::string, typename M::Element> gens(p.generators.begin(),
                                                        p.generators.end());
  const std::size_t need = is_pair_predicate(pred) ? 2 : 1;
  if (term_args.size() != need) {
    throw terms::EvalError("predicate '" + pred + "' takes " + std::to_string(need) +
                           (need == 1 ? " term" : " terms") + ", got " +
                           std::to_string(term_args.size()));
  }
  std::vector<typename M::Element> vals;
  vals.reserve(term_args.size());
  for (const auto& a : term_args) {
    vals.push_back(terms::eval_term(m, terms::parse_term(a), gens));
  }

  nlohmann::json out{{"artifact", kArtifactName},
                     {"version", kArtifactVersion},
                     {"subject", p.name},
                     {"predicate", pred},
                     {"args", term_args}};
  std::string text;
  const auto bool_result = [&](bool value) {
    out["value"] = value;
    text = value ? "true" : "false";
  };

  if (pred == "in-principal") {
    const auto n = principal_witness(m, vals[0], vals[1]);
    out["value"] = n.has_value();
    if (n.has_value()) {
      out["witness_n"] = int_to_string(*n);
      text = "true, n = " + int_to_string(*n);
    } else {
      text = "false";
    }
  } else if (pred == "in-polar") {
    bool_result(in_polar(m, vals[0], vals[1]));
  } else if (pred == "in-zkernel") {
    bool_result(in_zkernel(m, vals[0], vals[1]));
  } else if (pred == "in-perp") {
    bool_result(in_perp(m, vals[0], vals[1]));
  } else if (pred == "weak-unit") {
    bool_result(is_weak_unit(m, vals[0]));
  } else if (pred == "strong-unit") {
    bool_result(is_strong_unit(m, vals[0]));
  } else if (pred == "regular-open") {
    bool_result(coz_regular_open(m, vals[0]));
  } else if (pred == "coz-closed") {
    bool_result(coz_closed(m, vals[0]));
  } else if (pred == "clcoz-open") {
    bool_result(clcoz_open(m, vals[0]));
  } else if (pred == "coz") {
    const auto desc = m.describe_set(m.coz(vals[0]));
    out["value"] = desc;
    text = desc;
  } else {  // zset — the caller validated the predicate name
    const auto desc = m.describe_set(m.set_complement(m.coz(vals[0])));
    out["value"] = desc;
    text = desc;
  }

  if (format == "json") {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << text << "\n";
  }
  return 0;
}

int cmd_element(const std::string& pres_arg, const std::string& pred,
                const std::vector<std::string>& term_args, const std::string& format) {
  if (!is_pair_predicate(pred) && !is_single_predicate(pred)) {
    std::string known;
    for (const auto& s : pair_predicates()) known += s + " ";
    for (const auto& s : single_predicates()) known += s + " ";
    throw terms::EvalError("unknown predicate '" + pred + "'; known: " + known);
  }
  const auto p = resolve_presentation(pres_arg);
  return std::visit(
      [&](const auto& typed) { return element_impl(typed, pred, term_args, format); }, p);
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{
      "Exact computation with archimedean lattice-ordered groups with strong unit,\n"
      "presented inside C(K) for three computable compact spaces."};
  app.require_subcommand(1);

  std::uint64_t budget = 2000;
  std::uint64_t seed = 0;
  std::string format = "text";
  std::string pres_arg;
  std::vector<std::string> class_flags;
  std::string predicate;
  std::vector<std::string> term_args;

  static const CLI::Validator positive_integer{
      [](std::string& s) -> std::string {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos ||
            s.find_first_not_of('0') == std::string::npos) {
          return std::string("requires a positive integer, got '") + s + "'";
        }
        return {};
      },
      "POSITIVE"};

  const auto add_common = [&](CLI::App* sub, bool with_budget) {
    if (with_budget) {
      sub->add_option("--budget", budget,
                      "Distinct elements to enumerate per presentation (default 2000)")
          ->check(positive_integer);
      sub->add_option("--seed", seed, "Recorded in the report; checks are deterministic");
    }
    sub->add_option("--format", format, "Output format (default text)")
        ->check(CLI::IsMember({"json", "text"}));
  };

  auto* vp = app.add_subcommand(
      "verify-paper", "Check every built-in presentation against the pinned verdict table");
  add_common(vp, true);

  auto* ck = app.add_subcommand(
      "check", "Run class membership checks on a presentation file or built-in name");
  ck->add_option("presentation", pres_arg, "Built-in name or UTF-8 JSON file")->required();
  ck->add_option("--class", class_flags, "Restrict to these classes (repeatable)")
      ->check(CLI::IsMember({"Y", "CR", "M", "HA", "Proj"}));
  add_common(ck, true);

  auto* el = app.add_subcommand("element", "Evaluate one predicate on term arguments");
  el->add_option("presentation", pres_arg, "Built-in name or UTF-8 JSON file")->required();
  el->add_option("predicate", predicate,
                 "One of: in-principal, in-polar, in-zkernel, in-perp, weak-unit, "
                 "strong-unit, regular-open, coz-closed, clcoz-open, coz, zset")
      ->required();
  el->add_option("terms", term_args, "Term arguments (two for in-*, one otherwise)")
      ->expected(1, 2);
  add_common(el, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version are successes; anything else is usage error
  }

  try {
    if (vp->parsed()) return cmd_verify_paper(budget, seed, format);
    if (ck->parsed()) return cmd_check(pres_arg, class_flags, budget, seed, format);
    if (el->parsed()) return cmd_element(pres_arg, predicate, term_args, format);
  } catch (const PresentationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const terms::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const terms::EvalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace lgroup
