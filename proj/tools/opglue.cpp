// Command-line front end: validation, evaluation, law checking, gluing,
// colimits and universal-property checks over the JSON formats.
//
// Exit status: 0 success, 1 report-level failure, 2 input error.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "opglue/files.hpp"

namespace {

using namespace opglue;
using json::Json;

constexpr int exit_ok = 0;
constexpr int exit_report_failure = 1;
constexpr int exit_input_error = 2;

struct Options {
  bool quiet = false;
  std::string input;
  std::string term_path;
  std::string symbol;
  std::vector<std::string> args;
  std::size_t bound = 3;
  std::size_t depth = 2;
  std::size_t max_targets = max_universal_targets;
  std::string out;
};

class Output {
 public:
  explicit Output(bool quiet) : quiet_(quiet) {}
  void report(Json const& j) const { std::cout << j.dump(2) << "\n"; }
  void summary(std::string const& line) const {
    if (!quiet_) std::cerr << line << "\n";
  }

 private:
  bool quiet_;
};

Value parse_argument(BaseType base, std::string const& text) {
  switch (base) {
    case BaseType::boolean:
      if (text == "true") return Value(true);
      if (text == "false") return Value(false);
      break;
    case BaseType::natural:
      if (!text.empty() && text.find_first_not_of("0123456789") == std::string::npos) {
        return Value(Natural(text));
      }
      break;
    case BaseType::string:
      return Value(text);
    case BaseType::unit:
      if (text == "()" || text == "null") return Value(Unit{});
      break;
    case BaseType::fieldmap:
      try {
        return json::value_from_payload(base, Json::parse(text));
      } catch (nlohmann::json::exception const&) {
      }
      break;
  }
  throw Error(ErrorKind::type_mismatch,
              "argument \"" + text + "\" is not a " + std::string(to_string(base)));
}

int run_validate(Options const& o, Output const& out) {
  auto d = files::load_dsl(o.input);
  auto report = validate_dsl(d);
  auto j = json::to_json(report);
  j["dsl"] = d.name;
  out.report(j);
  out.summary(d.name + (report.ok() ? ": valid" : ": " + std::to_string(report.diagnostics.size()) + " problem(s)"));
  return report.ok() ? exit_ok : exit_report_failure;
}

int run_eval(Options const& o, Output const& out) {
  auto d = files::load_dsl(o.input);
  require_valid(d);
  if (o.term_path.empty() == o.symbol.empty()) {
    throw Error(ErrorKind::precondition_violation, "eval needs exactly one of --term or --symbol");
  }
  auto term = o.term_path.empty() ? generator_term(d, o.symbol) : files::load_term(o.term_path);
  auto profile = profile_of(d, term);
  if (o.args.size() != profile.arity()) {
    throw Error(ErrorKind::arity_mismatch, to_display(term) + " expects " + std::to_string(profile.arity()) +
                                               " arguments, got " + std::to_string(o.args.size()));
  }
  std::vector<Value> args;
  for (std::size_t k = 0; k < o.args.size(); ++k) {
    args.push_back(parse_argument(d.denote(profile.inputs[k]), o.args[k]));
  }
  auto result = eval_term(d, term, args);
  std::cout << json::payload(result).dump() << "\n";
  out.summary(to_display(term) + " = " + to_display(result));
  return exit_ok;
}

int run_laws(Options const& o, Output const& out) {
  auto d = files::load_dsl(o.input);
  auto report = check_laws(d, {o.bound, o.depth});
  out.report(json::to_json(report));
  for (auto const& a : report.axioms) {
    out.summary(std::string(to_string(a.axiom)) + ": " + (a.passed() ? "pass" : "FAIL") + " (" +
                std::to_string(a.instances) + " instances)");
  }
  return report.ok() ? exit_ok : exit_report_failure;
}

Json failure_json(std::string const& kind, Error const& e) {
  Json j{{"kind", kind},
         {"ok", false},
         {"error", {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}}}};
  if (!e.report().diagnostics.empty()) j["diagnostics"] = json::to_json(e.report())["diagnostics"];
  return j;
}

int run_glue(Options const& o, Output const& out, std::optional<std::size_t> bound_flag) {
  auto spec = files::load_glue(o.input);
  auto bound = bound_flag.value_or(spec.bound.value_or(3));
  PushoutResult result;
  try {
    result = pushout(spec.span, spec.witnesses, bound);
  } catch (Error const& e) {
    if (!is_report_failure(e.kind())) throw;
    out.report(failure_json("pushout", e));
    out.summary(std::string(to_string(e.kind())) + ": " + e.what());
    return exit_report_failure;
  }
  auto report = json::to_json(json::PushoutRecord{spec.span, spec.witnesses, bound, result});
  if (!o.out.empty()) {
    files::write_text(o.out, json::to_json(result.glued).dump(2) + "\n");
    files::write_text(files::sibling_report_path(o.out, ".pushout.json"), report.dump(2) + "\n");
  }
  out.report(report);
  out.summary("glued " + result.glued.name + ": " + std::to_string(result.type_classes.size()) +
              " sigil classes, " + std::to_string(result.symbol_classes.size()) + " symbol classes");
  return exit_ok;
}

int run_colimit(Options const& o, Output const& out, std::optional<std::size_t> bound_flag) {
  auto spec = files::load_diagram(o.input);
  auto bound = bound_flag.value_or(spec.bound.value_or(3));
  ColimitResult result;
  try {
    result = colimit(spec.diagram, spec.witnesses, bound);
  } catch (Error const& e) {
    if (!is_report_failure(e.kind())) throw;
    out.report(failure_json("colimit", e));
    out.summary(std::string(to_string(e.kind())) + ": " + e.what());
    return exit_report_failure;
  }
  auto report = json::to_json(json::ColimitRecord{spec.diagram, spec.witnesses, bound, result});
  if (!o.out.empty()) {
    files::write_text(o.out, json::to_json(result.colimit).dump(2) + "\n");
    files::write_text(files::sibling_report_path(o.out, ".colimit.json"), report.dump(2) + "\n");
  }
  out.report(report);
  out.summary("colimit " + result.colimit.name + ": " + std::to_string(result.sigil_classes.size()) +
              " sigil classes, " + std::to_string(result.symbol_classes.size()) + " symbol classes");
  return exit_ok;
}

int run_check_universal(Options const& o, Output const& out) {
  auto j = files::read_json(o.input);
  UniversalityReport report;
  std::string kind = j.is_object() && j.contains("kind") && j["kind"].is_string() ? j["kind"].get<std::string>() : "";
  if (kind == "pushout") {
    auto record = json::pushout_record_from_json(j);
    report = verify_universal_property(record.result, record.span, o.max_targets);
  } else if (kind == "colimit") {
    auto record = json::colimit_record_from_json(j);
    report = verify_colimit_universal(record.result, record.diagram, o.max_targets);
  } else {
    throw Error(ErrorKind::parse_error, o.input + ": not a pushout or colimit report");
  }
  auto result = json::to_json(report);
  result["kind"] = kind;
  result["max_targets"] = o.max_targets;
  out.report(result);
  out.summary(kind + " universal property: " + (report.ok() ? "ok" : "FAILED") + " (" +
              std::to_string(report.cocones) + " cocones)");
  return report.ok() ? exit_ok : exit_report_failure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compose DSLs modelled as colored operads of sets"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--quiet", o.quiet, "Suppress the human-readable summary on stderr");

  auto* validate = app.add_subcommand("validate", "Check a .dsl.json file");
  validate->add_option("dsl", o.input, "DSL file")->required();

  auto* eval = app.add_subcommand("eval", "Evaluate a term or symbol on literal arguments");
  eval->add_option("dsl", o.input, "DSL file")->required();
  eval->add_option("--term", o.term_path, "Term file (.term.json)");
  eval->add_option("--symbol", o.symbol, "Function symbol name");
  eval->add_option("--args", o.args, "Literal arguments")->expected(0, -1);

  auto* laws = app.add_subcommand("laws", "Exhaustively check the operad axioms");
  laws->add_option("dsl", o.input, "DSL file")->required();
  laws->add_option("--bound", o.bound, "Carrier enumeration bound")->capture_default_str();
  laws->add_option("--depth", o.depth, "Maximum graft depth")->capture_default_str();

  std::optional<std::size_t> glue_bound, colimit_bound;
  auto* glue = app.add_subcommand("glue", "Glue two DSLs along a span (pushout)");
  glue->add_option("glue", o.input, "Glue file (.glue.json)")->required();
  glue->add_option("--out", o.out, "Write the glued DSL here and the report next to it");
  glue->add_option("--bound", glue_bound, "Overrides the file's bound");

  auto* colim = app.add_subcommand("colimit", "Colimit of a finite diagram of DSLs");
  colim->add_option("diagram", o.input, "Diagram file (.diag.json)")->required();
  colim->add_option("--out", o.out, "Write the colimit DSL here and the report next to it");
  colim->add_option("--bound", colimit_bound, "Overrides the file's bound");

  auto* universal = app.add_subcommand("check-universal", "Brute-force the universal property of a report");
  universal->add_option("report", o.input, "Pushout or colimit report")->required();
  universal->add_option("--max-targets", o.max_targets, "Largest target universe")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return exit_input_error;
  }

  Output out(o.quiet);
  try {
    if (*validate) return run_validate(o, out);
    if (*eval) return run_eval(o, out);
    if (*laws) return run_laws(o, out);
    if (*glue) return run_glue(o, out, glue_bound);
    if (*colim) return run_colimit(o, out, colimit_bound);
    if (*universal) return run_check_universal(o, out);
  } catch (Error const& e) {
    out.report(failure_json("error", e));
    std::cerr << to_string(e.kind()) << ": " << e.what() << "\n";
    return is_report_failure(e.kind()) ? exit_report_failure : exit_input_error;
  }
  return exit_input_error;
}
