#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "mergeweaver/eval.hpp"
#include "mergeweaver/pipeline.hpp"

namespace fs = std::filesystem;
using namespace mergeweaver;

namespace {

struct Inputs {
  std::string scenario;
  std::string base;
  std::string left;
  std::string right;
  std::string out;
  std::string report;
  RunOptions opts;
  bool no_timing = false;
};

void add_inputs(CLI::App* cmd, Inputs& in) {
  cmd->add_option("scenario", in.scenario, "scenario directory holding base/ left/ right/");
  cmd->add_option("--base", in.base, "base version directory");
  cmd->add_option("--left", in.left, "left branch directory");
  cmd->add_option("--right", in.right, "right branch directory");
  cmd->add_option("--out", in.out, "output directory");
  cmd->add_option("--report", in.report, "write the JSON report here");
  cmd->add_flag("--dump-peg", in.opts.dump_peg, "write peg.json to --out");
  cmd->add_flag("--dump-delta", in.opts.dump_delta, "write delta.json to --out");
  cmd->add_flag("--dump-script", in.opts.dump_script, "write scripts.json to --out");
  cmd->add_flag("--trace", in.opts.trace, "write trace.json to --out");
  cmd->add_flag("--no-timing", in.no_timing, "leave timings out of the report");
}

void resolve_paths(Inputs& in) {
  if (!in.scenario.empty()) {
    fs::path s(in.scenario);
    if (in.base.empty()) in.base = (s / "base").string();
    if (in.left.empty()) in.left = (s / "left").string();
    if (in.right.empty()) in.right = (s / "right").string();
  }
  if (in.base.empty() || in.left.empty() || in.right.empty()) {
    throw CLI::ValidationError("inputs", "need a scenario directory or --base, --left and --right");
  }
  in.opts.timing = !in.no_timing;
}

std::string scenario_id(const Inputs& in) {
  if (!in.scenario.empty()) return fs::path(in.scenario).filename().string();
  return fs::path(in.base).parent_path().filename().string();
}

void emit(const Json& j, const std::string& report) {
  std::string text = j.dump(2) + "\n";
  if (report.empty()) {
    std::cout << text;
  } else {
    write_file(report, text);
  }
}

int run_merge(const Inputs& in) {
  MergeScenario s = merge_scenario(in.base, in.left, in.right);
  if (in.out.empty()) {
    for (const auto& [path, text] : s.am) std::cout << "// " << path << "\n" << text;
  } else {
    for (const auto& [path, text] : s.am) write_file(fs::path(in.out) / path, text);
  }
  return 0;
}

int run_detect(const Inputs& in) {
  MergeScenario s = merge_scenario(in.base, in.left, in.right);
  FourWayGraph fw = build_scenario_graph(s);
  std::vector<Conflict> conflicts = detect_conflicts(fw);
  Json list = Json::array();
  for (std::size_t i = 0; i < conflicts.size(); ++i) list.push_back(conflict_json(conflicts[i], i));
  emit(Json{{"scenario", scenario_id(in)}, {"conflicts", list}}, in.report);
  if (!in.out.empty()) {
    ScenarioRun run;
    run.id = scenario_id(in);
    run.merge = std::move(s);
    run.fw = std::move(fw);
    run.conflicts = std::move(conflicts);
    RunOptions opts = in.opts;
    opts.trace = false;
    write_outputs(run, in.out, opts);
  }
  return 0;
}

int run_resolve(const Inputs& in) {
  ScenarioRun run = run_scenario(in.base, in.left, in.right, scenario_id(in));
  Json report = report_json(run, in.opts.timing);
  if (!in.out.empty()) {
    write_outputs(run, in.out, in.opts);
    if (in.report.empty()) write_file(fs::path(in.out) / "report.json", report.dump(2) + "\n");
  }
  if (!in.report.empty() || in.out.empty()) emit(report, in.report);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mergeweaver: build-conflict detection and resolution for three-way merges"};
  app.require_subcommand(1);
  Inputs merge_in, detect_in, resolve_in;
  auto* merge = app.add_subcommand("merge", "textual three-way merge (writes Am)");
  add_inputs(merge, merge_in);
  auto* detect = app.add_subcommand("detect", "report build conflicts");
  add_inputs(detect, detect_in);
  auto* resolve = app.add_subcommand("resolve", "detect and resolve with both strategies");
  add_inputs(resolve, resolve_in);
  auto* eval = app.add_subcommand("eval", "coverage and accuracy over a fixture corpus");
  std::string corpus, key, eval_report;
  eval->add_option("corpus", corpus, "corpus directory")->required();
  eval->add_option("--key", key, "hand-scored golden key (JSON)");
  eval->add_option("--report", eval_report, "write the summary here");

  CLI11_PARSE(app, argc, argv);
  try {
    if (merge->parsed()) {
      resolve_paths(merge_in);
      return run_merge(merge_in);
    }
    if (detect->parsed()) {
      resolve_paths(detect_in);
      return run_detect(detect_in);
    }
    if (resolve->parsed()) {
      resolve_paths(resolve_in);
      return run_resolve(resolve_in);
    }
    std::optional<fs::path> key_path;
    if (!key.empty()) key_path = key;
    EvalSummary sum = evaluate_corpus(corpus, key_path);
    emit(summary_json(sum), eval_report);
    return sum.key_mismatches.empty() ? 0 : 1;
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const SyntaxError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const TextualConflict& e) {
    std::cerr << "textual conflict: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
