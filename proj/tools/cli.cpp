#include "cli.hpp"

#include "phin/fuzz.hpp"
#include "phin/io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>

namespace phin::cli {

namespace {

struct BuildArgs {
  std::string file;
  std::string out_path;
  bool timing = false;
};

struct CountArgs {
  std::int64_t p = 0;
  std::int64_t a4 = 0;
  std::int64_t a6 = 0;
};

struct FuzzArgs {
  std::uint64_t seed = 1;
  std::size_t count = 10;
  FuzzBounds bounds;
  std::string dump_dir = ".";
  bool serial = false;
};

bool is_input_error(const std::exception& e) {
  return dynamic_cast<const InputError*>(&e) || dynamic_cast<const WeilError*>(&e) ||
         dynamic_cast<const GraphError*>(&e) || dynamic_cast<const CurveError*>(&e) ||
         dynamic_cast<const ModuleError*>(&e) || dynamic_cast<const DimensionError*>(&e);
}

int cmd_build(const BuildArgs& a, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  BuildOutcome outcome;
  try {
    outcome = build_report(read_instance_file(a.file));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return is_input_error(e) ? kExitInputError : kExitCheckFailed;
  }
  if (a.timing) {
    const std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
    outcome.report["timing_ms"] = ms.count();
  }
  const std::string text = dump_report(outcome.report);
  if (a.out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(a.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << a.out_path << "\n";
      return kExitInputError;
    }
    file << text;
  }
  if (!outcome.all_passed) err << "one or more checks failed\n";
  return outcome.all_passed ? kExitOk : kExitCheckFailed;
}

int cmd_count(const CountArgs& a, std::ostream& out, std::ostream& err) {
  try {
    const PointCount pc = count_points({a.p, a.a4, a.a6});
    Json j;
    j["p"] = std::to_string(a.p);
    j["a4"] = std::to_string(a.a4);
    j["a6"] = std::to_string(a.a6);
    j["points"] = std::to_string(pc.points);
    j["trace"] = std::to_string(pc.trace);
    out << j.dump() << "\n";
    return kExitOk;
  } catch (const CurveError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

int cmd_fuzz(const FuzzArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<CurveInstance> instances;
  try {
    instances = fuzz_instances(a.seed, a.count, a.bounds);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  const auto verdicts = evaluate_all(instances, a.serial ? Execution::serial : Execution::parallel);

  Json summary;
  summary["seed"] = std::to_string(a.seed);
  summary["count"] = std::to_string(a.count);
  Json failures = Json::array();
  std::size_t passed = 0;
  for (std::size_t i = 0; i < verdicts.size(); ++i) {
    if (verdicts[i].ok()) {
      ++passed;
      continue;
    }
    const auto path = std::filesystem::path(a.dump_dir) /
                      ("fuzz_failure_seed" + std::to_string(a.seed) + "_" + std::to_string(i) + ".json");
    std::ofstream(path) << curve_instance_to_json(instances[i]).dump(2) << "\n";
    failures.push_back({{"index", std::to_string(i)},
                        {"file", path.string()},
                        {"error", verdicts[i].error}});
  }
  summary["passed"] = std::to_string(passed);
  summary["failed"] = std::to_string(verdicts.size() - passed);
  summary["failures"] = std::move(failures);
  out << summary.dump(2) << "\n";
  return passed == verdicts.size() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact (Phi, N)-modules of semistable curves and abelian varieties", "phin"};
  app.require_subcommand(1);

  BuildArgs build;
  auto* build_cmd = app.add_subcommand("build", "Build and verify the module of an instance file");
  build_cmd->add_option("file", build.file, "Instance file (JSON)")->required();
  build_cmd->add_option("--out", build.out_path, "Write the report here instead of stdout");
  build_cmd->add_flag("--timing", build.timing, "Add wall-clock timing to the report");

  CountArgs count;
  auto* count_cmd = app.add_subcommand("count", "Count points of y^2 = x^3 + a4 x + a6 over F_p");
  count_cmd->add_option("p", count.p, "Odd prime")->required();
  count_cmd->add_option("a4", count.a4, "Coefficient of x")->required();
  count_cmd->add_option("a6", count.a6, "Constant term")->required();

  FuzzArgs fuzz;
  auto* fuzz_cmd = app.add_subcommand("fuzz", "Check random curve instances");
  fuzz_cmd->add_option("--seed", fuzz.seed, "Random seed")->required();
  fuzz_cmd->add_option("--count", fuzz.count, "Number of instances")->required();
  fuzz_cmd->add_option("--max-vertices", fuzz.bounds.max_vertices)->check(CLI::Range(1, 64));
  fuzz_cmd->add_option("--max-edges", fuzz.bounds.max_edges)->check(CLI::Range(0, 128));
  fuzz_cmd->add_option("--max-genus", fuzz.bounds.max_genus)->check(CLI::Range(0, 4));
  fuzz_cmd->add_option("--max-prime", fuzz.bounds.max_prime)->check(CLI::Range(3, 10000));
  fuzz_cmd->add_option("--max-f", fuzz.bounds.max_f)->check(CLI::Range(1, 4));
  fuzz_cmd->add_option("--dump-dir", fuzz.dump_dir, "Directory for failing instance files");
  fuzz_cmd->add_flag("--serial", fuzz.serial, "Evaluate on one thread");

  // CLI11 consumes its argument vector from the back.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  if (*build_cmd) return cmd_build(build, out, err);
  if (*count_cmd) return cmd_count(count, out, err);
  return cmd_fuzz(fuzz, out, err);
}

}  // namespace phin::cli
