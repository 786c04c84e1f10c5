// nqueens: count, verify, benchmark and plot N-queens solution counts.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nqueens/bench.hpp"
#include "nqueens/errors.hpp"
#include "nqueens/oracle.hpp"
#include "nqueens/parallel.hpp"
#include "nqueens/report.hpp"
#include "nqueens/solver.hpp"

namespace fs = std::filesystem;
using namespace nqueens;

namespace {

SolverVariant parse_variant(const std::string& s) {
  if (s == "fixed") return SolverVariant::FixedCapacity;
  if (s == "dynamic") return SolverVariant::Dynamic;
  throw ValidationError("unknown variant '" + s + "' (expected fixed or dynamic)");
}

std::vector<Strategy> parse_modes(const std::string& list) {
  std::vector<Strategy> out;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(parse_strategy(item));
  }
  return out;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << text;
  if (!out.flush()) throw IoError("failed writing " + path.string());
}

fs::path summary_path_for(const fs::path& out) {
  fs::path p = out;
  p.replace_extension();
  p += ".summary.csv";
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"N-queens solution counter and benchmark harness"};
  app.require_subcommand(1);

  // count
  auto* count_cmd = app.add_subcommand("count", "Count all solutions for one board size");
  int count_n = 8;
  std::string count_mode = "seq";
  int count_workers = default_workers();
  std::string count_variant = "fixed";
  bool count_trace = false;
  count_cmd->add_option("--n", count_n, "Board size")->required()->check(CLI::NonNegativeNumber);
  count_cmd->add_option("--mode", count_mode, "seq, para or pool")->capture_default_str();
  count_cmd->add_option("--workers", count_workers, "Worker threads for para/pool")
      ->capture_default_str();
  count_cmd->add_option("--variant", count_variant, "fixed or dynamic flag storage")
      ->capture_default_str();
  count_cmd->add_flag("--trace", count_trace, "Print task start order and per-worker task counts");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Compare the solver against the brute-force oracle");
  int verify_n = 8;
  verify_cmd->add_option("--n", verify_n, "Board size (at most 11)")->required()
      ->check(CLI::NonNegativeNumber);

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "Run timed trials and report mean/variance");
  bench::BenchConfig cfg;
  std::string bench_modes = "seq,para,pool";
  std::string trials_file;
  std::string bench_out;
  std::string bench_summary_out;
  std::string bench_format = "csv";
  std::string bench_variant = "fixed";
  bool quiet = false;
  bench_cmd->add_option("--min-n", cfg.min_n, "Smallest board size")->capture_default_str();
  bench_cmd->add_option("--max-n", cfg.max_n, "Largest board size")->capture_default_str();
  bench_cmd->add_option("--modes", bench_modes, "Comma-separated modes")->capture_default_str();
  bench_cmd->add_option("--trials-file", trials_file,
                        "Lines of '<n> <trials>'; default 20 (8..15), 10 (16..17), 3 (18)");
  bench_cmd->add_option("--workers", cfg.workers, "Worker threads for para/pool")
      ->capture_default_str();
  bench_cmd->add_option("--warmup", cfg.warmup_runs, "Untimed runs before each cell")
      ->capture_default_str();
  bench_cmd->add_option("--variant", bench_variant, "fixed or dynamic flag storage")
      ->capture_default_str();
  bench_cmd->add_option("--out", bench_out,
                        "Output file (csv: per-trial records; json: summaries). Default stdout");
  bench_cmd->add_option("--summary-out", bench_summary_out,
                        "Summary CSV path (csv format; default <out>.summary.csv)");
  bench_cmd->add_option("--format", bench_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  bench_cmd->add_flag("--quiet", quiet, "Suppress progress on stderr");

  // plot
  auto* plot_cmd = app.add_subcommand("plot", "Render a runtime-vs-n SVG chart");
  std::string plot_in, plot_out, plot_scale = "linear", plot_title = "Run time vs board size";
  plot_cmd->add_option("--in", plot_in, "Summary (or per-trial) CSV")->required();
  plot_cmd->add_option("--scale", plot_scale, "linear or log")->capture_default_str();
  plot_cmd->add_option("--out", plot_out, "SVG output path")->required();
  plot_cmd->add_option("--title", plot_title, "Chart title")->capture_default_str();

  // table
  auto* table_cmd = app.add_subcommand("table", "Print mean seconds as a mode x n table");
  std::string table_in;
  table_cmd->add_option("--in", table_in, "Summary (or per-trial) CSV")->required();

  // show
  auto* show_cmd = app.add_subcommand("show", "Print solution boards");
  int show_n = 8;
  std::size_t show_limit = 3;
  show_cmd->add_option("--n", show_n, "Board size")->required()->check(CLI::NonNegativeNumber);
  show_cmd->add_option("--limit", show_limit, "Number of boards")->capture_default_str()
      ->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*count_cmd) {
      RunTrace trace;
      RunOptions opts;
      opts.variant = parse_variant(count_variant);
      if (count_trace) opts.trace = &trace;
      const ExecutionMode mode{parse_strategy(count_mode), count_workers};
      std::cout << count_parallel(BoardSize(count_n), mode, opts) << '\n';
      if (count_trace) {
        std::cerr << "start order:";
        for (int j : trace.start_order) std::cerr << ' ' << j;
        std::cerr << "\ntasks per worker:";
        for (auto k : trace.tasks_per_worker) std::cerr << ' ' << k;
        std::cerr << '\n';
      }
    } else if (*verify_cmd) {
      const BoardSize n(verify_n);
      const auto oracle_result = oracle::brute_force_count(n);
      const auto solver = count_all_solutions(n);
      std::cout << "n=" << verify_n << " solver=" << solver
                << " oracle=" << oracle_result.count << ' '
                << (solver == oracle_result.count ? "AGREE" : "DISAGREE") << '\n';
      return solver == oracle_result.count ? 0 : 1;
    } else if (*bench_cmd) {
      cfg.modes = parse_modes(bench_modes);
      cfg.variant = parse_variant(bench_variant);
      if (!trials_file.empty()) cfg.trial_schedule = bench::load_trial_schedule(trials_file);
      bench::ProgressFn progress;
      if (!quiet) {
        progress = [](const bench::TrialRecord& r) {
          std::cerr << "n=" << r.n << ' ' << to_string(r.mode) << " trial " << r.trial
                    << ": " << r.seconds << " s (" << r.count << ")\n";
        };
      }
      const auto records = bench::run_bench(cfg, progress);
      const auto summaries = bench::summarize(records);
      std::ostringstream body;
      if (bench_format == "json") {
        bench::write_summary_json(body, cfg, summaries);
      } else {
        bench::write_records_csv(body, records);
      }
      if (bench_out.empty()) {
        std::cout << body.str();
      } else {
        write_file(bench_out, body.str());
      }
      if (bench_format == "csv" && (!bench_out.empty() || !bench_summary_out.empty())) {
        const fs::path sp = bench_summary_out.empty() ? summary_path_for(bench_out)
                                                      : fs::path(bench_summary_out);
        std::ostringstream summary;
        bench::write_summary_csv(summary, summaries);
        write_file(sp, summary.str());
      }
      if (!quiet) std::cerr << report::emit_table(summaries);
    } else if (*plot_cmd) {
      const auto summaries = bench::load_summary_csv(plot_in);
      const auto spec = report::chart_from_summaries(
          summaries, report::parse_scale(plot_scale), plot_title);
      report::emit_chart(spec, plot_out);
    } else if (*table_cmd) {
      const auto summaries = bench::load_summary_csv(table_in);
      if (summaries.empty()) throw ValidationError("no summaries in " + table_in);
      std::cout << report::emit_table(summaries);
    } else if (*show_cmd) {
      const auto boards = enumerate_solutions(BoardSize(show_n), show_limit);
      for (std::size_t k = 0; k < boards.size(); ++k) {
        if (k) std::cout << '\n';
        std::cout << report::render_board(boards[k]) << '\n';
      }
      if (boards.empty()) std::cout << "no solutions for n=" << show_n << '\n';
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
