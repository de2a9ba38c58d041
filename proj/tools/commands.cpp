#include "commands.hpp"

#include <optional>
#include <thread>

#include "CLI11.hpp"
#include "report.hpp"
#include "verify.hpp"

namespace nilcent {

namespace {

constexpr int kUsage = 2;

struct Flags {
  std::string kind;
  std::string partition;
  int max_n = 0;
  std::string weights;
  std::uint64_t seed = 1;
  std::size_t samples = 100;
  unsigned jobs = 1;
  std::string format;
  bool no_timings = false;
  bool extend_so9 = false;
};

OutputOptions output_options(const Flags& f, Format fallback) {
  OutputOptions o;
  o.format = f.format.empty() ? fallback : (f.format == "tsv" || f.format == "text") ? Format::Tsv : Format::Json;
  o.timings = !f.no_timings;
  return o;
}

VerifyOptions verify_options(const Flags& f) {
  VerifyOptions o;
  if (!f.weights.empty()) o.weights = parse_weights(f.weights);
  o.seed = f.seed;
  o.samples = f.samples;
  return o;
}

int cmd_verify(const Flags& f, std::ostream& out) {
  const Partition p = parse_partition(f.partition);
  const AlgebraKind kind = parse_kind(f.kind);
  if (const auto v = admissibility_violation(p, kind); !v.empty()) throw InadmissibleError(v);
  const VerifyReport r = verify(kind, p, verify_options(f));
  const OutputOptions o = output_options(f, Format::Json);
  write_verify_header(out, o);
  write_verify(out, r, o);
  return r.all_pass() ? 0 : 1;
}

int cmd_sweep(const Flags& f, std::ostream& out) {
  if (f.max_n < 1) throw ParseError("--max-n must be at least 1");
  const AlgebraKind kind = parse_kind(f.kind);
  const unsigned jobs = f.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : f.jobs;
  const auto reports = sweep(kind, f.max_n, verify_options(f), jobs);
  const OutputOptions o = output_options(f, Format::Json);
  write_verify_header(out, o);
  for (const auto& r : reports) write_verify(out, r, o);
  const SweepSummary s = summarize(kind, f.max_n, reports);
  write_summary(out, s, o);
  return s.failed == 0 ? 0 : 1;
}

int cmd_counterexample(const Flags& f, std::ostream& out) {
  const OutputOptions o = output_options(f, Format::Json);
  const CounterexampleReport r = so8_counterexample(f.samples, f.seed);
  write_counterexample(out, r, o, true);
  // The so_9 run is experimental and does not affect the exit code.
  if (f.extend_so9) write_counterexample(out, so9_extension(f.samples, f.seed), o, false);
  return r.all_pass() ? 0 : 1;
}

int cmd_export(const Flags& f, std::ostream& out) {
  const Partition p = parse_partition(f.partition);
  const AlgebraKind kind = parse_kind(f.kind);
  const Model model = build_model(p, kind);
  const AlgebraPtr g = kind == AlgebraKind::GeneralLinear ? make_gl_centralizer(p).algebra : sigma_split(model).z;
  write_structure(out, *g, output_options(f, Format::Tsv));
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Centralisers of nilpotent elements in gl, sp and so: index, stabilisers and generic-stabiliser checks", "nilcent"};
  app.require_subcommand(1);
  Flags f;

  const std::vector<std::string> kinds{"gl", "sp", "so"};
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", f.seed, "Base seed for every random choice")->capture_default_str();
    sub->add_option("--samples", f.samples, "Random trials per randomized check")->capture_default_str()->check(CLI::PositiveNumber);
    sub->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"json", "tsv"}));
    sub->add_flag("--no-timings", f.no_timings, "Omit timing fields so reports are byte-identical across runs");
  };

  auto* verify = app.add_subcommand("verify", "Run the check battery on one partition");
  verify->add_option("--kind", f.kind, "Algebra type")->required()->check(CLI::IsMember(kinds));
  verify->add_option("--partition", f.partition, "Jordan block sizes, e.g. 5,3,3,1")->required();
  verify->add_option("--weights", f.weights, "Comma-separated weights a_i for gl and sp, largest block first");
  add_common(verify);

  auto* sweep = app.add_subcommand("sweep", "Verify every admissible partition of every n up to --max-n");
  sweep->add_option("--kind", f.kind, "Algebra type")->required()->check(CLI::IsMember(kinds));
  sweep->add_option("--max-n", f.max_n, "Largest n")->required()->check(CLI::PositiveNumber);
  sweep->add_option("--jobs", f.jobs, "Worker threads (0: one per core)")->capture_default_str();
  add_common(sweep);

  auto* counter = app.add_subcommand("counterexample", "Structural facts for so_8 with partition [5,3]");
  counter->add_flag("--extend-so9", f.extend_so9, "Also run so_9 with partition [5,3,1] (experimental)");
  add_common(counter);

  auto* exp = app.add_subcommand("export-structure", "Dump the structure constants of the centraliser");
  exp->add_option("--kind", f.kind, "Algebra type")->required()->check(CLI::IsMember(kinds));
  exp->add_option("--partition", f.partition, "Jordan block sizes")->required();
  exp->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(f, out);
    if (sweep->parsed()) return cmd_sweep(f, out);
    if (counter->parsed()) return cmd_counterexample(f, out);
    return cmd_export(f, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InadmissibleError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const WeightError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace nilcent
