#include "report.hpp"

#include <cmath>

#include "json.hpp"

namespace nilcent {

using Json = nlohmann::ordered_json;

namespace {

double round2(double ms) { return std::round(ms * 100.0) / 100.0; }

Json facts_json(const CounterexampleReport& r) {
  Json facts = Json::array();
  for (const auto& f : r.facts) facts.push_back({{"name", f.name}, {"expected", f.expected}, {"actual", f.actual}, {"pass", f.pass}});
  return facts;
}

Json sampling_json(const SampleStats& s) {
  return {{"probabilistic", true},
          {"seed", s.seed},
          {"regular_samples", s.samples},
          {"draws", s.draws},
          {"criterion_passes", s.criterion_passes}};
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : sep) + s;
  return out;
}

}  // namespace

SweepSummary summarize(AlgebraKind kind, int max_n, const std::vector<VerifyReport>& reports) {
  SweepSummary s;
  s.kind = kind;
  s.max_n = max_n;
  s.reports = reports.size();
  for (const auto& r : reports) {
    if (r.all_pass())
      ++s.passed;
    else {
      ++s.failed;
      s.failed_partitions.push_back(r.partition.to_string());
    }
    if (r.vinberg_ok()) ++s.vinberg_ok;
  }
  return s;
}

void write_verify_header(std::ostream& out, const OutputOptions& opt) {
  if (opt.format != Format::Tsv) return;
  out << "kind\tpartition\tn\trank_of_g\tdim_z\tindex_z\tpaper_covector_stab_dim\tso_case\tvinberg_ok\tpassed\tfailed\t"
         "skipped\tfailed_checks\tseed";
  if (opt.timings) out << "\ttotal_ms";
  out << "\n";
}

void write_verify(std::ostream& out, const VerifyReport& r, const OutputOptions& opt) {
  if (opt.format == Format::Tsv) {
    std::vector<std::string> failed;
    for (const auto& c : r.checks)
      if (c.status == CheckStatus::Fail) failed.push_back(c.name);
    out << to_string(r.kind) << '\t' << r.partition.to_string() << '\t' << r.n << '\t' << r.rank_of_g << '\t' << r.dim_z
        << '\t' << r.index_z << '\t' << (r.paper_covector_stab_dim ? std::to_string(*r.paper_covector_stab_dim) : "NA")
        << '\t' << r.so_case.value_or("NA") << '\t' << (r.vinberg_ok() ? "true" : "false") << '\t'
        << r.count(CheckStatus::Pass) << '\t' << r.count(CheckStatus::Fail) << '\t' << r.count(CheckStatus::Skipped) << '\t'
        << (failed.empty() ? "-" : join(failed, ",")) << '\t' << r.seed;
    if (opt.timings) out << '\t' << round2(r.total_ms);
    out << "\n";
    return;
  }

  Json j;
  j["kind"] = to_string(r.kind);
  j["partition"] = r.partition.sizes();
  j["n"] = r.n;
  j["rank_of_g"] = r.rank_of_g;
  j["dim_z"] = r.dim_z;
  j["index_z"] = r.index_z;
  j["vinberg_ok"] = r.vinberg_ok();
  j["paper_covector_stab_dim"] = r.paper_covector_stab_dim ? Json(*r.paper_covector_stab_dim) : Json(nullptr);
  if (r.so_case) j["so_case"] = *r.so_case;
  Json cov = Json::object();
  for (const auto& [name, value] : r.covector) cov[name] = to_string(value);
  j["covector"] = cov;
  Json checks = Json::object(), details = Json::object();
  for (const auto& c : r.checks) {
    checks[c.name] = to_string(c.status);
    if (!c.detail.empty()) details[c.name] = c.detail;
  }
  j["theorem_checks"] = checks;
  j["check_details"] = details;
  j["passed"] = r.count(CheckStatus::Pass);
  j["failed"] = r.count(CheckStatus::Fail);
  j["skipped"] = r.count(CheckStatus::Skipped);
  if (r.so8_facts) j["so8_subregular"] = {{"facts", facts_json(*r.so8_facts)}, {"sampling", sampling_json(r.so8_facts->sampling)}};
  j["seed"] = r.seed;
  if (opt.timings) j["timings"] = {{"total_ms", round2(r.total_ms)}, {"index_ms", round2(r.index_ms)}};
  out << j.dump() << "\n";
}

void write_summary(std::ostream& out, const SweepSummary& s, const OutputOptions& opt) {
  if (opt.format == Format::Tsv) {
    out << "# summary\tkind=" << to_string(s.kind) << "\tmax_n=" << s.max_n << "\treports=" << s.reports
        << "\tpassed=" << s.passed << "\tfailed=" << s.failed << "\tvinberg_ok=" << s.vinberg_ok << "\n";
    return;
  }
  Json j;
  j["summary"] = {{"kind", to_string(s.kind)},
                  {"max_n", s.max_n},
                  {"reports", s.reports},
                  {"passed", s.passed},
                  {"failed", s.failed},
                  {"vinberg_ok", s.vinberg_ok},
                  {"failed_partitions", s.failed_partitions}};
  out << j.dump() << "\n";
}

void write_counterexample(std::ostream& out, const CounterexampleReport& r, const OutputOptions& opt, bool header) {
  if (opt.format == Format::Tsv) {
    if (header) out << "algebra\tfact\texpected\tactual\tpass\n";
    for (const auto& f : r.facts)
      out << r.algebra << '\t' << f.name << '\t' << f.expected << '\t' << f.actual << '\t' << (f.pass ? "true" : "false") << "\n";
    out << r.algebra << "\tsampled regular stabilisers passing the criterion (probabilistic, seed " << r.sampling.seed
        << ")\t-\t" << r.sampling.criterion_passes << "/" << r.sampling.samples << "\t-\n";
    return;
  }
  Json j;
  j["algebra"] = r.algebra;
  j["experimental"] = r.experimental;
  j["all_pass"] = r.all_pass();
  j["facts"] = facts_json(r);
  j["sampling"] = sampling_json(r.sampling);
  out << j.dump() << "\n";
}

void write_structure(std::ostream& out, const LieAlgebra& g, const OutputOptions& opt) {
  if (opt.format == Format::Tsv) {
    out << g.structure_text();
    return;
  }
  Json entries = Json::array();
  for (std::size_t u = 0; u < g.dim(); ++u)
    for (std::size_t v = u + 1; v < g.dim(); ++v)
      for (const auto& e : g.structure(u, v)) entries.push_back({u, v, e.w, to_string(e.value)});
  Json j;
  j["algebra"] = g.name();
  j["basis"] = g.labels();
  j["structure"] = entries;
  out << j.dump() << "\n";
}

}  // namespace nilcent
