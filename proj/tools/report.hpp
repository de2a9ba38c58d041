#pragma once

// Serialisation of verify, sweep and counterexample reports as
// newline-delimited JSON or TSV.

#include <ostream>
#include <string>
#include <vector>

#include "verify.hpp"

namespace nilcent {

enum class Format { Json, Tsv };

struct OutputOptions {
  Format format = Format::Json;
  bool timings = true;
};

struct SweepSummary {
  AlgebraKind kind = AlgebraKind::GeneralLinear;
  int max_n = 0;
  std::size_t reports = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t vinberg_ok = 0;
  std::vector<std::string> failed_partitions;
};

SweepSummary summarize(AlgebraKind kind, int max_n, const std::vector<VerifyReport>& reports);

void write_verify_header(std::ostream& out, const OutputOptions& opt);
void write_verify(std::ostream& out, const VerifyReport& r, const OutputOptions& opt);
void write_summary(std::ostream& out, const SweepSummary& s, const OutputOptions& opt);
void write_counterexample(std::ostream& out, const CounterexampleReport& r, const OutputOptions& opt, bool header);
void write_structure(std::ostream& out, const LieAlgebra& g, const OutputOptions& opt);

}  // namespace nilcent
