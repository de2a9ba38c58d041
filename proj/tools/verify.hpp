#pragma once

// The per-partition check battery behind `verify` and `sweep`.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nilcent/covectors.hpp"
#include "nilcent/genstab.hpp"
#include "nilcent/jordan.hpp"

namespace nilcent {

enum class CheckStatus { Pass, Fail, Skipped };

std::string to_string(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Skipped;
  std::string detail;
};

struct VerifyOptions {
  std::optional<Weights> weights;  // stored block order; default weights otherwise
  std::uint64_t seed = 1;
  std::size_t samples = 100;       // bracket-oracle pairs and criterion samples
};

struct VerifyReport {
  AlgebraKind kind = AlgebraKind::GeneralLinear;
  Partition partition{{1}};
  int n = 0;
  int rank_of_g = 0;
  std::size_t dim_z = 0;
  std::size_t index_z = 0;
  std::optional<std::size_t> paper_covector_stab_dim;
  std::optional<std::string> so_case;
  std::vector<std::pair<std::string, Scalar>> covector;  // nonzero entries of the distinguished covector by basis label
  std::vector<CheckResult> checks;
  std::optional<CounterexampleReport> so8_facts;
  std::uint64_t seed = 0;
  double total_ms = 0;
  double index_ms = 0;

  bool vinberg_ok() const { return index_z >= static_cast<std::size_t>(rank_of_g); }
  std::size_t count(CheckStatus s) const;
  bool all_pass() const { return count(CheckStatus::Fail) == 0; }
};

/// Names of every check, in report order. Each report lists all of them.
const std::vector<std::string>& check_names();

/// Parses "1,-2,3/2" into weights.
Weights parse_weights(const std::string& text);

/// Throws InadmissibleError, WeightError.
VerifyReport verify(AlgebraKind kind, const Partition& p, const VerifyOptions& options);

/// Seed for one partition of a sweep, independent of scheduling.
std::uint64_t derive_seed(std::uint64_t base, AlgebraKind kind, const Partition& p);

/// Admissible partitions of 1..max_n, n ascending, lexicographically
/// descending within each n.
std::vector<Partition> sweep_partitions(AlgebraKind kind, int max_n);

/// Runs verify on every partition with `jobs` worker threads; results come
/// back in sweep_partitions order.
std::vector<VerifyReport> sweep(AlgebraKind kind, int max_n, const VerifyOptions& options, unsigned jobs);

}  // namespace nilcent
