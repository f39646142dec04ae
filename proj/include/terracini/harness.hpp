#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <string>
#include <vector>

#include "terracini/serialization.hpp"

namespace terracini {

/// A minimally Terracini set where none should exist, or a failed positive
/// claim. Carries the re-checkable certificate.
class CounterexampleFound : public Error {
 public:
  CounterexampleFound(const std::string& what, Json certificate)
      : Error(what), certificate_(std::move(certificate)) {}
  const Json& certificate() const noexcept { return certificate_; }

 private:
  Json certificate_;
};

/// Everything that determines a run. Empty grids and a negative trial count
/// mean the suite's defaults.
struct SuiteConfig {
  std::string suite;
  std::vector<int> n_values;
  std::vector<int> d_values;
  std::vector<int> x_values;
  int trials = -1;
  std::uint64_t seed = 1;
  std::vector<std::uint64_t> primes = {kDefaultPrime, kSecondPrime};
  std::size_t budget = kDefaultWitnessBudget;
  /// Scheduling only; reports do not depend on it.
  unsigned workers = 1;
};

struct CellReport {
  /// Parameters, expectation, tallies and one record per trial.
  Json body;
  bool passed = true;
  std::size_t counterexamples = 0;
  double seconds = 0;
};

struct SuiteReport {
  std::string suite;
  SuiteConfig config;
  std::vector<CellReport> cells;
  bool passed = true;
  std::size_t counterexamples = 0;
  double seconds = 0;

  /// Without timing the document is a pure function of the config.
  Json to_json(bool with_timing = true) const;
};

const std::vector<std::string>& suite_ids();

/// The suite's default grid and trial count, with `seed` and `primes` left at
/// the struct defaults.
SuiteConfig default_config(const std::string& suite);

/// Runs every cell; never throws on a counterexample, which is recorded
/// instead. Throws Error on an unknown suite or a grid outside the theorem.
SuiteReport run_suite(const SuiteConfig& cfg);

/// Throws CounterexampleFound with the first offending trial record.
void throw_if_counterexample(const SuiteReport& r);

/// Certificate for one scheme document: cohomology, membership when the input
/// is a point set, and optionally the critical scheme and its classification.
/// `prime` replaces the document's prime; `cross_primes` re-read the same
/// integers for a cross-check.
struct CheckOptions {
  bool minimality = true;
  bool critical = false;
  bool witness = false;
  std::optional<std::uint64_t> prime;
  std::vector<std::uint64_t> cross_primes;
  std::size_t budget = kDefaultWitnessBudget;
};

/// `d` defaults to the document's "d".
Json check_scheme(std::string_view text, std::optional<int> d, const CheckOptions& opt);

}  // namespace terracini
