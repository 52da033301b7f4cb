#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jorcon/algebra.hpp"
#include "jorcon/serialize.hpp"

namespace jorcon {

enum class CheckStatus { Pass, Fail, ExpectedPole };
std::string status_name(CheckStatus s);

struct CheckRecord {
  std::string id;
  std::string anchor;  // the claim being checked
  CheckStatus status = CheckStatus::Fail;
  bool expected = true;  // status matches the expectation
  std::string detail;
  double elapsed = 0;  // seconds
};

struct SuiteConfig {
  std::string suite = "all";  // rmatrix, relation-equivalence, contraction, coupled, fock, all
  std::optional<int> n;
  std::optional<int> m;
  std::vector<Sigma> sigmas{Sigma::Boson, Sigma::Fermion};
  std::vector<int> variants{1, 2};
  std::vector<Basis> bases{Basis::Plain, Basis::Tilde};
  int cutoff = 6;
  int threads = 0;  // 0: JORCON_THREADS or the hardware concurrency
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckRecord> records;
  double elapsed = 0;

  int count(CheckStatus s) const;
  int unexpected() const;
  bool ok() const { return unexpected() == 0 && !records.empty(); }
};

const std::vector<std::string>& suite_names();

// Throws InvalidArgument for an unknown suite and TruncationTooSmall for a
// Fock cutoff below 4; individual check failures are recorded, not thrown.
SuiteReport run_suite(const SuiteConfig& config);

int worker_count(int requested);

json report_json(const SuiteReport& r, bool timing);
std::string report_text(const SuiteReport& r, bool timing);

} // namespace jorcon
