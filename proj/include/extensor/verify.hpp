#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "extensor/partition.hpp"

namespace extensor {

// One verified identity instance. `theorem` names the identity by content;
// params/dims are ordered key-value lists so serialization is reproducible.
struct Report {
  std::string theorem;
  std::vector<std::pair<std::string, std::string>> params;
  long lhs_terms = 0;
  long rhs_terms = 0;
  bool equal = false;
  std::vector<std::pair<std::string, std::string>> dims;

  static Report make(std::string thm, std::vector<std::pair<std::string, std::string>> p,
                     bool eq, long lt = 0, long rt = 0,
                     std::vector<std::pair<std::string, std::string>> d = {}) {
    return Report{std::move(thm), std::move(p), lt, rt, eq, std::move(d)};
  }
};

struct SuiteOptions {
  int n = -1, nprime = -1, p = -1, q = -1, r = -1;
  bool has_lambda = false, has_mu = false;
  Partition lambda, mu;
  std::uint64_t seed = 12345;
  bool parallel = false;
};

struct SuiteResult {
  std::string suite;
  std::vector<Report> cases;
  long elapsed_ms = 0;
  bool ok() const {
    for (const auto& c : cases)
      if (!c.equal) return false;
    return true;
  }
};

// Individual suites. Sizes default to the documented verification ranges
// when the corresponding option is unset.
std::vector<Report> verify_ccr(int n);
std::vector<Report> verify_pairing(int n, int pmax);
std::vector<Report> verify_euler(int n, int totalmax);
std::vector<Report> verify_schur_weyl(int n, int p, int q);
std::vector<Report> verify_howe(int n, int nprime, int p, int q);
std::vector<Report> verify_capelli_t(int n, int nprime, int p, int r);
std::vector<Report> verify_fft_sl(int n, int nprime, int p);
std::vector<Report> verify_immanant_identities(std::uint64_t seed);
std::vector<Report> verify_preimm_expansions(std::uint64_t seed);
std::vector<Report> verify_jm_spectrum(int pmax);
std::vector<Report> verify_centrality(int n, int pmax);
std::vector<Report> verify_qimm_equalities(int n, int pmax);
std::vector<Report> verify_eigenvalues(int n, int wmax);
std::vector<Report> verify_higher_capelli_weyl(int n, int nprime, int pmax);
std::vector<Report> verify_higher_capelli_t(int n, int nprime, int pmax);

// All suite names accepted by run_suite, in canonical order.
std::vector<std::string> suite_names();

// Runs one suite (or "all"); unknown names throw std::invalid_argument.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt);
std::vector<SuiteResult> run_suites(const std::string& name, const SuiteOptions& opt);

}  // namespace extensor
