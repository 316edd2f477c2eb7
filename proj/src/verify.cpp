#include "extensor/verify.hpp"

#include <chrono>
#include <future>
#include <stdexcept>

namespace extensor {

namespace {

template <class F>
void append(std::vector<Report>& out, F&& f) {
  auto v = f();
  out.insert(out.end(), v.begin(), v.end());
}

std::vector<Report> dispatch(const std::string& name, const SuiteOptions& o) {
  auto n = [&](int d) { return o.n > 0 ? o.n : d; };
  auto np = [&](int d) { return o.nprime > 0 ? o.nprime : d; };
  auto p = [&](int d) { return o.p >= 0 ? o.p : d; };
  auto q = [&](int d) { return o.q >= 0 ? o.q : d; };
  auto r = [&](int d) { return o.r > 0 ? o.r : d; };

  if (name == "ccr") return verify_ccr(n(4));
  if (name == "pairing") return verify_pairing(n(3), p(3));
  if (name == "euler") return verify_euler(n(3), p(5));
  if (name == "schur-weyl") {
    if (o.n > 0 || o.p >= 0 || o.q >= 0) return verify_schur_weyl(n(2), p(2), q(0));
    std::vector<Report> out;
    append(out, [] { return verify_schur_weyl(2, 2, 0); });
    append(out, [] { return verify_schur_weyl(2, 2, 1); });
    append(out, [] { return verify_schur_weyl(2, 1, 2); });
    append(out, [] { return verify_schur_weyl(3, 2, 0); });
    return out;
  }
  if (name == "howe") {
    if (o.n > 0 || o.p >= 0 || o.q >= 0 || o.nprime > 0)
      return verify_howe(n(2), np(2), p(2), q(0));
    std::vector<Report> out;
    append(out, [] { return verify_howe(2, 2, 2, 0); });
    append(out, [] { return verify_howe(2, 2, 2, 1); });
    return out;
  }
  if (name == "capelli-t") {
    if (o.n > 0 || o.nprime > 0 || o.p >= 0 || o.r > 0)
      return verify_capelli_t(n(2), np(2), p(2), r(1));
    std::vector<Report> out;
    for (int nn = 1; nn <= 2; ++nn)
      for (int nnp = 1; nnp <= 2; ++nnp)
        for (int pp = 1; pp <= 3; ++pp)
          for (int rr = 1; rr <= std::min(pp, nn); ++rr)
            append(out, [&] { return verify_capelli_t(nn, nnp, pp, rr); });
    return out;
  }
  if (name == "fft-sl") {
    if (o.n > 0 || o.nprime > 0 || o.p >= 0) return verify_fft_sl(n(2), np(2), p(2));
    std::vector<Report> out;
    append(out, [] { return verify_fft_sl(2, 1, 2); });
    append(out, [] { return verify_fft_sl(2, 2, 2); });
    append(out, [] { return verify_fft_sl(2, 2, 4); });
    return out;
  }
  if (name == "immanant-identities") return verify_immanant_identities(o.seed);
  if (name == "preimm-expansions") return verify_preimm_expansions(o.seed);
  if (name == "jm-spectrum") return verify_jm_spectrum(p(5));
  if (name == "centrality") return verify_centrality(n(3), p(3));
  if (name == "qimm-equalities") return verify_qimm_equalities(n(3), p(4));
  if (name == "eigenvalues") return verify_eigenvalues(n(3), p(3));
  if (name == "higher-capelli-weyl") {
    if (o.n > 0 || o.nprime > 0 || o.p >= 0)
      return verify_higher_capelli_weyl(n(2), np(2), p(3));
    std::vector<Report> out;
    for (int nn = 1; nn <= 2; ++nn)
      for (int nnp = 1; nnp <= 2; ++nnp)
        append(out, [&] { return verify_higher_capelli_weyl(nn, nnp, 3); });
    return out;
  }
  if (name == "higher-capelli-t") return verify_higher_capelli_t(n(2), np(2), p(2));
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"ccr",          "pairing",       "euler",
          "schur-weyl",   "howe",          "capelli-t",
          "fft-sl",       "immanant-identities", "preimm-expansions",
          "jm-spectrum",  "centrality",    "qimm-equalities",
          "eigenvalues",  "higher-capelli-weyl", "higher-capelli-t"};
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opt) {
  auto start = std::chrono::steady_clock::now();
  SuiteResult res;
  res.suite = name;
  res.cases = dispatch(name, opt);
  res.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return res;
}

std::vector<SuiteResult> run_suites(const std::string& name, const SuiteOptions& opt) {
  std::vector<std::string> names = name == "all" ? suite_names() : std::vector<std::string>{name};
  std::vector<SuiteResult> out;
  if (opt.parallel && names.size() > 1) {
    std::vector<std::future<SuiteResult>> futs;
    futs.reserve(names.size());
    for (const auto& nm : names)
      futs.push_back(std::async(std::launch::async, [nm, opt] { return run_suite(nm, opt); }));
    for (auto& f : futs) out.push_back(f.get());
  } else {
    for (const auto& nm : names) out.push_back(run_suite(nm, opt));
  }
  return out;
}

}  // namespace extensor
