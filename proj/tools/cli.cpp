// Command-line harness: exact computation and verification suites with
// reproducible JSON reports.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "extensor/characters.hpp"
#include "extensor/envelope.hpp"
#include "extensor/ring_matrix.hpp"
#include "extensor/serialize.hpp"
#include "extensor/symfunc.hpp"
#include "extensor/tensor.hpp"
#include "extensor/verify.hpp"

using nlohmann::ordered_json;
using namespace extensor;

namespace {

ordered_json kv_to_json(const std::vector<std::pair<std::string, std::string>>& kv) {
  ordered_json j = ordered_json::object();
  for (const auto& [k, v] : kv) j[k] = v;
  return j;
}

ordered_json report_json(const Report& r) {
  ordered_json j;
  j["theorem"] = r.theorem;
  j["parameters"] = kv_to_json(r.params);
  j["lhs_terms"] = r.lhs_terms;
  j["rhs_terms"] = r.rhs_terms;
  j["equal"] = r.equal;
  j["dims"] = kv_to_json(r.dims);
  return j;
}

ordered_json suite_json(const SuiteResult& s, const SuiteOptions& opt, bool timings) {
  ordered_json j;
  j["suite"] = s.suite;
  ordered_json meta;
  if (opt.n > 0) meta["n"] = opt.n;
  if (opt.nprime > 0) meta["nprime"] = opt.nprime;
  if (opt.p >= 0) meta["p"] = opt.p;
  if (opt.q >= 0) meta["q"] = opt.q;
  if (opt.r > 0) meta["r"] = opt.r;
  meta["seed"] = opt.seed;
  j["parameters"] = meta;
  j["cases"] = ordered_json::array();
  for (const auto& c : s.cases) j["cases"].push_back(report_json(c));
  j["ok"] = s.ok();
  if (timings) j["elapsed_ms"] = s.elapsed_ms;
  return j;
}

RingMatrix<Rat> parse_matrix(const std::string& text) {
  std::vector<std::vector<Rat>> rows;
  std::stringstream ss(text);
  std::string rowtext;
  while (std::getline(ss, rowtext, ';')) {
    std::vector<Rat> row;
    std::stringstream rs(rowtext);
    std::string cell;
    while (std::getline(rs, cell, ',')) row.push_back(rat_parse(cell));
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::invalid_argument("empty matrix");
  RingMatrix<Rat> m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size()) throw std::invalid_argument("ragged matrix");
    for (size_t j = 0; j < rows[i].size(); ++j)
      m.at(static_cast<int>(i) + 1, static_cast<int>(j) + 1) = rows[i][j];
  }
  return m;
}

QImmVariant parse_variant(const std::string& v) {
  if (v == "G") return QImmVariant::G;
  if (v == "Gprime") return QImmVariant::GPrime;
  if (v == "Gcirc") return QImmVariant::GCirc;
  if (v == "Gcircprime") return QImmVariant::GCircPrime;
  throw std::invalid_argument("unknown variant '" + v + "'");
}

int run_verify(const std::string& suite, const SuiteOptions& opt, const std::string& json_path,
               bool timings) {
  auto results = run_suites(suite, opt);
  ordered_json doc = ordered_json::array();
  bool all_ok = true;
  for (const auto& s : results) {
    doc.push_back(suite_json(s, opt, timings));
    for (const auto& c : s.cases) {
      if (!c.equal) {
        all_ok = false;
        std::cout << "FAIL " << s.suite << " :: " << c.theorem << " "
                  << kv_to_json(c.params).dump() << "\n";
      }
    }
    std::cout << (s.ok() ? "ok   " : "FAIL ") << s.suite << " (" << s.cases.size() << " cases";
    if (timings) std::cout << ", " << s.elapsed_ms << " ms";
    std::cout << ")\n";
  }
  if (!json_path.empty()) {
    std::ofstream f(json_path);
    f << (doc.size() == 1 ? doc[0] : doc).dump(2) << "\n";
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact tensor-algebra computation and verification harness"};
  app.require_subcommand(1);

  SuiteOptions opt;
  std::string suite, json_path, lambda_str, mu_str, cycle_str, variant = "Gcirc";
  std::string matrix_str, kind = "column", element;
  std::size_t max_terms = 0;
  bool timings = false;

  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("suite", suite, "suite name or 'all'")->required();
  ver->add_option("--n", opt.n);
  ver->add_option("--nprime", opt.nprime);
  ver->add_option("--p", opt.p);
  ver->add_option("--q", opt.q);
  ver->add_option("--r", opt.r);
  ver->add_option("--lambda", lambda_str);
  ver->add_option("--mu", mu_str);
  ver->add_option("--seed", opt.seed);
  ver->add_option("--json", json_path, "write the JSON report here");
  ver->add_flag("--parallel", opt.parallel, "run independent suites in parallel");
  ver->add_option("--max-terms", max_terms, "abort normal orderings beyond this term count");
  ver->add_flag("--timings", timings, "include elapsed_ms in reports");

  auto* comp = app.add_subcommand("compute", "print one object");
  std::string what;
  comp->add_option("what", what,
                   "character|capelli|quantum-immanant|quantum-preimmanant|immanant|preimm-p|"
                   "jm-spectrum|hc-eigenvalue")
      ->required();
  comp->add_option("--n", opt.n);
  comp->add_option("--p", opt.p);
  comp->add_option("--r", opt.r);
  comp->add_option("--lambda", lambda_str);
  comp->add_option("--mu", mu_str);
  comp->add_option("--cycle", cycle_str, "cycle type partition");
  comp->add_option("--variant", variant, "G|Gprime|Gcirc|Gcircprime");
  comp->add_option("--kind", kind, "column|row|double|symm");
  comp->add_option("--matrix", matrix_str, "rational matrix 'a,b;c,d'");
  comp->add_option("--element", element, "capelli:r | G:lambda | Gcirc:lambda");
  comp->add_option("--max-terms", max_terms);

  CLI11_PARSE(app, argc, argv);
  set_term_budget(max_terms);

  try {
    if (ver->parsed()) {
      if (!lambda_str.empty()) {
        opt.lambda = Partition::parse(lambda_str);
        opt.has_lambda = true;
      }
      if (!mu_str.empty()) {
        opt.mu = Partition::parse(mu_str);
        opt.has_mu = true;
      }
      bool known = suite == "all";
      for (const auto& nm : suite_names()) known = known || nm == suite;
      if (!known) {
        std::cerr << "unknown suite '" << suite << "'\n";
        return 2;
      }
      return run_verify(suite, opt, json_path, timings);
    }

    // compute
    if (what == "character") {
      Partition lambda = Partition::parse(lambda_str);
      Partition type = Partition::parse(cycle_str);
      if (type.weight() < lambda.weight()) {
        // Pad the cycle type with fixed points.
        auto parts = type.parts();
        parts.insert(parts.end(), lambda.weight() - type.weight(), 1);
        type = Partition(parts);
      }
      std::cout << rat_str(character(lambda, type)) << "\n";
    } else if (what == "capelli") {
      if (opt.r < 1 || opt.n < 1) throw std::invalid_argument("capelli needs --r and --n");
      std::cout << capelli(opt.r, opt.n).to_string() << "\n";
    } else if (what == "quantum-immanant") {
      std::cout << quantum_immanant(parse_variant(variant), Partition::parse(lambda_str), opt.n)
                       .to_string()
                << "\n";
    } else if (what == "quantum-preimmanant") {
      std::cout << quantum_preimmanant(parse_variant(variant), opt.p, opt.n).to_string() << "\n";
    } else if (what == "immanant") {
      auto X = parse_matrix(matrix_str);
      ImmKind k = kind == "column"  ? ImmKind::Column
                  : kind == "row"   ? ImmKind::Row
                  : kind == "double" ? ImmKind::Double
                                     : ImmKind::Symm;
      std::cout << rat_str(imm(k, Partition::parse(lambda_str), X)) << "\n";
    } else if (what == "preimm-p") {
      auto X = parse_matrix(matrix_str);
      std::cout << preimm_p(opt.p, X).to_string() << "\n";
    } else if (what == "jm-spectrum") {
      std::cout << jm_spectrum_json(Partition::parse(lambda_str)).dump(2) << "\n";
    } else if (what == "hc-eigenvalue") {
      Partition mu = Partition::parse(mu_str);
      PBW u;
      auto colon = element.find(':');
      if (colon == std::string::npos) throw std::invalid_argument("--element form: capelli:r or Gcirc:lambda");
      std::string head = element.substr(0, colon), tail = element.substr(colon + 1);
      if (head == "capelli")
        u = capelli(std::stoi(tail), opt.n);
      else if (head == "G")
        u = quantum_immanant(QImmVariant::G, Partition::parse(tail), opt.n);
      else if (head == "Gcirc")
        u = quantum_immanant(QImmVariant::GCirc, Partition::parse(tail), opt.n);
      else
        throw std::invalid_argument("unknown element '" + head + "'");
      std::cout << rat_str(hc_eigenvalue(u, mu, opt.n)) << "\n";
    } else {
      std::cerr << "unknown compute target '" << what << "'\n";
      return 2;
    }
  } catch (const TermBudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
