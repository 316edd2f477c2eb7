#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "extensor/characters.hpp"
#include "extensor/envelope.hpp"
#include "extensor/ring_matrix.hpp"
#include "extensor/serialize.hpp"
#include "extensor/symfunc.hpp"
#include "extensor/verify.hpp"

namespace py = pybind11;
using namespace extensor;

namespace {

Partition part(const std::string& s) { return s.empty() ? Partition() : Partition::parse(s); }

RingMatrix<Rat> to_matrix(const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty()) throw std::invalid_argument("empty matrix");
  RingMatrix<Rat> m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size()) throw std::invalid_argument("ragged matrix");
    for (size_t j = 0; j < rows[i].size(); ++j)
      m.at(static_cast<int>(i) + 1, static_cast<int>(j) + 1) = rat_parse(rows[i][j]);
  }
  return m;
}

ImmKind imm_kind(const std::string& kind) {
  if (kind == "column") return ImmKind::Column;
  if (kind == "row") return ImmKind::Row;
  if (kind == "double") return ImmKind::Double;
  if (kind == "symm") return ImmKind::Symm;
  throw std::invalid_argument("unknown immanant kind '" + kind + "'");
}

QImmVariant variant(const std::string& v) {
  if (v == "G") return QImmVariant::G;
  if (v == "Gprime") return QImmVariant::GPrime;
  if (v == "Gcirc") return QImmVariant::GCirc;
  if (v == "Gcircprime") return QImmVariant::GCircPrime;
  throw std::invalid_argument("unknown variant '" + v + "'");
}

py::dict report_to_dict(const Report& r) {
  py::dict d;
  d["theorem"] = r.theorem;
  py::dict params;
  for (const auto& [k, v] : r.params) params[py::str(k)] = v;
  d["parameters"] = params;
  d["lhs_terms"] = r.lhs_terms;
  d["rhs_terms"] = r.rhs_terms;
  d["equal"] = r.equal;
  py::dict dims;
  for (const auto& [k, v] : r.dims) dims[py::str(k)] = v;
  d["dims"] = dims;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact symbolic engine for extended tensor algebras, immanants and "
            "quantum immanants";

  m.def("character",
        [](const std::string& lambda, const std::string& cycle_type) {
          Partition la = part(lambda);
          Partition ty = part(cycle_type);
          if (ty.weight() < la.weight()) {
            auto parts = ty.parts();
            parts.insert(parts.end(), la.weight() - ty.weight(), 1);
            ty = Partition(parts);
          }
          return rat_str(character(la, ty));
        },
        py::arg("lam"), py::arg("cycle_type"),
        "irreducible character of S_p at a cycle type, exact rational string");

  m.def("character_dim", [](const std::string& lambda) { return rat_str(character_dim(part(lambda))); });

  m.def("schur", [](const std::string& lambda, const std::vector<std::string>& values) {
    std::vector<Rat> v;
    for (const auto& s : values) v.push_back(rat_parse(s));
    return rat_str(sym_eval(SymKind::Schur, part(lambda), v));
  });

  m.def("kostka",
        [](const std::string& lambda, const std::string& mu) { return kostka(part(lambda), part(mu)); });

  m.def("capelli", [](int r, int n) { return capelli(r, n).to_string(); }, py::arg("r"), py::arg("n"));

  m.def("quantum_immanant",
        [](const std::string& v, const std::string& lambda, int n) {
          return quantum_immanant(variant(v), part(lambda), n).to_string();
        },
        py::arg("variant"), py::arg("lam"), py::arg("n"));

  m.def("quantum_preimmanant",
        [](const std::string& v, int p, int n) {
          return quantum_preimmanant(variant(v), p, n).to_string();
        },
        py::arg("variant"), py::arg("p"), py::arg("n"));

  m.def("hc_eigenvalue",
        [](const std::string& element, const std::string& mu, int n) {
          auto colon = element.find(':');
          if (colon == std::string::npos)
            throw std::invalid_argument("element form: capelli:r | G:lambda | Gcirc:lambda");
          std::string head = element.substr(0, colon), tail = element.substr(colon + 1);
          PBW u;
          if (head == "capelli") u = capelli(std::stoi(tail), n);
          else if (head == "G") u = quantum_immanant(QImmVariant::G, part(tail), n);
          else if (head == "Gcirc") u = quantum_immanant(QImmVariant::GCirc, part(tail), n);
          else throw std::invalid_argument("unknown element '" + head + "'");
          return rat_str(hc_eigenvalue(u, part(mu), n));
        },
        py::arg("element"), py::arg("mu"), py::arg("n"));

  m.def("immanant",
        [](const std::string& kind, const std::string& lambda,
           const std::vector<std::vector<std::string>>& matrix) {
          return rat_str(imm(imm_kind(kind), part(lambda), to_matrix(matrix)));
        },
        py::arg("kind"), py::arg("lam"), py::arg("matrix"));

  m.def("preimm_p",
        [](int p, const std::vector<std::vector<std::string>>& matrix) {
          return preimm_p(p, to_matrix(matrix)).to_string();
        },
        py::arg("p"), py::arg("matrix"));

  m.def("content_sum",
        [](const std::string& lambda, const std::string& mu, int n, const std::string& conv) {
          return rat_str(content_sum_eval(part(lambda), part(mu), n,
                                          conv == "A" ? ContentConvention::A : ContentConvention::B));
        },
        py::arg("lam"), py::arg("mu"), py::arg("n"), py::arg("convention") = "B");

  m.def("suite_names", [] { return suite_names(); });

  m.def("run_verify",
        [](const std::string& suite, int n, int nprime, int p, int q, int r, std::uint64_t seed,
           bool parallel) {
          SuiteOptions opt;
          opt.n = n;
          opt.nprime = nprime;
          opt.p = p;
          opt.q = q;
          opt.r = r;
          opt.seed = seed;
          opt.parallel = parallel;
          auto results = run_suites(suite, opt);
          py::list out;
          for (const auto& s : results) {
            py::dict d;
            d["suite"] = s.suite;
            d["ok"] = s.ok();
            py::list cases;
            for (const auto& c : s.cases) cases.append(report_to_dict(c));
            d["cases"] = cases;
            out.append(d);
          }
          return out;
        },
        py::arg("suite"), py::arg("n") = -1, py::arg("nprime") = -1, py::arg("p") = -1,
        py::arg("q") = -1, py::arg("r") = -1, py::arg("seed") = 12345,
        py::arg("parallel") = false);

#ifdef VERSION_INFO
#define STR2(x) #x
#define STR(x) STR2(x)
  m.attr("__version__") = STR(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
