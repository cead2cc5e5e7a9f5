#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "weber/chains.hpp"
#include "weber/error.hpp"
#include "weber/hecke.hpp"
#include "weber/modpoly.hpp"
#include "weber/reports.hpp"
#include "weber/ssgraph.hpp"
#include "weber/weberaction.hpp"

namespace py = pybind11;
using namespace weber;

namespace {

using Terms = std::vector<std::tuple<int, int, std::string>>;

Terms terms_of(const BiPoly& P) {
  Terms out;
  for (const auto& [k, c] : P.terms()) out.emplace_back(k.first, k.second, c.to_string());
  return out;
}

std::vector<std::string> encode_all(const std::vector<GF2Elt>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(x.encode());
  return out;
}

py::dict chain_dict(std::uint64_t p, std::uint64_t a, std::uint64_t b, const std::string& variant) {
  GF2Field f = make_field(p);
  ChainVariant v = variant == "twisted" ? ChainVariant::Twisted : ChainVariant::Standard;
  if (variant != "twisted" && variant != "standard") throw DomainError("variant must be standard or twisted");
  ChainWitness w = build_chain(f, GF2Elt(f, a % p, b % p), v);
  py::dict d;
  d["t"] = encode_all({w.t3, w.t2, w.t1, w.t0});
  d["c0"] = w.c0.encode();
  d["e0"] = w.e0.encode();
  d["c1"] = w.c1.encode();
  d["e1"] = w.e1.encode();
  d["c2"] = w.c2.encode();
  auto deg = composite_degree(w);
  d["composite_degree"] = deg.degree;
  d["kernel_x_count"] = deg.kernel_x_count;
  if (v == ChainVariant::Twisted) {
    auto lam = legendre_sequence(w);
    d["legendre"] = encode_all({lam.begin(), lam.end()});
    bool rec = true;
    for (int k = 0; k < 3; ++k) rec = rec && legendre_step_holds(lam[k], lam[k + 1]);
    d["legendre_recursion"] = rec;
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Weber modular toolkit: modular polynomials, supersingular graphs, Hecke sieves";

  static py::exception<Error> base(m, "WeberError");
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception_translator([](std::exception_ptr e) {
    try {
      if (e) std::rethrow_exception(e);
    } catch (const DomainError&) {
      throw;
    } catch (const Error& err) {
      PyErr_SetString(base.ptr(), (err.kind() + ": " + err.what()).c_str());
    }
  });

  m.def("lines", [] {
    std::vector<std::string> names;
    for (const auto& l : registered_lines()) names.push_back(l.name);
    return names;
  });
  m.def("generate", [](const std::string& line, int ell) { return terms_of(generate(line_by_name(line), ell)); },
        py::arg("line"), py::arg("ell"), "Terms (i, j, coefficient) of the normalized modular polynomial.");
  m.def("builtin", [](const std::string& name) { return terms_of(builtin(name)); }, py::arg("name"));
  m.def("serialize", [](const std::string& line, int ell) { return serialize(generate(line_by_name(line), ell), line, ell); },
        py::arg("line"), py::arg("ell"));
  m.def("verify", [](const std::string& line, int ell, long prec) {
        const auto& L = line_by_name(line);
        VerifyReport r = verify(generate(L, ell), L, ell, prec);
        py::dict d;
        d["vanishes"] = r.vanishes;
        d["precision"] = r.precision;
        return d;
      }, py::arg("line"), py::arg("ell"), py::arg("prec") = 0);
  m.def("qid_report", [](long prec) {
        py::list out;
        for (const auto& c : qid_report(prec)) {
          py::dict d;
          d["name"] = c.name;
          d["vanishes"] = c.vanishes;
          d["precision"] = c.terms;
          out.append(d);
        }
        return out;
      }, py::arg("prec") = 48 * 210);
  m.def("group_orders", [] {
    GroupReport g = group_report();
    return std::make_pair(g.order_G, g.order_D);
  });
  m.def("supersingular_j", [](std::uint64_t p) { return encode_all(ss_j_enumerate(make_field(p))); }, py::arg("p"));
  m.def("ss_count_formula", &ss_count_formula, py::arg("p"));
  m.def("graph_json", [](std::uint64_t p, const std::string& line, int ell) {
        return build_graph(make_field(p), line_by_name(line), ell).to_json();
      }, py::arg("p"), py::arg("line"), py::arg("ell"));
  m.def("split_violations", [](std::uint64_t p) { return split_check(make_field(p)).violations; }, py::arg("p"));
  m.def("hecke_sieve", [](std::uint64_t p, const std::string& line, std::vector<int> ells) {
        GF2Field f = make_field(p);
        std::vector<HeckeOp> ops;
        for (int ell : ells) ops.push_back(hecke_matrix(build_graph(f, line_by_name(line), ell)));
        std::vector<std::pair<std::map<int, long>, std::size_t>> out;
        for (const auto& s : eigen_sieve(ops)) out.emplace_back(s.eigenvalues, s.dim);
        return out;
      }, py::arg("p"), py::arg("line"), py::arg("ells"),
      "Non-Eisenstein integer eigensystems as (eigenvalues, dimension) pairs.");
  m.def("chain", &chain_dict, py::arg("p"), py::arg("a"), py::arg("b") = 0, py::arg("variant") = "standard",
        "Chain witness for the seed t3 = a + b*u.");
  m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = cli::run(args, out, err);
        return std::make_tuple(code, out.str(), err.str());
      }, py::arg("args"), "Run a CLI command line in-process: (exit code, stdout, stderr).");
}
