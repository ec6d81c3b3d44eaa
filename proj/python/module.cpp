#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sdnb/cert/certificate.hpp"
#include "sdnb/error.hpp"
#include "sdnb/sdnb_ff/construct.hpp"

namespace py = pybind11;
using sdnb::cert::LocalParams;

namespace {

std::string dump(const sdnb::cert::json& j) { return j.dump(2); }

LocalParams params(std::string kind, unsigned p, unsigned f, int precision, int guard) {
  LocalParams par;
  par.kind = std::move(kind);
  par.p = p;
  par.f = f;
  par.precision = precision;
  par.guard = guard;
  return par;
}

}  // namespace

PYBIND11_MODULE(_sdnb, m) {
  m.doc() = "Self-dual normal bases over finite and local fields";

  auto base = py::register_exception<sdnb::Error>(m, "Error");
  auto param = py::register_exception<sdnb::ParameterError>(m, "ParameterError", base.ptr());
  py::register_exception<sdnb::ExistenceError>(m, "ExistenceError", base.ptr());
  py::register_exception<sdnb::DomainError>(m, "DomainError", base.ptr());
  py::register_exception<sdnb::PrecisionError>(m, "PrecisionError", base.ptr());
  py::register_exception<sdnb::cert::MalformedError>(m, "MalformedError", param.ptr());

  m.attr("SCHEMA_VERSION") = sdnb::cert::kSchemaVersion;

  m.def("construct_ff", [](unsigned p, unsigned n, unsigned m_) {
    return dump(sdnb::cert::run_ff(p, m_, n));
  }, py::arg("p"), py::arg("n"), py::kw_only(), py::arg("m") = 1,
     "Certificate for a self-dual normal basis of F_{q^n}/F_q, q = p^m.");

  m.def("check_existence_ff", &sdnb::sdnb_ff::check_existence_ff, py::arg("p"), py::arg("n"));

  m.def("brute_force", [](unsigned p, unsigned m_) {
    std::vector<std::vector<unsigned>> out;
    for (const auto& x : sdnb::sdnb_ff::brute_force_selfdual(p, m_)) {
      std::vector<unsigned> c;
      for (auto v : x.coeffs()) c.push_back(static_cast<unsigned>(v));
      out.push_back(std::move(c));
    }
    return out;
  }, py::arg("p"), py::arg("m"));

  m.def("local_tame", [](unsigned p, unsigned d, unsigned f, int precision, int guard) {
    auto par = params("tame", p, f, precision, guard);
    par.d = d;
    return dump(sdnb::cert::run_local(par));
  }, py::arg("p"), py::arg("d"), py::kw_only(), py::arg("f") = 1,
     py::arg("precision") = 48, py::arg("guard") = 8);

  m.def("local_unram", [](unsigned p, unsigned d, unsigned f, int precision, int guard) {
    auto par = params("unram", p, f, precision, guard);
    par.d = d;
    return dump(sdnb::cert::run_local(par));
  }, py::arg("p"), py::arg("d"), py::kw_only(), py::arg("f") = 1,
     py::arg("precision") = 48, py::arg("guard") = 8);

  m.def("local_wild", [](unsigned p, int precision, int guard) {
    return dump(sdnb::cert::run_local(params("wild", p, 1, precision, guard)));
  }, py::arg("p"), py::kw_only(), py::arg("precision") = 48, py::arg("guard") = 8);

  m.def("local_compose", [](unsigned p, unsigned unram_d, unsigned tame_d, bool trace_diag,
                            unsigned f, int precision, int guard) {
    auto par = params("compose", p, f, precision, guard);
    par.unram_d = unram_d;
    par.tame_d = tame_d;
    par.trace_diag = trace_diag;
    return dump(sdnb::cert::run_local(par));
  }, py::arg("p"), py::arg("unram_d"), py::arg("tame_d"), py::kw_only(),
     py::arg("trace_diag") = false, py::arg("f") = 1, py::arg("precision") = 48,
     py::arg("guard") = 8);

  m.def("verify", [](const std::string& text) {
    const auto r = sdnb::cert::verify_text(text);
    return py::make_tuple(r.pass, r.messages);
  }, py::arg("document"), "Re-checks a certificate; returns (pass, messages).");
}
