// Python module redgrp._core. Data cross the boundary as JSON text in the
// same format the CLI reads and writes; the package wrapper decodes it.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "redgrp/cli.hpp"
#include "redgrp/error.hpp"
#include "redgrp/serialize.hpp"

namespace py = pybind11;
using namespace redgrp;

namespace {

Limits limits_for(int max_rank) {
  Limits l;
  l.max_rank = max_rank;
  return l;
}

std::string dump(const Json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Connected reductive groups as central gluing data";

  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  m.def("center", [](const std::string& name) {
    std::vector<long> out;
    for (const Int& d : center_of(SCSemisimple::parse(std::string_view(name))).invariant_factors())
      out.push_back(d.get_si());
    return out;
  }, py::arg("group"), "Invariant factors of the center of a simply connected group.");

  m.def("enumerate", [](int rank, unsigned p, int max_rank) {
    Json out = Json::array();
    for (const GluingDatum& d : enumerate_rank(rank, limits_for(max_rank), p))
      out.push_back(to_json(d));
    return dump(out);
  }, py::arg("rank"), py::arg("p") = 0, py::arg("max_rank") = 3);

  m.def("name", [](const std::string& doc) { return datum_from_json(parse_json(doc)).name(); },
        py::arg("datum"));

  m.def("isomorphic", [](const std::string& a, const std::string& b) -> std::optional<NamedWord> {
    return isomorphic(datum_from_json(parse_json(a)), datum_from_json(parse_json(b)));
  }, py::arg("a"), py::arg("b"));

  m.def("invariants", [](const std::string& doc) {
    return dump(to_json(invariants(affine_from_json(parse_json(doc)))));
  }, py::arg("datum"));

  m.def("classify", [](const std::string& doc) {
    return dump(to_json(classify(affine_from_json(parse_json(doc)))));
  }, py::arg("datum"));

  m.def("torus_split", [](const std::string& doc) {
    return dump(to_json(torus_split(datum_from_json(parse_json(doc)))));
  }, py::arg("datum"));

  m.def("twins", [](const std::string& base, std::size_t n) {
    Json out = Json::array();
    for (const TwinCertificate& c : find_twin_pairs(SimpleType::parse(base), n))
      out.push_back(to_json(c));
    return dump(out);
  }, py::arg("base"), py::arg("n"));

  m.def("run", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int status = cli::run(args, out, err);
    return py::make_tuple(status, out.str(), err.str());
  }, py::arg("args"), "Run the command-line front end; returns (status, stdout, stderr).");
}
