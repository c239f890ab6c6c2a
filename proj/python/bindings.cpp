#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "scrollsec/report.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace scrollsec;

namespace {

RunConfig config_from(const py::dict& d) {
  RunConfig c;
  for (const auto& [key, value] : d) {
    const auto k = key.cast<std::string>();
    if (value.is_none()) continue;
    if (k == "q") c.q = value.cast<std::uint32_t>();
    else if (k == "dmax") c.d_max = value.cast<int>();
    else if (k == "seed") c.seed = value.cast<std::uint64_t>();
    else if (k == "scroll") c.scroll = value.cast<std::string>();
    else if (k == "point") c.point = value.cast<std::string>();
    else if (k == "n") c.n = value.cast<int>();
    else if (k == "sampler") c.sampler = value.cast<std::string>();
    else if (k == "max_deg") c.bounds.max_deg = value.cast<int>();
    else if (k == "max_n") c.bounds.max_n = value.cast<int>();
    else if (k == "max_h") c.bounds.max_h = value.cast<int>();
    else if (k == "budget") c.budget = value.cast<std::uint64_t>();
    else throw py::key_error("unknown option '" + k + "'");
  }
  return c;
}

SecantSignature signature_at(const std::string& scroll, const std::vector<long long>& point, std::uint32_t q,
                             int dmax) {
  const Field f = Field::make(q, 1);
  const Scroll sc(f, ScrollSpec::parse(scroll));
  Vec p;
  for (long long x : point) p.push_back(f.from_int(x));
  if (p.size() != sc.n_coords()) throw Error(ErrorKind::DimensionMismatch, "wrong number of coordinates");
  return classify_signature(sc, p, dmax);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Secant loci of rational normal scrolls over finite fields";

  static py::exception<Error> error(m, "ScrollsecError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::enum_<StratumLabel>(m, "StratumLabel")
      .value("Empty2Z", StratumLabel::Empty2Z)
      .value("TwoPoints", StratumLabel::TwoPoints)
      .value("DoublePoint", StratumLabel::DoublePoint)
      .value("TwoLines", StratumLabel::TwoLines)
      .value("Conic", StratumLabel::Conic)
      .value("QuadricSurface", StratumLabel::QuadricSurface);

  py::class_<ScrollSpec>(m, "ScrollSpec")
      .def(py::init(&ScrollSpec::make), "a"_a, "h"_a = -1)
      .def_static("parse", &ScrollSpec::parse, "literal"_a)
      .def_property_readonly("a", &ScrollSpec::a)
      .def_property_readonly("h", &ScrollSpec::h)
      .def_property_readonly("n", &ScrollSpec::n)
      .def_property_readonly("deg", &ScrollSpec::deg)
      .def_property_readonly("ambient_dim", &ScrollSpec::ambient_dim)
      .def_property_readonly("k", &ScrollSpec::k)
      .def_property_readonly("m", &ScrollSpec::m)
      .def("realizable_labels", [](const ScrollSpec& s) { return realizable_labels(s); })
      .def("__eq__", [](const ScrollSpec& a, const ScrollSpec& b) { return a == b; })
      .def("__repr__", &ScrollSpec::literal);

  py::class_<SecantSignature>(m, "SecantSignature")
      .def_readonly("sec_dim", &SecantSignature::sec_dim)
      .def_readonly("h", &SecantSignature::h)
      .def_readonly("n", &SecantSignature::n)
      .def_readonly("s", &SecantSignature::s)
      .def_readonly("rank", &SecantSignature::rank)
      .def_readonly("label", &SecantSignature::label)
      .def_readonly("locus_dim", &SecantSignature::locus_dim)
      .def_readonly("depth_pred", &SecantSignature::depth_pred);

  m.def("classify_signature", &signature_at, "scroll"_a, "point"_a, "q"_a = 10007, "dmax"_a = 2);

  m.def(
      "run",
      [](const std::string& command, const py::dict& options) {
        const RunResult r = run_command(command, config_from(options));
        return py::make_tuple(render(r.report), r.exit_code);
      },
      "command"_a, "options"_a, "Runs a CLI command; returns (json_text, exit_code).");
}
