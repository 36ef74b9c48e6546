#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gznt/errors.hpp"
#include "gznt/invariants.hpp"
#include "gznt/path.hpp"
#include "gznt/rational.hpp"
#include "gznt/spec_io.hpp"

namespace py = pybind11;
using namespace gznt;

namespace {

TauParameter tau_of(double t) { return std::isinf(t) ? TauParameter::infinity() : TauParameter::from_tau(t); }

py::object point_obj(const ExtendedPoint& p) {
  if (!p.is_finite()) return py::float_(kInf);
  return py::cast(p.value());
}

py::dict sample_dict(const PathSample& s) {
  py::dict d;
  d["theta"] = s.theta;
  d["tau"] = s.tau;
  d["point"] = point_obj(s.point);
  d["regime"] = regime_name(s.regime);
  d["event"] = s.event;
  d["limit"] = s.limit ? py::cast(*s.limit) : py::none();
  d["residual"] = s.residual;
  return d;
}

py::dict form_dict(const RealLineForm& f) {
  py::dict d;
  d["form"] = form_name(f);
  if (const auto* r = std::get_if<FormR0>(&f)) {
    d["alpha"] = r->alpha;
    d["beta"] = r->beta;
    d["c"] = r->c;
  } else if (const auto* r = std::get_if<FormRc>(&f)) {
    d["gamma"] = r->gamma;
    d["d"] = r->d;
  } else if (const auto* r = std::get_if<FormR1c>(&f)) {
    d["gamma"] = r->gamma;
    d["d"] = r->d;
  } else {
    const auto& n = std::get<NotRealLine>(f);
    d["reason"] = n.reason;
    d["witness"] = n.witness ? py::object(sample_dict(*n.witness)) : py::none();
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_gznt, m) {
  m.doc() = "GZNT paths of N1 functions";

  static py::exception<Error> base(m, "GzntError");
  static py::exception<Error> validation(m, "ValidationError", base.ptr());
  static py::exception<Error> numerical(m, "NumericalError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const std::string msg = std::string(e.name()) + ": " + e.what();
      if (e.kind() == ErrorKind::Validation)
        py::set_error(validation, msg.c_str());
      else
        py::set_error(numerical, msg.c_str());
    }
  });

  py::class_<LocatorConfig>(m, "LocatorConfig")
      .def(py::init<>())
      .def_readwrite("newton_tol", &LocatorConfig::newton_tol)
      .def_readwrite("max_iters", &LocatorConfig::max_iters)
      .def_readwrite("im_threshold", &LocatorConfig::im_threshold)
      .def_readwrite("limit_tol", &LocatorConfig::limit_tol)
      .def_readwrite("deriv_tol", &LocatorConfig::deriv_tol)
      .def_readwrite("merge_tol", &LocatorConfig::merge_tol)
      .def_readwrite("ray_depth", &LocatorConfig::ray_depth)
      .def_readwrite("seed", &LocatorConfig::seed);

  py::class_<N1Function>(m, "N1Function")
      .def_property_readonly("label", &N1Function::label)
      .def_property_readonly("scale", &N1Function::scale)
      .def("__call__", [](const N1Function& q, cplx z) { return q.jet(z).value(); })
      .def("derivatives", [](const N1Function& q, cplx z, int order) { return eval_q(q, z, order); },
           py::arg("z"), py::arg("order") = 3);

  m.def("parse_spec", &parse_spec_text, py::arg("text"), py::arg("origin") = "<string>");
  m.def("load_spec", &parse_spec_file, py::arg("path"));

  m.def(
      "locate",
      [](const N1Function& q, double tau, const LocatorConfig& cfg) {
        const TauParameter t = tau_of(tau);
        const GzntResult r = locate(q, t, cfg);
        py::dict d = sample_dict({t.theta(), t.tau(), r.point, r.regime, "", r.limit_value, r.residual});
        d["source"] = r.source;
        return d;
      },
      py::arg("q"), py::arg("tau"), py::arg("cfg") = LocatorConfig{});

  m.def(
      "trace",
      [](const N1Function& q, int steps, bool adaptive, const LocatorConfig& cfg) {
        py::list out;
        for (const auto& s : trace(q, cfg, steps, adaptive).samples) out.append(sample_dict(s));
        return out;
      },
      py::arg("q"), py::arg("steps") = 64, py::arg("adaptive") = false, py::arg("cfg") = LocatorConfig{});

  m.def(
      "classify",
      [](const N1Function& q, double x0, double tau) {
        const LocalPathModel lm = predict_local_path(q, x0, tau);
        py::dict d;
        d["class"] = zero_class_name(lm.zero_class);
        d["approach_angle"] = lm.approach_angle ? py::cast(*lm.approach_angle) : py::none();
        d["departure_angle"] = lm.departure_angle ? py::cast(*lm.departure_angle) : py::none();
        d["real_side"] = lm.real_side ? py::cast(*lm.real_side == Side::Left ? "left" : "right") : py::none();
        d["companions"] = lm.companions;
        return d;
      },
      py::arg("q"), py::arg("x0"), py::arg("tau") = 0.0);

  m.def(
      "realline_characterize",
      [](const N1Function& q, int steps, const LocatorConfig& cfg) {
        const Path p = trace(q, cfg, steps, false);
        return form_dict(realline_characterize(q, p));
      },
      py::arg("q"), py::arg("steps") = 64, py::arg("cfg") = LocatorConfig{});

  m.def(
      "rational",
      [](cplx a, cplx b) {
        const ClosedFormPath cf = closed_form_path(a, b);
        py::dict d;
        d["case"] = rational_case_name(cf.kind);
        const auto& g = cf.circle;
        d["kind"] = g.kind == CircleGeometry::Kind::Circle ? "circle" : "vertical_line";
        d["center_x"] = g.center_x;
        d["radius"] = g.radius;
        d["x"] = g.x;
        d["p_left"] = g.p_left ? py::cast(*g.p_left) : py::none();
        d["p_right"] = g.p_right ? py::cast(*g.p_right) : py::none();
        d["p_single"] = g.p_single ? py::cast(*g.p_single) : py::none();
        d["infinity"] = infinity_membership(a, b);
        d["description"] = cf.describe();
        return d;
      },
      py::arg("alpha"), py::arg("beta"));
  m.def("sign_poly", &sign_poly, py::arg("alpha"), py::arg("beta"), py::arg("x"));

  m.def(
      "run_invariants",
      [](const N1Function& q, int steps, std::uint64_t seed, const LocatorConfig& cfg) {
        py::list out;
        for (const auto& r : run_invariants(q, cfg, steps, seed)) {
          py::dict d;
          d["check"] = r.name;
          d["value"] = r.value;
          d["tol"] = r.tol;
          d["pass"] = r.pass;
          d["note"] = r.note;
          out.append(d);
        }
        return out;
      },
      py::arg("q"), py::arg("steps") = 64, py::arg("seed") = 1, py::arg("cfg") = LocatorConfig{});
}
