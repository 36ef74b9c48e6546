#include "gznt/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "gznt/errors.hpp"
#include "gznt/invariants.hpp"
#include "gznt/path.hpp"
#include "gznt/rational.hpp"
#include "gznt/spec_io.hpp"

namespace gznt {

namespace {

using json = nlohmann::json;

json jnum(double v) {
  if (std::isfinite(v)) return v;
  return format_number(v);
}

json jopt(const std::optional<double>& v) { return v ? jnum(*v) : json(nullptr); }

const char* kHeader = "theta,tau,regime,re,im,event";

std::string csv_row(const PathSample& s) {
  std::string row = format_number(s.theta) + "," + format_number(s.tau) + "," + regime_name(s.regime) + ",";
  if (s.point.is_finite())
    row += format_number(s.point.value().real()) + "," + format_number(s.point.value().imag());
  else
    row += ",";
  return row + "," + s.event;
}

json sample_json(const PathSample& s, const std::string& source = {}) {
  json j{{"theta", jnum(s.theta)},
         {"tau", jnum(s.tau)},
         {"regime", regime_name(s.regime)},
         {"re", s.point.is_finite() ? jnum(s.point.value().real()) : json(nullptr)},
         {"im", s.point.is_finite() ? jnum(s.point.value().imag()) : json(nullptr)},
         {"event", s.event},
         {"limit", jopt(s.limit)},
         {"residual", jnum(s.residual)}};
  if (!source.empty()) j["source"] = source;
  return j;
}

void field(std::ostream& out, const std::string& k, const std::string& v) { out << k << "," << v << "\n"; }
void field(std::ostream& out, const std::string& k, double v) { field(out, k, format_number(v)); }
void field(std::ostream& out, const std::string& k, const std::optional<double>& v) {
  field(out, k, v ? format_number(*v) : std::string());
}

struct Options {
  bool as_json = false;
  std::uint64_t seed = 0;
  LocatorConfig cfg;
  std::string spec;
  std::string at;
  std::string tau = "0";
  std::string alpha, beta;
  int steps = 64;
  bool adaptive = false;
  bool parallel = false;
  int order = 3;
};

TauParameter read_tau(const std::string& s) {
  const auto v = parse_complex(s);
  if (!v) return TauParameter::infinity();
  if (v->imag() != 0.0) throw ValidationError("tau must be real or inf");
  return TauParameter::from_tau(v->real());
}

double read_real(const std::string& s, const char* what) {
  const auto v = parse_complex(s);
  if (!v || v->imag() != 0.0) throw ValidationError(std::string(what) + " must be a finite real number");
  return v->real();
}

cplx read_point(const std::string& s, const char* what) {
  const auto v = parse_complex(s);
  if (!v) throw ValidationError(std::string(what) + " must be finite");
  return *v;
}

int cmd_eval(const Options& o, std::ostream& out) {
  const N1Function q = parse_spec_file(o.spec);
  const cplx z = read_point(o.at, "--at");
  const auto v = eval_q(q, z, o.order);
  if (o.as_json) {
    json vals = json::array();
    for (const cplx& c : v) vals.push_back({jnum(c.real()), jnum(c.imag())});
    out << json{{"z", {jnum(z.real()), jnum(z.imag())}}, {"derivatives", vals}}.dump(2) << "\n";
  } else {
    out << "order,re,im\n";
    for (std::size_t k = 0; k < v.size(); ++k)
      out << k << "," << format_number(v[k].real()) << "," << format_number(v[k].imag()) << "\n";
  }
  return 0;
}

int cmd_gznt(const Options& o, std::ostream& out) {
  const N1Function q = parse_spec_file(o.spec);
  const TauParameter t = read_tau(o.tau);
  const GzntResult r = locate(q, t, o.cfg);
  PathSample s{t.theta(), t.tau(), r.point, r.regime, "", r.limit_value, r.residual};
  if (o.as_json)
    out << sample_json(s, r.source).dump(2) << "\n";
  else
    out << kHeader << "\n" << csv_row(s) << "\n";
  return 0;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const N1Function q = parse_spec_file(o.spec);
  const double x = read_real(o.at, "--at");
  const TauParameter t = read_tau(o.tau);
  if (t.is_infinity()) throw ValidationError("classify needs a finite tau");
  const LocalPathModel m = predict_local_path(q, x, t.tau());
  const std::string side = m.real_side ? (*m.real_side == Side::Left ? "left" : "right") : "";
  if (o.as_json) {
    out << json{{"x0", jnum(x)},
                {"tau", jnum(t.tau())},
                {"class", zero_class_name(m.zero_class)},
                {"approach_angle", jopt(m.approach_angle)},
                {"departure_angle", jopt(m.departure_angle)},
                {"real_side", m.real_side ? json(side) : json(nullptr)},
                {"companions", m.companions}}
                .dump(2)
        << "\n";
  } else {
    out << "field,value\n";
    field(out, "class", zero_class_name(m.zero_class));
    field(out, "approach_angle", m.approach_angle);
    field(out, "departure_angle", m.departure_angle);
    field(out, "real_side", side);
    for (const auto& c : m.companions) field(out, "companion", c);
  }
  return 0;
}

int cmd_trace(const Options& o, std::ostream& out) {
  const auto q = std::make_shared<const N1Function>(parse_spec_file(o.spec));
  TraceOptions t;
  t.steps = o.steps;
  t.adaptive = o.adaptive;
  t.parallel = o.parallel;
  const Path p = trace(q, o.cfg, t);
  if (o.as_json) {
    json s = json::array();
    for (const auto& x : p.samples) s.push_back(sample_json(x));
    out << json{{"function", p.function_id}, {"samples", s}}.dump(2) << "\n";
  } else {
    out << kHeader << "\n";
    for (const auto& x : p.samples) out << csv_row(x) << "\n";
  }
  return 0;
}

int cmd_rational(const Options& o, std::ostream& out) {
  const cplx a = read_point(o.alpha, "--alpha"), b = read_point(o.beta, "--beta");
  const ClosedFormPath cf = closed_form_path(a, b);
  const CircleGeometry& g = cf.circle;
  const bool circle = g.kind == CircleGeometry::Kind::Circle;
  const bool inf = infinity_membership(a, b);
  if (o.as_json) {
    json pieces = json::array();
    for (const auto& p : cf.pieces)
      pieces.push_back({{"kind", piece_name(p.kind)}, {"lo", jnum(p.lo)}, {"hi", jnum(p.hi)},
                        {"direction", p.direction}});
    out << json{{"case", rational_case_name(cf.kind)},
                {"kind", circle ? "circle" : "vertical_line"},
                {"center_x", circle ? jnum(g.center_x) : json(nullptr)},
                {"radius", circle ? jnum(g.radius) : json(nullptr)},
                {"x", circle ? json(nullptr) : jnum(g.x)},
                {"p_left", jopt(g.p_left)},
                {"p_right", jopt(g.p_right)},
                {"p_single", jopt(g.p_single)},
                {"infinity", inf},
                {"pieces", pieces},
                {"description", cf.describe()}}
                .dump(2)
        << "\n";
  } else {
    out << "field,value\n";
    field(out, "case", rational_case_name(cf.kind));
    field(out, "kind", circle ? "circle" : "vertical_line");
    if (circle) {
      field(out, "center_x", g.center_x);
      field(out, "radius", g.radius);
    } else {
      field(out, "x", g.x);
    }
    field(out, "p_left", g.p_left);
    field(out, "p_right", g.p_right);
    field(out, "p_single", g.p_single);
    field(out, "infinity", inf ? "true" : "false");
    field(out, "description", cf.describe());
  }
  return 0;
}

json form_json(const RealLineForm& f) {
  json j{{"form", form_name(f)}};
  if (const auto* r = std::get_if<FormR0>(&f)) {
    j["alpha"] = jnum(r->alpha);
    j["beta"] = jnum(r->beta);
    j["c"] = jnum(r->c);
  } else if (const auto* r = std::get_if<FormRc>(&f)) {
    j["gamma"] = jnum(r->gamma);
    j["d"] = jnum(r->d);
  } else if (const auto* r = std::get_if<FormR1c>(&f)) {
    j["gamma"] = jnum(r->gamma);
    j["d"] = jnum(r->d);
  } else {
    const auto& n = std::get<NotRealLine>(f);
    j["reason"] = n.reason;
    j["witness"] = n.witness ? sample_json(*n.witness) : json(nullptr);
  }
  return j;
}

int cmd_realline(const Options& o, std::ostream& out) {
  const auto q = std::make_shared<const N1Function>(parse_spec_file(o.spec));
  TraceOptions t;
  t.steps = o.steps;
  const Path p = trace(q, o.cfg, t);
  const RealLineForm f = realline_characterize(*q, p);
  json j = form_json(f);
  if (!std::holds_alternative<NotRealLine>(f)) j["uv_residual"] = jnum(make_realline_family(f).residual);
  if (o.as_json) {
    out << j.dump(2) << "\n";
  } else {
    out << "field,value\n";
    for (const auto& [k, v] : j.items()) {
      if (k == "witness") {
        if (!v.is_null()) {
          const auto& w = *std::get<NotRealLine>(f).witness;
          field(out, "witness", csv_row(w));
        }
        continue;
      }
      field(out, k, v.is_string() ? v.get<std::string>() : format_number(v.get<double>()));
    }
  }
  return 0;
}

int cmd_invariants(const Options& o, std::ostream& out) {
  const N1Function q = parse_spec_file(o.spec);
  const auto rs = run_invariants(q, o.cfg, o.steps, o.seed);
  const bool ok = std::all_of(rs.begin(), rs.end(), [](const CheckResult& r) { return r.pass; });
  if (o.as_json) {
    json a = json::array();
    for (const auto& r : rs)
      a.push_back({{"check", r.name}, {"value", jnum(r.value)}, {"tol", jnum(r.tol)}, {"pass", r.pass},
                   {"note", r.note}});
    out << json{{"checks", a}, {"pass", ok}}.dump(2) << "\n";
  } else {
    out << "check,value,tol,status,note\n";
    for (const auto& r : rs) {
      std::string note = r.note;
      std::replace(note.begin(), note.end(), ',', ';');
      out << r.name << "," << format_number(r.value) << "," << format_number(r.tol) << ","
          << (r.pass ? "pass" : "FAIL") << "," << note << "\n";
    }
  }
  return ok ? 0 : 1;
}

void error_json(std::ostream& err, const std::string& name, const std::string& kind,
                const std::string& msg) {
  err << json{{"error", name}, {"kind", kind}, {"message", msg}}.dump() << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"gznt: generalized zeros of N1 functions along the family Q_tau"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.as_json, "JSON output instead of CSV");
  app.add_option("--seed", o.seed, "shuffle the multistart seeds (0 keeps the natural order)");
  app.add_option("--newton-tol", o.cfg.newton_tol, "residual tolerance")->capture_default_str();
  app.add_option("--max-iters", o.cfg.max_iters, "Newton/Muller iterations")->capture_default_str();
  app.add_option("--im-threshold", o.cfg.im_threshold, "Im z below this (relative) counts as real")
      ->capture_default_str();
  app.add_option("--limit-tol", o.cfg.limit_tol, "band for the ray-limit tests")->capture_default_str();
  app.add_option("--deriv-tol", o.cfg.deriv_tol, "band for the derivative-sign test")->capture_default_str();
  app.add_option("--merge-tol", o.cfg.merge_tol, "chordal distance for merging candidates")
      ->capture_default_str();
  app.add_option("--ray-depth", o.cfg.ray_depth, "halvings in the ray limits")->capture_default_str();
  app.add_option("--ray-height", o.cfg.ray_base_height, "starting height of the ray limits")
      ->capture_default_str();
  app.add_option("--scan-resolution", o.cfg.real_scan_resolution, "real scan step in atan(x/L)")
      ->capture_default_str();

  auto spec_opt = [&](CLI::App* s) {
    s->add_option("--spec", o.spec, "JSON function spec")->required()->check(CLI::ExistingFile);
  };
  auto* eval = app.add_subcommand("eval", "Q and its derivatives at a point");
  spec_opt(eval);
  eval->add_option("--at", o.at, "point, e.g. 1+2i")->required();
  eval->add_option("--order", o.order, "highest derivative (0..3)")->check(CLI::Range(0, 3));

  auto* gz = app.add_subcommand("gznt", "GZNT alpha(tau)");
  spec_opt(gz);
  gz->add_option("--tau", o.tau, "real or inf")->required();

  auto* cl = app.add_subcommand("classify", "classify a real zero of Q - tau");
  spec_opt(cl);
  cl->add_option("--at", o.at, "real zero")->required();
  cl->add_option("--tau", o.tau, "level (default 0)");

  auto* tr = app.add_subcommand("trace", "sweep tau and print the path");
  spec_opt(tr);
  tr->add_option("--steps", o.steps, "uniform theta steps (>= 8)");
  tr->add_flag("--adaptive", o.adaptive, "refine where neighbours are far apart");
  tr->add_flag("--parallel", o.parallel, "solve samples independently in parallel");

  auto* ra = app.add_subcommand("rational", "closed-form path of the pure rational factor");
  ra->add_option("--alpha", o.alpha, "alpha, Im >= 0")->required();
  ra->add_option("--beta", o.beta, "beta, Im >= 0")->required();

  auto* vr = app.add_subcommand("verify-realline", "fit the real-line closed forms");
  spec_opt(vr);
  vr->add_option("--steps", o.steps, "trace steps");

  auto* vi = app.add_subcommand("verify-invariants", "run the property suite");
  spec_opt(vi);
  vi->add_option("--steps", o.steps, "trace steps");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    error_json(err, "UsageError", "validation", e.what());
    return 2;
  }
  o.cfg.seed = o.seed;

  try {
    o.cfg.validate();
    if (eval->parsed()) return cmd_eval(o, out);
    if (gz->parsed()) return cmd_gznt(o, out);
    if (cl->parsed()) return cmd_classify(o, out);
    if (tr->parsed()) return cmd_trace(o, out);
    if (ra->parsed()) return cmd_rational(o, out);
    if (vr->parsed()) return cmd_realline(o, out);
    if (vi->parsed()) return cmd_invariants(o, out);
  } catch (const Error& e) {
    const bool val = e.kind() == ErrorKind::Validation;
    error_json(err, e.name(), val ? "validation" : "numerical", e.what());
    return val ? 2 : 3;
  } catch (const std::exception& e) {
    error_json(err, "InternalError", "numerical", e.what());
    return 3;
  }
  return 2;
}

}  // namespace gznt
