#include "gznt/spec_io.hpp"

#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "json.hpp"

#include "gznt/errors.hpp"

namespace gznt {

namespace {

using json = nlohmann::json;

struct Ctx {
  std::string origin;
  [[noreturn]] void fail(const std::string& ptr, const std::string& msg) const {
    throw ParseError(origin + ":" + (ptr.empty() ? "/" : ptr) + ": " + msg);
  }
};

void only_keys(const Ctx& cx, const json& j, const std::string& ptr, std::set<std::string> allowed) {
  if (!j.is_object()) cx.fail(ptr, "expected an object");
  for (const auto& [k, v] : j.items())
    if (!allowed.count(k)) cx.fail(ptr + "/" + k, "unknown key");
}

double num(const Ctx& cx, const json& j, const std::string& ptr, const char* key,
           std::optional<double> dflt = std::nullopt) {
  if (!j.contains(key)) {
    if (dflt) return *dflt;
    cx.fail(ptr + "/" + key, "missing number");
  }
  const json& v = j.at(key);
  if (!v.is_number()) cx.fail(ptr + "/" + key, "expected a number");
  return v.get<double>();
}

cplx point(const Ctx& cx, const json& j, const std::string& ptr, const char* key) {
  if (!j.contains(key)) cx.fail(ptr + "/" + key, "missing [re, im]");
  const json& v = j.at(key);
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
    cx.fail(ptr + "/" + key, "expected [re, im]");
  return {v[0].get<double>(), v[1].get<double>()};
}

MeasureTerm term(const Ctx& cx, const json& j, const std::string& ptr) {
  if (!j.is_object()) cx.fail(ptr, "expected an object");
  if (!j.contains("type") || !j.at("type").is_string()) cx.fail(ptr + "/type", "missing term type");
  const std::string type = j.at("type").get<std::string>();
  MeasureTerm t;
  if (type == "point_mass") {
    only_keys(cx, j, ptr, {"type", "t", "c"});
    t = PointMass{num(cx, j, ptr, "t"), num(cx, j, ptr, "c")};
  } else if (type == "rational_tail") {
    only_keys(cx, j, ptr, {"type", "t", "c"});
    t = RationalTail{num(cx, j, ptr, "t"), num(cx, j, ptr, "c")};
  } else if (type == "density") {
    only_keys(cx, j, ptr, {"type", "lo", "hi", "weight", "scale"});
    Density d;
    d.lo = num(cx, j, ptr, "lo");
    d.hi = num(cx, j, ptr, "hi");
    d.scale = num(cx, j, ptr, "scale", 1.0);
    const std::string w = j.value("weight", std::string("uniform"));
    if (w == "uniform") d.weight = DensityWeight::Uniform;
    else if (w == "semicircle") d.weight = DensityWeight::Semicircle;
    else cx.fail(ptr + "/weight", "expected \"uniform\" or \"semicircle\"");
    t = d;
  } else if (type == "log") {
    only_keys(cx, j, ptr, {"type", "c"});
    t = LogPrimitive{num(cx, j, ptr, "c", 1.0)};
  } else if (type == "power") {
    only_keys(cx, j, ptr, {"type", "rho", "c"});
    t = PowerPrimitive{num(cx, j, ptr, "rho"), num(cx, j, ptr, "c", 1.0)};
  } else if (type == "uniform_line") {
    only_keys(cx, j, ptr, {"type", "c"});
    t = UniformLine{num(cx, j, ptr, "c", 1.0)};
  } else {
    cx.fail(ptr + "/type", "unknown term type \"" + type + "\"");
  }
  try {
    validate_term(t);
  } catch (const ValidationError& e) {
    throw ValidationError(cx.origin + ":" + ptr + ": " + e.what());
  }
  return t;
}

}  // namespace

N1Function parse_spec_text(const std::string& text, const std::string& origin) {
  const Ctx cx{origin};
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(origin + ": " + e.what());
  }
  only_keys(cx, doc, "", {"label", "factor", "m"});
  std::string label;
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) cx.fail("/label", "expected a string");
    label = doc["label"].get<std::string>();
  }

  if (!doc.contains("factor")) cx.fail("/factor", "missing");
  const json& f = doc["factor"];
  only_keys(cx, f, "/factor", {"form", "alpha", "beta"});
  if (!f.contains("form") || !f["form"].is_string()) cx.fail("/factor/form", "missing form");
  const std::string form = f["form"].get<std::string>();
  FactorForm factor;
  if (form == "both_finite") {
    factor = BothFinite{point(cx, f, "/factor", "alpha"), point(cx, f, "/factor", "beta")};
  } else if (form == "zero_at_inf") {
    if (f.contains("alpha")) cx.fail("/factor/alpha", "zero_at_inf takes only beta");
    factor = ZeroAtInfinity{point(cx, f, "/factor", "beta")};
  } else if (form == "pole_at_inf") {
    if (f.contains("beta")) cx.fail("/factor/beta", "pole_at_inf takes only alpha");
    factor = PoleAtInfinity{point(cx, f, "/factor", "alpha")};
  } else {
    cx.fail("/factor/form", "expected both_finite, zero_at_inf or pole_at_inf");
  }

  if (!doc.contains("m")) cx.fail("/m", "missing");
  const json& m = doc["m"];
  only_keys(cx, m, "/m", {"a", "b", "terms"});
  const double a = num(cx, m, "/m", "a", 0.0);
  const double b = num(cx, m, "/m", "b", 0.0);
  if (b < 0.0) throw ValidationError(origin + ":/m/b: linear coefficient must be nonnegative");
  std::vector<MeasureTerm> terms;
  if (m.contains("terms")) {
    if (!m["terms"].is_array()) cx.fail("/m/terms", "expected an array");
    for (std::size_t i = 0; i < m["terms"].size(); ++i)
      terms.push_back(term(cx, m["terms"][i], "/m/terms/" + std::to_string(i)));
  }
  return make_q(factor, NevanlinnaFunction(a, b, std::move(terms)), label);
}

N1Function parse_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_spec_text(ss.str(), path);
}

std::optional<cplx> parse_complex(const std::string& s) {
  if (s == "inf" || s == "+inf") return std::nullopt;
  static const std::regex num(R"(\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)\s*)");
  static const std::regex imag_only(R"(\s*([+-]?)((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*[ij]\s*)");
  static const std::regex both(
      R"(\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)\s*([+-])\s*((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*[ij]\s*)");
  std::smatch mt;
  if (std::regex_match(s, mt, num)) return cplx(std::stod(mt[1]), 0.0);
  if (std::regex_match(s, mt, both)) {
    const double im = mt[3].matched ? std::stod(mt[3]) : 1.0;
    return cplx(std::stod(mt[1]), mt[2] == "-" ? -im : im);
  }
  if (std::regex_match(s, mt, imag_only)) {
    const double im = mt[2].matched ? std::stod(mt[2]) : 1.0;
    return cplx(0.0, mt[1] == "-" ? -im : im);
  }
  throw ParseError("cannot read complex number \"" + s + "\"");
}

}  // namespace gznt
