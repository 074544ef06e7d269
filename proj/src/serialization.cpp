#include "campanato/serialization.hpp"

#include <cmath>

namespace campanato {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::vector<Complex> complex_list(const JsonReader& in) {
  std::vector<Complex> out;
  for (std::size_t i = 0; i < in.size(); ++i) out.push_back(in.at(i).complex());
  return out;
}

Json complex_list_to_json(const std::vector<Complex>& zs) {
  Json out = Json::array();
  for (const auto& z : zs) out.push_back(complex_to_json(z));
  return out;
}

/// Runs a constructor and rewrites its DomainError as a ConfigError at `in`.
template <class F>
auto guarded(const JsonReader& in, F&& make) {
  try {
    return make();
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    in.fail(e.what());
  }
}

}  // namespace

bool JsonReader::has(const std::string& key) const { return value_->is_object() && value_->contains(key); }

JsonReader JsonReader::at(const std::string& key) const {
  if (!value_->is_object()) fail("expected an object");
  auto it = value_->find(key);
  const std::string child = path_.empty() ? key : path_ + "." + key;
  if (it == value_->end()) throw ConfigError(child + ": missing field");
  return JsonReader(*it, child);
}

JsonReader JsonReader::at(std::size_t index) const {
  if (!value_->is_array()) fail("expected an array");
  if (index >= value_->size()) fail("index out of range");
  return JsonReader((*value_)[index], path_ + "[" + std::to_string(index) + "]");
}

std::size_t JsonReader::size() const {
  if (!value_->is_array()) fail("expected an array");
  return value_->size();
}

double JsonReader::number() const {
  if (!value_->is_number()) fail("expected a number");
  const double v = value_->get<double>();
  if (!std::isfinite(v)) fail("expected a finite number");
  return v;
}

int JsonReader::integer() const {
  if (!value_->is_number_integer()) fail("expected an integer");
  return value_->get<int>();
}

bool JsonReader::boolean() const {
  if (!value_->is_boolean()) fail("expected true or false");
  return value_->get<bool>();
}

std::string JsonReader::string() const {
  if (!value_->is_string()) fail("expected a string");
  return value_->get<std::string>();
}

Complex JsonReader::complex() const {
  if (value_->is_number()) return {number(), 0.0};
  if (!value_->is_array() || value_->size() != 2) fail("expected a complex number [re, im]");
  return {at(0).number(), at(1).number()};
}

double JsonReader::number_or(const std::string& key, double fallback) const {
  return has(key) ? at(key).number() : fallback;
}

int JsonReader::integer_or(const std::string& key, int fallback) const {
  return has(key) ? at(key).integer() : fallback;
}

std::string JsonReader::string_or(const std::string& key, const std::string& fallback) const {
  return has(key) ? at(key).string() : fallback;
}

void JsonReader::fail(const std::string& message) const {
  throw ConfigError((path_.empty() ? std::string("<root>") : path_) + ": " + message);
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

FunctionSpec function_from_json(const JsonReader& in) {
  const std::string type = in.at("type").string();
  return guarded(in, [&]() -> FunctionSpec {
    if (type == "monomial") return FunctionSpec::monomial(in.at("n").integer());
    if (type == "polynomial") return FunctionSpec::polynomial(complex_list(in.at("coeffs")));
    if (type == "constant") return FunctionSpec::constant(in.at("c").complex());
    if (type == "cauchy") return FunctionSpec::cauchy(in.at("b").complex());
    if (type == "scaled_cauchy") {
      return FunctionSpec::scaled_cauchy(in.at("b").complex(), in.number_or("p", 2.0), in.number_or("eta", 1.0));
    }
    if (type == "log") return FunctionSpec::log_kernel();
    if (type == "lacunary") {
      return FunctionSpec::lacunary(in.at("base").integer(), in.number_or("alpha", 1.0), in.integer_or("stride", 1),
                                    in.integer_or("offset", 0), in.integer_or("terms", 0));
    }
    if (type == "mobius_pullback") {
      return FunctionSpec::mobius_pullback(MobiusMap(in.at("w").complex()), function_from_json(in.at("outer")));
    }
    if (type == "sum") {
      const JsonReader terms = in.at("terms");
      std::vector<FunctionSpec> out;
      for (std::size_t i = 0; i < terms.size(); ++i) out.push_back(function_from_json(terms.at(i)));
      return FunctionSpec::sum(std::move(out));
    }
    if (type == "scale") return FunctionSpec::scale(in.at("c").complex(), function_from_json(in.at("inner")));
    if (type == "compose") {
      return FunctionSpec::compose(function_from_json(in.at("outer")), function_from_json(in.at("inner")));
    }
    in.at("type").fail("unknown function type '" + type + "'");
  });
}

SelfMapSpec self_map_from_json(const JsonReader& in) {
  const std::string type = in.at("type").string();
  return guarded(in, [&]() -> SelfMapSpec {
    if (type == "identity") return SelfMapSpec::identity();
    if (type == "mobius") return SelfMapSpec::mobius(in.at("a").complex());
    if (type == "polynomial") return SelfMapSpec::polynomial(complex_list(in.at("coeffs")));
    if (type == "blaschke") {
      const Complex u = in.has("rotation") ? in.at("rotation").complex() : Complex{1.0, 0.0};
      return SelfMapSpec::blaschke(complex_list(in.at("zeros")), u);
    }
    if (type == "scaled") return SelfMapSpec::scaled(in.at("c").number(), self_map_from_json(in.at("inner")));
    in.at("type").fail("unknown self-map type '" + type + "'");
  });
}

Density density_from_json(const JsonReader& in) {
  const std::string type = in.at("type").string();
  return guarded(in, [&]() -> Density {
    if (type == "constant") return Density::constant(in.number_or("c", 1.0));
    if (type == "boundary_power") return Density::boundary_power(in.at("s").number());
    if (type == "derivative_energy") {
      return Density::derivative_energy(function_from_json(in.at("function")), in.number_or("s", 1.0));
    }
    if (type == "level_set") {
      return Density::level_set(
          LevelSetSpec{function_from_json(in.at("function")), in.at("eta").number(), in.at("eps").number()});
    }
    if (type == "scaled") return Density::scaled(in.at("c").number(), density_from_json(in.at("inner")));
    in.at("type").fail("unknown density type '" + type + "'");
  });
}

GridConfig grid_from_json(const JsonReader& in, GridConfig g) {
  if (!in.value().is_object()) in.fail("expected an object");
  static const char* kKnown[] = {"circle_nodes", "radial_panels", "arc_depth",   "delta_min",
                                 "gauss_order",  "w_angles",      "disk_angles", "area_angles"};
  for (auto it = in.value().begin(); it != in.value().end(); ++it) {
    bool known = false;
    for (const char* k : kKnown) known = known || it.key() == k;
    if (!known) in.at(it.key()).fail("unknown grid field");
  }
  g.circle_nodes = in.integer_or("circle_nodes", g.circle_nodes);
  g.radial_panels = in.integer_or("radial_panels", g.radial_panels);
  g.arc_depth = in.integer_or("arc_depth", g.arc_depth);
  g.delta_min = in.number_or("delta_min", g.delta_min);
  g.gauss_order = in.integer_or("gauss_order", g.gauss_order);
  g.w_angles = in.integer_or("w_angles", g.w_angles);
  g.disk_angles = in.integer_or("disk_angles", g.disk_angles);
  g.area_angles = in.integer_or("area_angles", g.area_angles);
  try {
    g.validate();
  } catch (const ConfigError& e) {
    throw ConfigError((in.path().empty() ? std::string() : in.path() + ".") + e.what());
  }
  return g;
}

Arc arc_from_json(const JsonReader& in) {
  return guarded(in, [&] { return Arc(in.at("center").number(), in.at("length").number()); });
}

Json to_json(const FunctionSpec& f) {
  return std::visit(
      Overloaded{
          [](const spec::Monomial& m) { return Json{{"type", "monomial"}, {"n", m.n}}; },
          [](const spec::Polynomial& p) { return Json{{"type", "polynomial"}, {"coeffs", complex_list_to_json(p.coeffs)}}; },
          [](const spec::CauchyKernel& c) { return Json{{"type", "cauchy"}, {"b", complex_to_json(c.b)}}; },
          [](const spec::ScaledCauchy& c) {
            return Json{{"type", "scaled_cauchy"}, {"b", complex_to_json(c.b)}, {"p", c.p}, {"eta", c.eta}};
          },
          [](const spec::LogKernel&) { return Json{{"type", "log"}}; },
          [](const spec::Lacunary& l) {
            return Json{{"type", "lacunary"}, {"base", l.base},     {"alpha", l.alpha},
                        {"stride", l.stride}, {"offset", l.offset}, {"terms", l.terms}};
          },
          [](const spec::MobiusPullback& m) {
            return Json{{"type", "mobius_pullback"}, {"w", complex_to_json(m.inner.center())}, {"outer", to_json(*m.outer)}};
          },
          [](const spec::Sum& s) {
            Json terms = Json::array();
            for (const auto& t : s.terms) terms.push_back(to_json(t));
            return Json{{"type", "sum"}, {"terms", terms}};
          },
          [](const spec::Scale& s) {
            return Json{{"type", "scale"}, {"c", complex_to_json(s.c)}, {"inner", to_json(*s.inner)}};
          },
          [](const spec::Compose& c) {
            return Json{{"type", "compose"}, {"outer", to_json(*c.outer)}, {"inner", to_json(*c.inner)}};
          },
      },
      f.node());
}

Json to_json(const SelfMapSpec& phi) {
  return std::visit(
      Overloaded{
          [](const selfmap::Mobius& m) { return Json{{"type", "mobius"}, {"a", complex_to_json(m.map.center())}}; },
          [](const selfmap::Polynomial& p) {
            return Json{{"type", "polynomial"}, {"coeffs", complex_list_to_json(p.coeffs)}, {"margin", p.margin}};
          },
          [](const selfmap::Blaschke& b) {
            return Json{{"type", "blaschke"}, {"zeros", complex_list_to_json(b.zeros)}, {"rotation", complex_to_json(b.rotation)}};
          },
          [](const selfmap::Scaled& s) { return Json{{"type", "scaled"}, {"c", s.c}, {"inner", to_json(*s.inner)}}; },
      },
      phi.node());
}

Json to_json(const Density& rho) {
  return std::visit(
      Overloaded{
          [](const density::Constant& c) { return Json{{"type", "constant"}, {"c", c.c}}; },
          [](const density::BoundaryPower& b) { return Json{{"type", "boundary_power"}, {"s", b.s}}; },
          [](const density::DerivativeEnergy& e) {
            return Json{{"type", "derivative_energy"}, {"function", to_json(e.f)}, {"s", e.s}};
          },
          [](const density::LevelSet& l) {
            return Json{{"type", "level_set"}, {"function", to_json(l.set.f)}, {"eta", l.set.eta}, {"eps", l.set.eps}};
          },
          [](const density::Scaled& s) { return Json{{"type", "scaled"}, {"c", s.c}, {"inner", to_json(*s.inner)}}; },
      },
      rho.node());
}

Json to_json(const GridConfig& g) {
  return Json{{"circle_nodes", g.circle_nodes}, {"radial_panels", g.radial_panels}, {"arc_depth", g.arc_depth},
              {"delta_min", g.delta_min},       {"gauss_order", g.gauss_order},     {"w_angles", g.w_angles},
              {"disk_angles", g.disk_angles},   {"area_angles", g.area_angles}};
}

Json to_json(const Arc& arc) { return Json{{"center", arc.center_angle}, {"length", arc.length}}; }

Json to_json(const SeminormReport& report) {
  Json out{{"value", report.value}, {"flags", flag_names(report.flags)}};
  if (report.arc) out["witness"] = Json{{"arc", to_json(*report.arc)}};
  if (report.point) out["witness"] = Json{{"point", complex_to_json(*report.point)}};
  if (!report.level_maxima.empty()) out["level_maxima"] = report.level_maxima;
  return out;
}

Json parse_json(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ConfigError(origin + ": malformed JSON: " + e.what());
  }
}

}  // namespace campanato
