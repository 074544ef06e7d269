#pragma once

#include <string>

#include "json.hpp"

#include "campanato/carleson.hpp"
#include "campanato/function_spec.hpp"
#include "campanato/quadrature.hpp"
#include "campanato/self_map.hpp"
#include "campanato/seminorms.hpp"

namespace campanato {

using Json = nlohmann::json;

/// Typed access to a JSON value that reports failures as ConfigError naming
/// the field path ("rows[2].function.b").
class JsonReader {
 public:
  JsonReader(const Json& value, std::string path) : value_(&value), path_(std::move(path)) {}

  const Json& value() const { return *value_; }
  const std::string& path() const { return path_; }

  bool has(const std::string& key) const;
  JsonReader at(const std::string& key) const;
  JsonReader at(std::size_t index) const;
  std::size_t size() const;

  double number() const;
  int integer() const;
  bool boolean() const;
  std::string string() const;
  /// [re, im] or a plain number.
  Complex complex() const;

  double number_or(const std::string& key, double fallback) const;
  int integer_or(const std::string& key, int fallback) const;
  std::string string_or(const std::string& key, const std::string& fallback) const;

  [[noreturn]] void fail(const std::string& message) const;

 private:
  const Json* value_;
  std::string path_;
};

Json complex_to_json(Complex z);

FunctionSpec function_from_json(const JsonReader& in);
SelfMapSpec self_map_from_json(const JsonReader& in);
Density density_from_json(const JsonReader& in);
GridConfig grid_from_json(const JsonReader& in, GridConfig base = {});
Arc arc_from_json(const JsonReader& in);

Json to_json(const FunctionSpec& f);
Json to_json(const SelfMapSpec& phi);
Json to_json(const Density& rho);
Json to_json(const GridConfig& grid);
Json to_json(const Arc& arc);
Json to_json(const SeminormReport& report);

/// Parse text; malformed JSON raises ConfigError.
Json parse_json(const std::string& text, const std::string& origin);

}  // namespace campanato
