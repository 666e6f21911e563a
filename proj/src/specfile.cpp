#include "sectorstab/specfile.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace sectorstab {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& message) {
  throw std::runtime_error("spec file: " + message);
}

std::vector<double> number_array(const json& j, const std::string& field) {
  if (!j.contains(field)) fail("missing field '" + field + "'");
  const json& arr = j.at(field);
  if (!arr.is_array()) fail("field '" + field + "' must be an array of numbers");
  std::vector<double> out;
  out.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_number()) {
      fail("field '" + field + "[" + std::to_string(i) + "]' must be a number");
    }
    out.push_back(arr[i].get<double>());
  }
  return out;
}

int int_field(const json& j, const std::string& owner, const std::string& field) {
  if (!j.contains(field)) fail("missing field '" + owner + "." + field + "'");
  if (!j.at(field).is_number_integer()) {
    fail("field '" + owner + "." + field + "' must be an integer");
  }
  return j.at(field).get<int>();
}

double positive_number(const json& v, const std::string& name) {
  if (!v.is_number()) fail("field '" + name + "' must be a number");
  const double x = v.get<double>();
  if (!(x >= 0.0) || !std::isfinite(x)) fail("field '" + name + "' must be finite and >= 0");
  return x;
}

constexpr const char* kKnownKeys[] = {"lower", "upper", "sector", "tolerances", "seed", "samples"};

}  // namespace

SpecFile parse_spec(const std::string& text) {
  json j;
  try {
    j = json::parse(text, nullptr, /*allow_exceptions=*/true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    fail(e.what());
  }
  if (!j.is_object()) fail("top level must be an object");

  for (const auto& [key, value] : j.items()) {
    (void)value;
    bool known = false;
    for (const char* k : kKnownKeys) known = known || key == k;
    if (!known) fail("unknown field '" + key + "'");
  }

  std::vector<double> lower = number_array(j, "lower");
  std::vector<double> upper = number_array(j, "upper");

  if (!j.contains("sector") || !j.at("sector").is_object()) {
    fail("missing object field 'sector' with integer members p and q");
  }
  const int p = int_field(j.at("sector"), "sector", "p");
  const int q = int_field(j.at("sector"), "sector", "q");

  Tolerances tol;
  if (j.contains("tolerances")) {
    const json& t = j.at("tolerances");
    if (!t.is_object()) fail("field 'tolerances' must be an object");
    for (const auto& [key, value] : t.items()) {
      if (key == "angle") {
        tol.angle = positive_number(value, "tolerances.angle");
      } else if (key == "magnitude") {
        tol.magnitude = positive_number(value, "tolerances.magnitude");
      } else {
        fail("unknown field 'tolerances." + key + "'");
      }
    }
  }

  std::optional<std::uint64_t> seed;
  if (j.contains("seed")) {
    if (!j.at("seed").is_number_unsigned() && !j.at("seed").is_number_integer()) {
      fail("field 'seed' must be a non-negative integer");
    }
    if (j.at("seed").is_number_integer() && j.at("seed").get<long long>() < 0) {
      fail("field 'seed' must be a non-negative integer");
    }
    seed = j.at("seed").get<std::uint64_t>();
  }

  std::optional<long long> samples;
  if (j.contains("samples")) {
    if (!j.at("samples").is_number_integer()) fail("field 'samples' must be a positive integer");
    samples = j.at("samples").get<long long>();
    if (*samples < 1) fail("field 'samples' must be a positive integer");
  }

  return SpecFile{IntervalFamily(std::move(lower), std::move(upper)), SectorSpec(p, q), tol, seed,
                  samples};
}

SpecFile load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read spec file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_spec(buffer.str());
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string(e.what()) + " (in '" + path + "')");
  }
}

std::string format_spec(const SpecFile& spec) {
  json j;
  j["lower"] = spec.family.lower();
  j["upper"] = spec.family.upper();
  j["sector"] = {{"p", spec.sector.p()}, {"q", spec.sector.q()}};
  const Tolerances defaults;
  if (spec.tolerances.angle != defaults.angle || spec.tolerances.magnitude != defaults.magnitude) {
    j["tolerances"] = {{"angle", spec.tolerances.angle}, {"magnitude", spec.tolerances.magnitude}};
  }
  if (spec.seed) j["seed"] = *spec.seed;
  if (spec.samples) j["samples"] = *spec.samples;

  std::string out = "// coefficient arrays are ascending powers: index i multiplies s^i\n";
  out += j.dump(2);
  out += '\n';
  return out;
}

}  // namespace sectorstab
