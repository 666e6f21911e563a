#include "sectorstab/commands.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "sectorstab/oracle.hpp"
#include "sectorstab/sector.hpp"
#include "sectorstab/specfile.hpp"

namespace sectorstab {

namespace {

using nlohmann::json;

// Shortest representation that round-trips; used everywhere machine output
// must be reproducible byte for byte.
std::string fmt_double(double v) {
  char buf[32];
  const auto result = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, result.ptr);
}

std::string fmt_complex(std::complex<double> z) {
  std::string out = fmt_double(z.real());
  out += z.imag() < 0.0 ? "-" : "+";
  out += fmt_double(std::abs(z.imag()));
  out += "i";
  return out;
}

json complex_json(std::complex<double> z) {
  return json{{"re", z.real()}, {"im", z.imag()}};
}

json verdict_json(const StabilityVerdict& verdict) {
  json roots = json::array();
  for (const auto& [root, pc] : verdict.per_root) {
    roots.push_back(json{{"re", root.real()},
                         {"im", root.imag()},
                         {"margin_rad", pc.angular_margin},
                         {"class", std::string(region_name(pc.region))}});
  }
  return json{{"status", std::string(status_name(verdict.status))},
              {"margin_rad", verdict.margin},
              {"worst_root", complex_json(verdict.worst_root)},
              {"roots", std::move(roots)},
              {"solver_converged", verdict.solver_converged}};
}

json report_json(const SpecFile& spec, const FamilyReport& report) {
  json vertices = json::array();
  for (std::size_t k = 0; k < report.patterns.size(); ++k) {
    json v = verdict_json(report.verdicts[k]);
    v["index"] = k;
    v["pattern"] = report.patterns[k].str();
    v["start"] = report.starts[k];
    v["coeffs"] = report.vertices[k].coeffs;
    vertices.push_back(std::move(v));
  }
  return json{{"degree", spec.family.degree()},
              {"family", json{{"lower", spec.family.lower()},
                              {"upper", spec.family.upper()},
                              {"negated", spec.family.negated()}}},
              {"sector", json{{"p", spec.sector.p()},
                              {"q", spec.sector.q()},
                              {"boundary_angle_rad", spec.sector.boundary_angle()}}},
              {"family_status", std::string(status_name(report.family_status))},
              {"worst_vertex", report.worst_vertex},
              {"vertices", std::move(vertices)}};
}

json oracle_json(const OracleReport& report) {
  json j{{"method", std::string(oracle_method_name(report.method))},
         {"status", std::string(status_name(report.status))},
         {"checked_count", report.checked_count}};
  if (report.seed) j["seed"] = *report.seed;
  if (report.counterexample) {
    j["counterexample"] = json{{"coeffs", report.counterexample->coeffs},
                               {"worst_root", complex_json(report.counterexample->worst_root)}};
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

void print_check_text(std::ostream& out, const SpecFile& spec, const FamilyReport& report) {
  out << "family: degree " << spec.family.degree() << ", sector p/q = " << spec.sector.p() << "/"
      << spec.sector.q() << " (boundary angle " << spec.sector.boundary_angle() << " rad)\n";
  if (spec.family.negated()) out << "note: box was negated during validation\n";
  out << "critical vertices: " << report.patterns.size() << "\n";
  for (std::size_t k = 0; k < report.patterns.size(); ++k) {
    const auto& verdict = report.verdicts[k];
    out << "  [" << k << "] " << report.patterns[k].str() << "  "
        << status_name(verdict.status) << "  margin " << fmt_double(verdict.margin)
        << " rad\n      coeffs:";
    for (double c : report.vertices[k].coeffs) out << " " << fmt_double(c);
    out << "\n      roots:";
    for (const auto& [root, pc] : verdict.per_root) {
      out << " " << fmt_complex(root) << " (" << region_name(pc.region) << ")";
    }
    out << "\n";
  }
  const auto& worst = report.verdicts[static_cast<std::size_t>(report.worst_vertex)];
  out << "family status: " << status_name(report.family_status) << " (worst vertex "
      << report.worst_vertex << ", margin " << fmt_double(worst.margin) << " rad)\n";
}

int status_exit_code(Status s) {
  switch (s) {
    case Status::Stable: return kExitStable;
    case Status::Unstable: return kExitUnstable;
    case Status::Marginal: return kExitMarginal;
  }
  return kExitInputError;
}

}  // namespace

// A contradiction needs two definite verdicts. The exhaustive oracle decides
// a superset of the critical vertices, so Stable-vs-Unstable in either
// direction is an alarm; the sampler can only alarm by finding a concrete
// unstable member of a family the vertex test certified.
bool verdicts_contradict(Status family, Status exhaustive, Status sampled) {
  const bool vertex_vs_exhaustive =
      (family == Status::Stable && exhaustive == Status::Unstable) ||
      (family == Status::Unstable && exhaustive == Status::Stable);
  const bool vertex_vs_sampled = family == Status::Stable && sampled == Status::Unstable;
  return vertex_vs_exhaustive || vertex_vs_sampled;
}

int cmd_vertices(int p, int q, int degree, OutputFormat format, std::ostream& out,
                 std::ostream& err) {
  try {
    const SectorSpec sector(p, q);
    const CriticalPatterns critical = critical_patterns(sector, degree);
    if (format == OutputFormat::Machine) {
      json j{{"p", p}, {"q", q}, {"degree", degree}, {"starts", critical.starts}};
      json patterns = json::array();
      for (const auto& pattern : critical.patterns) patterns.push_back(pattern.str());
      j["patterns"] = std::move(patterns);
      out << j.dump(2) << "\n";
    } else {
      for (const auto& pattern : critical.patterns) out << pattern.str() << "\n";
    }
    return kExitStable;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

int cmd_check(const std::string& spec_path, OutputFormat format, std::ostream& out,
              std::ostream& err) {
  try {
    const SpecFile spec = load_spec(spec_path);
    const FamilyReport report = family_check(spec.family, spec.sector, spec.tolerances);
    if (format == OutputFormat::Machine) {
      out << report_json(spec, report).dump(2) << "\n";
    } else {
      print_check_text(out, spec, report);
    }
    return status_exit_code(report.family_status);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

int cmd_verify(const std::string& spec_path, std::optional<long long> samples,
               std::optional<std::uint64_t> seed, OutputFormat format, std::ostream& out,
               std::ostream& err) {
  try {
    const SpecFile spec = load_spec(spec_path);
    const long long sample_count = samples.value_or(spec.samples.value_or(10000));
    if (sample_count < 1) throw std::runtime_error("sample count must be >= 1");
    const std::uint64_t rng_seed = seed.value_or(spec.seed.value_or(0));

    const FamilyReport family = family_check(spec.family, spec.sector, spec.tolerances);
    const OracleReport exhaustive =
        exhaustive_vertex_check(spec.family, spec.sector, spec.tolerances);
    const OracleReport sampled =
        monte_carlo_check(spec.family, spec.sector, sample_count, rng_seed, spec.tolerances);

    const bool alarm = verdicts_contradict(family.family_status, exhaustive.status, sampled.status);

    if (format == OutputFormat::Machine) {
      json worst = verdict_json(family.verdicts[static_cast<std::size_t>(family.worst_vertex)]);
      json j{{"family_check",
              json{{"status", std::string(status_name(family.family_status))},
                   {"vertex_count", family.patterns.size()},
                   {"worst_vertex", family.worst_vertex},
                   {"worst_vertex_detail", std::move(worst)}}},
             {"exhaustive", oracle_json(exhaustive)},
             {"monte_carlo", oracle_json(sampled)},
             {"samples", sample_count},
             {"seed", rng_seed},
             {"agreement", !alarm}};
      out << j.dump(2) << "\n";
    } else {
      out << "method            status      checked\n";
      out << "critical-vertex   " << std::left << std::setw(12)
          << status_name(family.family_status) << family.patterns.size() << "\n";
      out << "exhaustive        " << std::setw(12) << status_name(exhaustive.status)
          << exhaustive.checked_count << "\n";
      out << "monte-carlo       " << std::setw(12) << status_name(sampled.status)
          << sampled.checked_count << " (seed " << rng_seed << ")\n";
      for (const OracleReport* oracle : {&exhaustive, &sampled}) {
        if (oracle->counterexample) {
          out << "counterexample (" << oracle_method_name(oracle->method) << "):";
          for (double c : oracle->counterexample->coeffs) out << " " << fmt_double(c);
          out << "  worst root " << fmt_complex(oracle->counterexample->worst_root) << "\n";
        }
      }
      out << (alarm ? "verdicts CONTRADICT: critical-vertex result disagrees with an oracle\n"
                    : "verdicts consistent\n");
    }
    return alarm ? kExitDisagreement : kExitStable;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

int cmd_roots(const std::string& spec_path, const std::string& out_path, std::ostream& out,
              std::ostream& err) {
  std::optional<SpecFile> spec;
  std::optional<FamilyReport> parsed;
  try {
    spec = load_spec(spec_path);
    parsed = family_check(spec->family, spec->sector, spec->tolerances);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  const FamilyReport& report = *parsed;

  std::ofstream file(out_path);
  if (!file) {
    err << "error: cannot write '" << out_path << "'\n";
    return kExitIoError;
  }
  file << "vertex_index,root_re,root_im,margin_rad,class\n";
  for (std::size_t k = 0; k < report.verdicts.size(); ++k) {
    for (const auto& [root, pc] : report.verdicts[k].per_root) {
      file << k << "," << fmt_double(root.real()) << "," << fmt_double(root.imag()) << ","
           << fmt_double(pc.angular_margin) << "," << region_name(pc.region) << "\n";
    }
  }
  const double boundary = spec->sector.boundary_angle();
  for (double direction : {1.0, -1.0}) {
    file << "-1," << fmt_double(std::cos(boundary)) << ","
         << fmt_double(direction * std::sin(boundary)) << ",0,boundary\n";
  }
  file.flush();
  if (!file) {
    err << "error: write to '" << out_path << "' failed\n";
    return kExitIoError;
  }
  out << "wrote " << out_path << "\n";
  return kExitStable;
}

}  // namespace sectorstab
