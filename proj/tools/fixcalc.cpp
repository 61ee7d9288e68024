// fixcalc: fixed points of set generators and real functions.
//
// Subcommands: fixpoint, classify, duality, perfect, real.
// Output formats: table (default), json, csv. Results go to stdout,
// errors to stderr; exit code 0 on success, 2 on usage/domain errors.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fixcalc/arithmetic.hpp"
#include "fixcalc/duality.hpp"
#include "fixcalc/fixpoint.hpp"
#include "fixcalc/generator.hpp"
#include "fixcalc/lattice.hpp"
#include "fixcalc/real_analysis.hpp"
#include "fixcalc/serialize.hpp"

namespace {

using nlohmann::json;

// peano | identity | constant:{...} | additive:<seed> | table:<file>
fixcalc::Generator parse_generator(const std::string& spec, const fixcalc::Universe& u) {
  if (spec == "peano") return fixcalc::peano_successor(u);
  if (spec == "identity") return fixcalc::identity_generator(u);
  if (spec.rfind("constant:", 0) == 0) {
    return fixcalc::constant_generator(u, fixcalc::Subset::parse(u, spec.substr(9)));
  }
  if (spec.rfind("additive:", 0) == 0) {
    return fixcalc::additive_random_generator(u, std::stoull(spec.substr(9)));
  }
  if (spec.rfind("table:", 0) == 0) {
    std::string path = spec.substr(6);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open table file: " + path);
    return fixcalc::load_table_generator(u, in);
  }
  throw std::invalid_argument(
      "unknown generator '" + spec +
      "' (expected peano, identity, constant:<subset>, additive:<seed>, table:<file>)");
}

std::string trace_line(const std::vector<fixcalc::Subset>& trace) {
  std::ostringstream os;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    if (i) os << " -> ";
    os << trace[i];
  }
  return os.str();
}

void print_fixpoint(const fixcalc::FixpointReport& r, const std::string& format) {
  if (format == "json") {
    std::cout << fixcalc::to_json(r).dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "field,value\n";
    std::cout << "generator," << r.generator_name << "\n";
    std::cout << "lfp," << r.lfp << "\n";
    std::cout << "gfp," << r.gfp << "\n";
    for (std::size_t i = 0; i < r.lfp_trace.size(); ++i) {
      std::cout << "lfp_trace[" << i << "]," << r.lfp_trace[i] << "\n";
    }
    for (std::size_t i = 0; i < r.gfp_trace.size(); ++i) {
      std::cout << "gfp_trace[" << i << "]," << r.gfp_trace[i] << "\n";
    }
    std::cout << "partition.mu," << r.partition.mu << "\n";
    std::cout << "partition.nu_minus_mu," << r.partition.nu_minus_mu << "\n";
    std::cout << "partition.outside," << r.partition.outside << "\n";
  } else {
    std::cout << "generator: " << r.generator_name << "\n";
    std::cout << "lfp (mu): " << r.lfp << "\n";
    std::cout << "gfp (nu): " << r.gfp << "\n";
    std::cout << "lfp trace: " << trace_line(r.lfp_trace) << "\n";
    std::cout << "gfp trace: " << trace_line(r.gfp_trace) << "\n";
    std::cout << "partition: mu=" << r.partition.mu
              << " nu-mu=" << r.partition.nu_minus_mu
              << " outside=" << r.partition.outside << "\n";
  }
}

void print_classification(const std::string& name, const fixcalc::ClassificationTable& t,
                          const std::string& format) {
  if (format == "json") {
    std::cout << fixcalc::to_json(name, t).dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "subset,class\n";
    for (const auto& [subset, cls] : t.rows) {
      std::cout << subset << "," << fixcalc::to_string(cls) << "\n";
    }
  } else {
    std::cout << "generator: " << name << "\n";
    for (const auto& [subset, cls] : t.rows) {
      std::cout << "  " << std::left << std::setw(20) << subset.to_string()
                << fixcalc::to_string(cls) << "\n";
    }
    using fixcalc::PointClass;
    std::cout << "counts: fixed=" << t.counts[static_cast<int>(PointClass::Fixed)]
              << " proper-pre-fixed=" << t.counts[static_cast<int>(PointClass::ProperPreFixed)]
              << " proper-post-fixed=" << t.counts[static_cast<int>(PointClass::ProperPostFixed)]
              << " neither=" << t.counts[static_cast<int>(PointClass::Neither)] << "\n";
  }
}

fixcalc::RealFunctionSpec parse_real_function(const std::string& fn) {
  if (fn == "f") return fixcalc::builtin_f();
  if (fn == "g") return fixcalc::builtin_g();
  if (fn.rfind("file:", 0) == 0) {
    std::string path = fn.substr(5);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open function file: " + path);
    json doc = json::parse(in);
    std::vector<fixcalc::PolyPiece> pieces;
    for (const json& p : doc.at("pieces")) {
      pieces.push_back(fixcalc::PolyPiece{p.at("lo").get<double>(), p.at("hi").get<double>(),
                                          p.value("closed_lo", true), p.value("closed_hi", true),
                                          p.at("coeffs").get<std::vector<double>>()});
    }
    return fixcalc::RealFunctionSpec(doc.value("name", path), std::move(pieces));
  }
  throw std::invalid_argument("unknown function '" + fn + "' (expected f, g, or file:<path>)");
}

void run_real(const std::string& fn, const std::string& action, double x, bool have_x, double x0,
              double step, double tol, int max_iter, const std::string& format) {
  fixcalc::RealFunctionSpec spec = parse_real_function(fn);
  std::cout << std::setprecision(12);
  if (action == "classify") {
    if (!have_x) {
      // Whole-domain plot data on the scan grid.
      if (format != "csv") throw std::invalid_argument("grid classify requires --format csv");
      std::cout << "x,phi,identity,class\n";
      double a = spec.domain_lo(), b = spec.domain_hi();
      auto n = static_cast<long>(std::ceil((b - a) / step));
      for (long i = 0; i <= n; ++i) {
        double xi = std::min(a + static_cast<double>(i) * step, b);
        std::cout << xi << "," << spec.eval(xi) << "," << xi << ","
                  << fixcalc::to_string(fixcalc::classify_point(spec, xi, tol)) << "\n";
      }
      return;
    }
    fixcalc::RealPointClass cls = fixcalc::classify_point(spec, x, tol);
    if (format == "json") {
      std::cout << json{{"schema", 1}, {"function", spec.name()}, {"x", x},
                        {"phi", spec.eval(x)}, {"class", fixcalc::to_string(cls)}}
                       .dump(2)
                << "\n";
    } else {
      std::cout << spec.name() << "(" << x << ") = " << spec.eval(x) << ": "
                << fixcalc::to_string(cls) << "\n";
    }
  } else if (action == "fixed-points") {
    fixcalc::FixedPointScan scan = fixcalc::find_fixed_points(spec, step, tol);
    if (format == "json") {
      std::cout << fixcalc::to_json(scan).dump(2) << "\n";
    } else {
      for (const auto& iv : scan.intervals) {
        std::cout << "fixed interval [" << iv.lo << ", " << iv.hi << "]\n";
      }
      for (const auto& p : scan.points) {
        std::cout << "fixed point x = " << p.location << " (residual " << p.residual << ")\n";
      }
      if (scan.intervals.empty() && scan.points.empty()) std::cout << "no fixed points found\n";
    }
  } else if (action == "zeros") {
    std::vector<double> zeros = fixcalc::find_zeros(spec, step, tol);
    if (format == "json") {
      std::cout << json{{"schema", 1}, {"function", spec.name()}, {"zeros", zeros}}.dump(2)
                << "\n";
    } else {
      for (double z : zeros) std::cout << "zero x = " << z << "\n";
      if (zeros.empty()) std::cout << "no zeros found\n";
    }
  } else if (action == "newton" || action == "iterate") {
    fixcalc::FixedPointResult r =
        action == "newton" ? fixcalc::newton_fixed_point(spec, x0, tol, max_iter)
                           : fixcalc::fixed_point_iteration(spec, x0, tol, max_iter);
    if (format == "json") {
      json j = fixcalc::to_json(r);
      j["schema"] = 1;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "converged to x = " << r.location << " (residual " << r.residual << ", "
                << r.iterations << " iterations)\n";
    }
  } else {
    throw std::invalid_argument("unknown action '" + action +
                                "' (expected classify, fixed-points, zeros, newton, iterate)");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fixcalc: fixed points over powerset lattices, integers, and reals"};
  app.require_subcommand(1);

  std::string gen = "peano";
  int size = 8;
  std::string format = "table";
  bool override_monotone = false;

  auto add_lattice_opts = [&](CLI::App* cmd) {
    cmd->add_option("--gen", gen,
                    "generator: peano|identity|constant:<subset>|additive:<seed>|table:<file>");
    cmd->add_option("--size", size, "universe size")->check(CLI::Range(1, 63));
    cmd->add_option("--format", format)->check(CLI::IsMember({"table", "json", "csv"}));
  };

  CLI::App* fixpoint_cmd = app.add_subcommand("fixpoint", "least/greatest fixed points");
  add_lattice_opts(fixpoint_cmd);
  fixpoint_cmd->add_flag("--override", override_monotone,
                         "iterate non-monotone generators under a step cap");

  CLI::App* classify_cmd = app.add_subcommand("classify", "pre/post/fixed table of all subsets");
  add_lattice_opts(classify_cmd);

  CLI::App* duality_cmd = app.add_subcommand("duality", "check nu_F against the dual route");
  add_lattice_opts(duality_cmd);

  std::uint64_t limit = 10000;
  CLI::App* perfect_cmd = app.add_subcommand("perfect", "deficient/perfect/abundant census");
  perfect_cmd->add_option("--limit", limit, "classify 1..limit");
  perfect_cmd->add_option("--format", format)->check(CLI::IsMember({"table", "json", "csv"}));

  std::string fn = "f", action = "fixed-points";
  double x = 0, x0 = 0, step = 0.01, tol = 1e-9;
  int max_iter = 100;
  CLI::App* real_cmd = app.add_subcommand("real", "fixed points of real functions");
  real_cmd->add_option("--fn", fn, "function: f|g|file:<path>");
  real_cmd->add_option("--action", action, "classify|fixed-points|zeros|newton|iterate");
  CLI::Option* x_opt = real_cmd->add_option("--x", x, "point to classify");
  real_cmd->add_option("--x0", x0, "iteration start");
  real_cmd->add_option("--step", step, "scan grid step");
  real_cmd->add_option("--tol", tol, "residual tolerance");
  real_cmd->add_option("--max-iter", max_iter, "iteration cap");
  real_cmd->add_option("--format", format)->check(CLI::IsMember({"table", "json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*fixpoint_cmd) {
      fixcalc::Universe u(size);
      fixcalc::Generator g = parse_generator(gen, u);
      auto policy = override_monotone ? fixcalc::IterationPolicy::Override
                                      : fixcalc::IterationPolicy::VerifyMonotone;
      print_fixpoint(fixcalc::compute_fixpoints(g, policy), format);
    } else if (*classify_cmd) {
      fixcalc::Universe u(size);
      fixcalc::Generator g = parse_generator(gen, u);
      print_classification(g.name(), fixcalc::classify_all(g), format);
    } else if (*duality_cmd) {
      fixcalc::Universe u(size);
      fixcalc::Generator g = parse_generator(gen, u);
      fixcalc::DualityReport r = fixcalc::verify_duality(g);
      if (format == "json") {
        std::cout << fixcalc::to_json(r).dump(2) << "\n";
      } else {
        std::cout << "generator: " << r.generator_name << "\n";
        std::cout << "gfp (direct): " << r.gfp_direct << "\n";
        std::cout << "rejected (mu of dual): " << r.rejected << "\n";
        std::cout << "gfp (via duality): " << r.gfp_via_duality << "\n";
        std::cout << "agrees: " << (r.agrees ? "true" : "false") << "\n";
      }
    } else if (*perfect_cmd) {
      fixcalc::ClassCensus census = fixcalc::enumerate_classes(limit);
      if (format == "json") {
        std::cout << fixcalc::to_json(census).dump(2) << "\n";
      } else if (format == "csv") {
        std::cout << "n,sd,class\n";
        for (std::uint64_t p = 1; p <= limit; ++p) {
          std::cout << p << "," << fixcalc::sd(p) << ","
                    << fixcalc::to_string(fixcalc::classify_number(p)) << "\n";
        }
      } else {
        std::cout << "perfect numbers up to " << limit << ":";
        for (std::uint64_t p : census.perfect_numbers) std::cout << " " << p;
        std::cout << "\n";
        std::cout << "deficient: " << census.deficient << "\n";
        std::cout << "perfect:   " << census.perfect << "\n";
        std::cout << "abundant:  " << census.abundant << "\n";
      }
    } else if (*real_cmd) {
      run_real(fn, action, x, x_opt->count() > 0, x0, step, tol, max_iter, format);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
