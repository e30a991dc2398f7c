#include "tetra/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "tetra/json_io.hpp"

namespace tetra::cli {

namespace {

using io::json;

struct RunConfig {
  double membership_tol = kMembershipTol;
  int samples = 0;  // 0: per-command default
  std::uint64_t seed = 0;
  bool lenient = false;
  std::string format;  // empty: json, csv for trace
  std::string out_file;
  std::string input;
};

// A failure to read or parse input.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_input(const RunConfig& cfg, std::istream& in) {
  std::string text;
  if (cfg.input.empty() || cfg.input == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } else {
    std::ifstream f(cfg.input);
    if (!f) throw InputError("cannot open " + cfg.input);
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(e.what());
  }
}

ValidationMode mode_of(const RunConfig& cfg) { return cfg.lenient ? ValidationMode::Lenient : ValidationMode::Strict; }

std::string fmt(double v) {
  std::ostringstream ss;
  ss << std::setprecision(17) << v;
  return ss.str();
}

json cmd_classify(const RunConfig& cfg, const json& j) {
  const bool gamma = j.is_object() ? j.contains("s") : (j.is_array() && j.size() == 2);
  if (gamma) {
    const GammaPoint g = io::gamma_point_from(j);
    return {{"kind", "gamma"}, {"region", std::string(to_string(classify_gamma(g, cfg.membership_tol)))},
            {"defect", gamma_defect(g)}};
  }
  const TetraPoint x = io::tetra_point_from(j);
  return {{"kind", "tetra"}, {"region", std::string(to_string(classify_tetra(x, cfg.membership_tol)))},
          {"defect", tetra_defect(x)}};
}

json cmd_construct(const json& j) {
  const TetraRational x = construct(io::spec_from(j));
  json out = io::to_json(x);
  out["analysis"] = io::analysis(x);
  return out;
}

json check(const std::string& name, bool passed, double measured) {
  return {{"name", name}, {"passed", passed}, {"measured", measured}};
}

json cmd_verify(const RunConfig& cfg, const json& j, bool& all_passed) {
  const io::RawTriple raw = io::raw_triple_from(j);
  const int samples = cfg.samples > 0 ? cfg.samples : kCircleSamples;
  const ValidationReport rep = check_conditions(raw.e1, raw.e2, raw.d, raw.n, mode_of(cfg), samples);
  json conds = json::array();
  for (const auto& c : rep.checks)
    conds.push_back({{"index", c.index}, {"name", c.name}, {"passed", c.passed}, {"measured", c.measured},
                     {"threshold", c.threshold}});
  json out{{"conditions", conds}, {"valid", rep.ok()}};
  all_passed = rep.ok();
  if (!rep.ok()) {
    out["invariants"] = json::array();
    return out;
  }

  const TetraRational x = TetraRational::validate(raw.e1, raw.e2, raw.d, raw.n, mode_of(cfg));
  const int n = x.n();
  const Polynomial r = royal_polynomial(x);
  const std::vector<cplx> pts = circle_points(512);
  double dsup = 0.0;
  for (cplx z : pts) dsup = std::max(dsup, std::abs(x.d()(z)));
  const double s2 = std::max(1e-300, dsup * dsup);

  double mod_gap = 0.0, propit = 0.0, low = 0.0, dist = 0.0;
  for (cplx z : pts) {
    const double a1 = std::abs(x.e1()(z)), a2 = std::abs(x.e2()(z)), ad = std::abs(x.d()(z));
    mod_gap = std::max(mod_gap, std::abs(a1 - a2) / std::max(dsup, 1e-300));
    const double shifted = (std::pow(z, -n) * r(z)).real();
    propit = std::max(propit, std::abs(shifted - (ad * ad - a2 * a2)) / s2);
    low = std::min(low, shifted / s2);
    if (x.mode() == ValidationMode::Strict) dist = std::max(dist, distinguished_defect(eval_function(x, z)));
  }
  const double rscale = std::max(1.0, r.max_abs_coeff());
  json inv = json::array();
  inv.push_back(check("|E1| = |E2| on the circle", mod_gap < 1e-10, mod_gap));
  inv.push_back(check("lambda^-n R = |D|^2 - |E2|^2", propit < 1e-9, propit));
  const double sym = r.is_zero() ? 0.0 : max_coeff_diff(r, reflect(r, 2 * n)) / rscale;
  inv.push_back(check("R is 2n-symmetric", sym < 1e-10, sym));
  inv.push_back(check("lambda^-n R >= 0 on the circle", low >= -1e-10, low));
  if (x.mode() == ValidationMode::Strict) {
    inv.push_back(check("circle values in the distinguished boundary", dist < 1e-9, dist));
    const int deg = degree(x);
    const int wind = winding_number(x, kCircleSamples);
    inv.push_back(check("winding number = degree", deg == wind, wind - deg));
  }
  std::mt19937_64 rng(cfg.seed);
  double worst = -1.0;
  for (int i = 0; i < 64; ++i) {
    const TetraPoint p = eval_function(x, random_in_disc(rng, 0.999));
    worst = std::max(worst, tetra_defect(p));
  }
  inv.push_back(check("disc values in the closed tetrablock", worst <= cfg.membership_tol, worst));
  for (const auto& c : inv) all_passed = all_passed && c["passed"].get<bool>();
  out["invariants"] = inv;
  return out;
}

json cmd_perturb(const json& j, const RunConfig& cfg) {
  const TetraRational x = io::tetra_rational_from(j, mode_of(cfg));
  const PerturbationResult res = perturb_nonextreme(x);
  json out{{"method", std::string(to_string(res.method))},
           {"t", res.t_used},
           {"x_plus", io::to_json(res.x_plus)},
           {"x_minus", io::to_json(res.x_minus)},
           {"midpoint_max_coeff_error", midpoint_error(res, x)}};
  if (!res.note.empty()) out["note"] = res.note;
  return out;
}

std::string trace_csv(const std::vector<TracePoint>& rows) {
  std::ostringstream ss;
  ss << "theta,x1_re,x1_im,x2_re,x2_im,x3_re,x3_im,defect\n";
  for (const auto& t : rows)
    ss << fmt(t.theta) << ',' << fmt(t.x.x1.real()) << ',' << fmt(t.x.x1.imag()) << ',' << fmt(t.x.x2.real()) << ','
       << fmt(t.x.x2.imag()) << ',' << fmt(t.x.x3.real()) << ',' << fmt(t.x.x3.imag()) << ',' << fmt(t.defect) << '\n';
  return ss.str();
}

// Flat CSV for a single JSON object: one header line, one value line.
std::string object_csv(const json& j) {
  std::ostringstream head, vals;
  bool first = true;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!it->is_primitive()) continue;
    head << (first ? "" : ",") << it.key();
    vals << (first ? "" : ",") << (it->is_string() ? it->get<std::string>() : it->dump());
    first = false;
  }
  return head.str() + "\n" + vals.str() + "\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Rational tetra-inner functions: construction, validation and analysis"};
  app.require_subcommand(1);
  app.add_option("--tol", cfg.membership_tol, "membership tolerance")->check(CLI::PositiveNumber);
  app.add_option("--samples", cfg.samples, "circle samples")->check(CLI::Range(16, 1 << 22));
  app.add_option("--seed", cfg.seed, "seed for randomized checks");
  auto* strict = app.add_flag("--strict", "D must not vanish on the closed disc (default)");
  app.add_flag("--lenient", cfg.lenient, "allow zeros of D on the circle")->excludes(strict);
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", cfg.out_file, "write output to FILE");

  const char* names[][2] = {{"classify", "classify a tetrablock or Gamma point"},
                            {"construct", "build a function from zeros and royal nodes"},
                            {"verify", "check the structure conditions and invariants"},
                            {"analyze", "degree, type and royal nodes"},
                            {"trace", "boundary values on the circle"},
                            {"perturb", "midpoint decomposition witnessing non-extremality"}};
  for (auto& nm : names) {
    auto* sub = app.add_subcommand(nm[0], nm[1]);
    sub->add_option("input", cfg.input, "input JSON file (stdin when absent)");
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }
  const std::string cmd = app.get_subcommands().front()->get_name();

  std::string text;
  int code = kOk;
  try {
    const json j = read_input(cfg, in);
    if (cmd == "trace") {
      const TetraRational x = io::tetra_rational_from(j, mode_of(cfg));
      const auto rows = circle_trace(x, cfg.samples > 0 ? cfg.samples : 256);
      if (cfg.format == "json") {
        json a = json::array();
        for (const auto& t : rows)
          a.push_back({{"theta", t.theta}, {"x", io::to_json(t.x)}, {"defect", t.defect}});
        text = a.dump(2) + "\n";
      } else {
        text = trace_csv(rows);
      }
    } else {
      json result;
      if (cmd == "classify") {
        result = cmd_classify(cfg, j);
      } else if (cmd == "construct") {
        result = cmd_construct(j);
      } else if (cmd == "verify") {
        bool passed = true;
        result = cmd_verify(cfg, j, passed);
        if (!passed) code = kPrecondition;
      } else if (cmd == "analyze") {
        result = io::analysis(io::tetra_rational_from(j, mode_of(cfg)));
      } else {
        result = cmd_perturb(j, cfg);
      }
      text = cfg.format == "csv" ? object_csv(result) : result.dump(2) + "\n";
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const io::json::exception& e) {
    err << "error: malformed input: " << e.what() << '\n';
    return kParseError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_precondition(e.kind()) ? kPrecondition : kNumerical;
  }

  if (cfg.out_file.empty()) {
    out << text;
  } else {
    std::ofstream f(cfg.out_file);
    if (!f) {
      err << "error: cannot write " << cfg.out_file << '\n';
      return kParseError;
    }
    f << text;
  }
  return code;
}

}  // namespace tetra::cli
