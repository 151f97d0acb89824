#include "gaborlat/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <random>
#include <regex>
#include <sstream>

#include "gaborlat/density.hpp"
#include "gaborlat/error.hpp"
#include "gaborlat/frft.hpp"
#include "gaborlat/gabor_gram.hpp"
#include "gaborlat/lattice.hpp"
#include "gaborlat/tiling.hpp"
#include "gaborlat/window.hpp"
#include "gaborlat/zak.hpp"

namespace gaborlat::cli {

using io::Json;

namespace {

constexpr double kPi = std::numbers::pi;

const Json& section(const Json& config, const char* key) {
  if (config.contains(key)) return config.at(key);
  throw Error(ErrorCode::InvalidArgument, std::string("config is missing \"") + key + "\"");
}

template <typename T>
T knob(const Json& config, const char* key, T fallback) {
  if (!config.contains(key)) return fallback;
  try {
    return config.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw Error(ErrorCode::ParseError, std::string("config value \"") + key + "\" has the wrong type");
  }
}

std::filesystem::path resolve(const RunConfig& rc, const std::string& p) {
  std::filesystem::path path(p);
  return path.is_absolute() ? path : rc.config_dir / path;
}

Json complex_json(std::complex<double> z) { return Json::array({z.real(), z.imag()}); }

Json density_json(const Density& d) {
  Json out{{"value", d.value}};
  if (d.exact) out["exact"] = d.exact->to_string();
  return out;
}

Json projection_json(const ProjectionResult& p) {
  switch (p.kind) {
    case ProjectionResult::Kind::Discrete:
      return {{"kind", "Discrete"}, {"generator", p.generator->to_string()}};
    case ProjectionResult::Kind::Dense:
      return {{"kind", "Dense"}};
    case ProjectionResult::Kind::Zero:
      break;
  }
  return {{"kind", "Zero"}};
}

// ---------------------------------------------------------------------------

Json cmd_analyze_lattice(const RunConfig& rc) {
  const Json& lj = rc.config.contains("lattice") ? rc.config.at("lattice") : rc.config;
  const Lattice2D lattice = io::lattice_from_json(lj);
  const Density d = density(lattice);
  Json out{{"lattice", io::to_json(lattice)}, {"density", density_json(d)}};
  if (lattice.backend() == Backend::Float) {
    out["projection"] = "undecidable for float lattices";
    out["exists_compact_window"] = nullptr;
    return out;
  }
  const ProjectionResult proj = project_first(orient_positive(lattice).lattice);
  out["projection"] = projection_json(proj);
  const bool unit = d.exact && *d.exact == FieldScalar(1);
  const bool discrete = proj.kind == ProjectionResult::Kind::Discrete;
  if (unit && discrete) {
    const auto oriented = orient_positive(lattice);
    const Normalization n = normalize_lower_triangular(oriented.lattice);
    const auto [mu, nu] = chirp_params(n.lower);
    out["normalization"] = {{"L", io::to_json(n.lower)},
                            {"U", io::to_json(n.unimodular)},
                            {"tau", n.tau.to_string()},
                            {"columns_swapped", oriented.columns_swapped},
                            {"chirp", {{"mu", mu.to_string()}, {"nu", nu.to_string()}}}};
  }
  out["exists_compact_window"] = unit && discrete;
  return out;
}

Json cmd_decide_onb(const RunConfig& rc) {
  const Lattice2D lattice = io::lattice_from_json(section(rc.config, "lattice"));
  const Window g = io::window_from_json(section(rc.config, "window"));
  const WindowVerdict v = decide_onb(g, lattice);
  Json out = io::to_json(v);
  out["density"] = density_json(density(lattice));
  return out;
}

Json cmd_check_tiling(const RunConfig& rc) {
  const Json& c = rc.config;
  if (c.contains("intervals")) {
    const IntervalSet omega = io::interval_set_from_json(c);
    const Rational a = c.contains("a") ? (c.at("a").is_string() ? parse_rational(c.at("a").get<std::string>())
                                                                : Rational(c.at("a").get<long>()))
                                       : Rational(1);
    const TilingResult t = tiles_by(omega, a);
    return {{"kind", "interval"},
            {"set", io::to_json(omega)},
            {"a", to_string(a)},
            {"measure", to_string(omega.measure())},
            {"tiles", t.tiles},
            {"fold_profile", io::to_json(t.profile)}};
  }
  if (c.contains("points")) {
    const auto pts = io::points_from_json(c.at("points"));
    const double tol = rc.tol.value_or(knob(c, "tol", 1e-9));
    Json out{{"kind", "cube"}, {"points", pts.size()}};
    if (c.contains("region")) {
      const Rect region = io::rect_from_json(c.at("region"));
      out["tiles_region"] = is_cube_tiling(pts, region, tol, knob(c, "margin", 1.0));
    }
    const CubeTilingClass cls = classify_cube_tiling(pts, tol);
    const char* kind = cls.kind == CubeTilingClass::Kind::Lambda1   ? "Lambda1"
                       : cls.kind == CubeTilingClass::Kind::Lambda2 ? "Lambda2"
                                                                    : "Neither";
    Json shifts = Json::object();
    for (const auto& [k, s] : cls.shifts) shifts[std::to_string(k)] = s;
    out["classification"] = {{"kind", kind}, {"z", Json::array({cls.z.x, cls.z.y})}, {"shifts", shifts}};
    return out;
  }
  throw Error(ErrorCode::InvalidArgument, "check-tiling needs \"intervals\" or \"points\"");
}

Json cmd_zak(const RunConfig& rc) {
  const Json& c = rc.config;
  const bool synthetic = c.contains("synthetic");
  const int K = rc.truncation.value_or(knob(c, "K", synthetic ? 0 : Defaults::zak_K));
  const double alpha = c.contains("alpha") ? parse_angle(c.at("alpha")) : 0.0;
  const std::size_t omega_points = knob(c, "omega_points", Defaults::zak_omega_points);
  const std::size_t theta_points = knob(c, "theta_points", Defaults::zak_theta_points);
  const double tol = rc.tol.value_or(knob(c, "tol", Defaults::zak_tol));
  const bool cesaro = rc.cesaro.value_or(knob(c, "cesaro", true));
  const bool interpolate = knob(c, "interpolate", false);

  SpectralSamples spec;
  if (synthetic) {
    if (c.at("synthetic") != "one-term") throw Error(ErrorCode::InvalidArgument, "unknown synthetic spectrum");
    spec = spectral_samples([](double xi) { return Complex(xi >= 0.0 && xi < 1.0 ? 1.0 : 0.0); }, K,
                            omega_points);
  } else {
    spec = spectral_samples(io::window_from_json(section(c, "window")), K, omega_points);
  }
  const ZakGrid zak = compute_D(spec, alpha, theta_points, cesaro ? Summation::Cesaro : Summation::Raw);

  Json out{{"K", K},
           {"alpha", alpha},
           {"summation", cesaro ? "cesaro" : "raw"},
           {"omega_points", omega_points},
           {"theta_points", theta_points},
           {"tol", tol},
           {"unimodular", io::to_json(check_unimodular(zak, tol))}};
  try {
    out["covariance"] = io::to_json(check_covariance(zak, tol, interpolate));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::GridIncompatible) throw;
    out["covariance"] = {{"error", std::string(to_string(e.code()))}, {"message", e.what()}};
  }

  Json table = Json::array();
  const std::size_t mid = omega_points / 2;
  for (int n = -4; n <= 4; ++n) {
    table.push_back({{"n", n}, {"omega", spec.omega[mid]}, {"r", complex_json(autocorrelation(spec, alpha, n, mid))}});
  }
  out["autocorrelation"] = table;
  double r0_min = INFINITY, r0_max = -INFINITY;
  for (std::size_t i = 1; i + 1 < omega_points; ++i) {
    const double r0 = autocorrelation(spec, alpha, 0, i).real();
    r0_min = std::min(r0_min, r0);
    r0_max = std::max(r0_max, r0);
  }
  out["r0_interior"] = {{"min", r0_min}, {"max", r0_max}};
  if (knob(c, "export_grid", false)) out["grid"] = io::to_json(zak);
  return out;
}

SampledWindow frft_input(const RunConfig& rc, const FrftPlan& plan) {
  const Json& c = rc.config;
  if (c.contains("input_csv")) {
    return io::sampled_from_csv(io::read_text_file(resolve(rc, c.at("input_csv").get<std::string>())));
  }
  const Window g = io::window_from_json(section(c, "window"));
  if (g.is_sampled()) return g.sampled();
  return plan.sample([&g](double t) { return g(t); });
}

FrftPlan plan_for(const RunConfig& rc, double theta) {
  const std::size_t n = rc.grid_n.value_or(knob(rc.config, "grid_n", Defaults::grid_n));
  const double T = rc.grid_t.value_or(knob(rc.config, "grid_t", Defaults::grid_t));
  return FrftPlan(theta, n, T);
}

Json cmd_frft(const RunConfig& rc) {
  const double theta = parse_angle(section(rc.config, "theta"));
  const FrftPlan plan = plan_for(rc, theta);
  const SampledWindow in = frft_input(rc, plan);
  const FrftResult res = frft(in, plan);
  const double n_in = sampled_norm_sq(in), n_out = sampled_norm_sq(res.values);
  Json out{{"theta", theta},
           {"reduced_theta", plan.theta()},
           {"branch", plan.branch() == FrftPlan::Branch::Special ? "special" : "kernel"},
           {"grid", {{"n", plan.size()}, {"half_width", plan.half_width()}, {"step", plan.step()}}},
           {"edge_mass_warning", res.edge_mass_warning},
           {"norm_sq_in", n_in},
           {"norm_sq_out", n_out}};
  std::optional<std::filesystem::path> csv = rc.csv_out;
  if (!csv && rc.config.contains("output_csv")) csv = resolve(rc, rc.config.at("output_csv").get<std::string>());
  if (csv) {
    std::ofstream f(*csv);
    if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + csv->string());
    f << io::to_csv(res.values);
    out["output_csv"] = csv->string();
  }
  if (knob(rc.config, "include_values", false)) out["values"] = io::to_json(Window(res.values));
  return out;
}

Json cmd_gram(const RunConfig& rc) {
  const Json& c = rc.config;
  const Window g = io::window_from_json(section(c, "window"));
  const Lattice2D lattice = io::lattice_from_json(section(c, "lattice"));
  const int R = rc.truncation.value_or(knob(c, "R", Defaults::gram_truncation));
  const double tol = rc.tol.value_or(knob(c, "tol", Defaults::gram_tol));
  QuadratureOptions opts;
  opts.richardson = knob(c, "richardson", false);
  Json out = io::to_json(onb_certificate(g, lattice, R, tol, opts));
  out["R"] = R;
  out["tol"] = tol;
  return out;
}

// Λ₁-type cube tiling z + ∪_k (ℤ + s_k) × {k} with seeded row shifts.
std::vector<Point2> lambda1_comparison(std::uint64_t seed, double W) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Point2> pts;
  const long kmax = static_cast<long>(std::floor(W));
  for (long k = -kmax; k <= kmax; ++k) {
    const double s = unit(rng);
    for (long m = -kmax - 1; m <= kmax; ++m) {
      const double x = static_cast<double>(m) + s;
      if (x >= -W && x <= W) pts.push_back({x, static_cast<double>(k)});
    }
  }
  return pts;
}

Json cmd_counterexample(const RunConfig& rc) {
  const Json& c = rc.config;
  const double theta = c.contains("theta") ? parse_angle(c.at("theta")) : kPi / 4.0;
  const int R = rc.truncation.value_or(knob(c, "R", Defaults::gram_truncation));
  const double tol = rc.tol.value_or(knob(c, "tol", Defaults::gram_tol));
  const double bound = product_progression_bound(theta);

  // g = F_{−θ} 1_[0,1) on the plan grid.
  const FrftPlan plan = plan_for(rc, -theta);
  const SampledWindow box = plan.sample([](double t) { return Complex(t >= 0.0 && t < 1.0 ? 1.0 : 0.0); });
  const FrftResult g = frft(box, plan);
  const Window window(g.values);

  QuadratureOptions opts;
  opts.richardson = knob(c, "richardson", false);
  const GramReport gram = onb_certificate(window, rotation_lattice(theta), R, tol, opts);

  const double W = knob(c, "comparison_half_width", Defaults::comparison_half_width);
  const Rect region{-W, -W, W, W};
  const std::vector<double> radii{W / 5.0, W / 2.5};
  const PointSet2D lambda1(lambda1_comparison(rc.seed, W), region);
  const DensityEstimate d1 = upper_beurling_density(lambda1, radii);

  const double da = 1.0 / std::abs(std::sin(theta)), db = 1.0 / std::abs(std::cos(theta));
  const PointSet2D product = PointSet2D::from_lattice(da, 0.0, 0.0, db, region);
  const DensityEstimate dp = upper_beurling_density(product, radii);

  Json tails = Json::array();
  for (double r : {2.0, 4.0, 6.0}) tails.push_back({{"radius", r}, {"mass_fraction", mass_outside(g.values, r)}});

  return {{"theta", theta},
          {"R", R},
          {"grid", {{"n", plan.size()}, {"half_width", plan.half_width()}}},
          {"window_norm_sq", sampled_norm_sq(g.values)},
          {"edge_mass_warning", g.edge_mass_warning},
          {"gram", io::to_json(gram)},
          {"obstruction",
           {{"spacing_A", da},
            {"spacing_B", db},
            {"bound", bound},
            {"bound_at_most_half", bound <= 0.5 + 1e-15},
            {"lambda1_density", io::to_json(d1)},
            {"lambda1_density_near_one", std::abs(d1.estimate - 1.0) <= Defaults::density_tol},
            {"product_set_density", io::to_json(dp)}}},
          {"tail_mass", tails}};
}

std::string hex64(std::uint64_t v) {
  std::ostringstream s;
  s << std::hex << std::setw(16) << std::setfill('0') << v;
  return s.str();
}

Json effective_config(const RunConfig& rc) {
  Json overrides = Json::object();
  if (rc.truncation) overrides["truncation"] = *rc.truncation;
  if (rc.grid_n) overrides["grid_n"] = *rc.grid_n;
  if (rc.grid_t) overrides["grid_t"] = *rc.grid_t;
  if (rc.tol) overrides["tol"] = *rc.tol;
  if (rc.cesaro) overrides["cesaro"] = *rc.cesaro;
  return {{"command", rc.command}, {"config", rc.config}, {"overrides", overrides}, {"seed", rc.seed}};
}

void summarize_into(std::ostringstream& out, const Json& j, int depth) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    if (v.is_object()) {
      out << pad << it.key() << ":\n";
      summarize_into(out, v, depth + 1);
    } else if (v.is_array() && (v.size() > 8 || (!v.empty() && v[0].is_structured()))) {
      out << pad << it.key() << ": [" << v.size() << " entries]\n";
    } else {
      out << pad << it.key() << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
}

}  // namespace

std::uint64_t fnv1a(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : data) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

double parse_angle(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (!j.is_string()) throw Error(ErrorCode::ParseError, "angle must be a number or a string like \"pi/4\"");
  const std::string s = j.get<std::string>();
  static const std::regex form(R"(^\s*([+-]?\d*(?:\.\d+)?)\s*\*?\s*pi\s*(?:/\s*(\d+(?:\.\d+)?))?\s*$)");
  std::smatch m;
  if (std::regex_match(s, m, form)) {
    const std::string coef = m[1].str();
    double a = 1.0;
    if (coef == "-") a = -1.0;
    else if (!coef.empty() && coef != "+") a = std::stod(coef);
    const double q = m[2].matched ? std::stod(m[2].str()) : 1.0;
    if (q == 0.0) throw Error(ErrorCode::ParseError, "angle denominator is zero");
    return a * kPi / q;
  }
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::ParseError, "cannot parse angle \"" + s + "\"");
}

Json run_command(const RunConfig& rc) {
  if (rc.command == "analyze-lattice") return cmd_analyze_lattice(rc);
  if (rc.command == "decide-onb") return cmd_decide_onb(rc);
  if (rc.command == "check-tiling") return cmd_check_tiling(rc);
  if (rc.command == "zak") return cmd_zak(rc);
  if (rc.command == "frft") return cmd_frft(rc);
  if (rc.command == "counterexample") return cmd_counterexample(rc);
  if (rc.command == "gram") return cmd_gram(rc);
  throw Error(ErrorCode::InvalidArgument, "unknown command " + rc.command);
}

Json make_report(const RunConfig& rc) {
  Json report{{"tool", kToolName},
              {"version", kVersion},
              {"command", rc.command},
              {"seed", rc.seed},
              {"config_hash", hex64(fnv1a(effective_config(rc).dump()))}};
  report["result"] = run_command(rc);
  return report;
}

std::string summarize(const Json& report) {
  std::ostringstream out;
  out << report.value("tool", "") << " " << report.value("version", "") << " " << report.value("command", "")
      << " (config " << report.value("config_hash", "") << ", seed " << report.value("seed", 0) << ")\n";
  if (report.contains("result")) summarize_into(out, report.at("result"), 1);
  return out.str();
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gabor orthonormal bases on planar lattices", kToolName};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  RunConfig rc;
  std::string config_path, out_path, csv_path, cesaro;
  int truncation = 0;
  std::size_t grid_n = 0;
  double grid_t = 0.0, tol = 0.0;

  const std::pair<const char*, const char*> commands[] = {
      {"analyze-lattice", "density, first projection and normalization of a lattice"},
      {"decide-onb", "decide whether G(g, lattice) is an orthonormal basis"},
      {"check-tiling", "interval tilings by aZ and unit-square tilings of the plane"},
      {"zak", "weighted Zak transform diagnostics"},
      {"frft", "fractional Fourier transform of a sampled function"},
      {"counterexample", "rotated-lattice certificate with the density obstruction"},
      {"gram", "Gram matrix orthonormality certificate"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--config", config_path, "JSON config file");
    sub->add_option("--out", out_path, "write the JSON report here");
    sub->add_flag("--pretty", rc.pretty, "print a human-readable summary");
    sub->add_option("--seed", rc.seed, "seed recorded in the report");
    sub->add_option("--truncation", truncation, "Gram truncation R (zak: series truncation K)")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--grid-n", grid_n, "FrFT grid size (power of two)");
    sub->add_option("--grid-t", grid_t, "FrFT grid half-width");
    sub->add_option("--tol", tol, "verdict tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--cesaro", cesaro, "Cesaro summation for zak")->check(CLI::IsMember({"on", "off"}));
    if (std::string(name) == "frft") sub->add_option("--csv", csv_path, "write the transformed samples as CSV");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    rc.command = app.get_subcommands().front()->get_name();
    const CLI::App* sub = app.get_subcommands().front();
    if (!config_path.empty()) {
      rc.config = io::load_json_file(config_path);
      rc.config_dir = std::filesystem::path(config_path).parent_path();
      if (rc.config_dir.empty()) rc.config_dir = ".";
    }
    if (sub->count("--truncation")) rc.truncation = truncation;
    if (sub->count("--grid-n")) rc.grid_n = grid_n;
    if (sub->count("--grid-t")) rc.grid_t = grid_t;
    if (sub->count("--tol")) rc.tol = tol;
    if (sub->count("--cesaro")) rc.cesaro = cesaro == "on";
    if (!out_path.empty()) rc.out = out_path;
    if (!csv_path.empty()) rc.csv_out = csv_path;

    const Json report = make_report(rc);
    if (rc.out) {
      std::ofstream f(*rc.out);
      if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + rc.out->string());
      f << report.dump(2) << "\n";
    }
    if (rc.pretty) {
      out << summarize(report);
    } else if (!rc.out) {
      out << report.dump(2) << "\n";
    }
    return 0;
  } catch (const Error& e) {
    err << Json{{"error", std::string(to_string(e.code()))}, {"message", e.what()}}.dump() << "\n";
    return is_input_error(e.code()) ? 2 : 3;
  } catch (const std::exception& e) {
    err << Json{{"error", "Internal"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }
}

}  // namespace gaborlat::cli
