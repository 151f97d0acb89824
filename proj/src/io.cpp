#include "gaborlat/io.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "gaborlat/error.hpp"
#include "gaborlat/field_scalar.hpp"

namespace gaborlat::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

template <typename F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    bad(std::string(what) + ": " + e.what());
  }
}

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

// Numbers are accepted either as JSON numbers or as rational strings.
Rational exact_value(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  bad("expected a rational string such as \"3/4\"");
}

Json complex_pair(std::complex<double> z) { return Json::array({z.real(), z.imag()}); }

std::complex<double> complex_from(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) bad("complex values are [re, im] pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

// |g|² from "p/q", "sqrt(p/q)" or "1/sqrt(p/q)".
Rational modulus_sq_from_string(const std::string& raw) {
  std::string s = trim(raw);
  bool reciprocal = false;
  if (s.rfind("1/sqrt", 0) == 0) {
    reciprocal = true;
    s = s.substr(2);
  }
  if (s.rfind("sqrt", 0) == 0) {
    std::string arg = trim(s.substr(4));
    if (arg.size() >= 2 && arg.front() == '(' && arg.back() == ')') arg = arg.substr(1, arg.size() - 2);
    Rational q = parse_rational(trim(arg));
    if (q <= 0) bad("modulus must be positive");
    return reciprocal ? Rational(1 / q) : q;
  }
  Rational q = parse_rational(s);
  if (q <= 0) bad("modulus must be positive");
  return q * q;
}

QuadraticPhase phase_from(const Json& j) {
  QuadraticPhase p;
  if (j.is_null()) return p;
  p.quad = j.value("quad", 0.0);
  p.lin = j.value("lin", 0.0);
  p.constant = j.value("const", 0.0);
  return p;
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    const std::size_t pos = e.byte == 0 ? 0 : std::min<std::size_t>(e.byte - 1, text.size());
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorCode::ParseError,
                "JSON syntax error at line " + std::to_string(line) + ", column " + std::to_string(col));
  }
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json load_json_file(const std::filesystem::path& path) { return parse_json(read_text_file(path)); }

Lattice2D lattice_from_json(const Json& j) {
  return guarded("lattice", [&] {
    if (j.contains("float_basis")) {
      const auto& b = j.at("float_basis");
      const double tol = j.value("tolerance", 1e-12);
      return Lattice2D::from_floats({b.at(0).at(0).get<double>(), b.at(0).at(1).get<double>(),
                                     b.at(1).at(0).get<double>(), b.at(1).at(1).get<double>()},
                                    tol);
    }
    SymbolPtr symbol;
    if (j.contains("symbol") && !j.at("symbol").is_null()) {
      const auto& s = j.at("symbol");
      auto sym = std::make_shared<Symbol>();
      sym->name = s.at("name").get<std::string>();
      sym->approx = s.at("approx").get<double>();
      sym->irrational = s.value("irrational", true);
      if (s.contains("square")) sym->square = exact_value(s.at("square"));
      symbol = std::move(sym);
    }
    const auto& b = j.at("basis");
    if (!b.is_array() || b.size() != 2 || b[0].size() != 2 || b[1].size() != 2) bad("basis must be 2x2");
    auto entry = [&](std::size_t r, std::size_t c) {
      const auto& e = b[r][c];
      if (e.is_number_integer()) return FieldScalar(Rational(e.get<long>()));
      return parse_field_scalar(e.get<std::string>(), symbol);
    };
    return Lattice2D::exact({entry(0, 0), entry(0, 1), entry(1, 0), entry(1, 1)});
  });
}

Json to_json(const FieldScalar& x) { return x.to_string(); }

Json to_json(const ExactMatrix& m) {
  return Json::array({Json::array({to_json(m.a), to_json(m.b)}), Json::array({to_json(m.c), to_json(m.d)})});
}

Json to_json(const IntMatrix& m) {
  return Json::array({Json::array({to_string(Rational(m.a)), to_string(Rational(m.b))}),
                      Json::array({to_string(Rational(m.c)), to_string(Rational(m.d))})});
}

Json to_json(const Lattice2D& lattice) {
  if (lattice.backend() == Backend::Float) {
    const auto m = lattice.float_basis();
    return {{"float_basis", Json::array({Json::array({m.a, m.b}), Json::array({m.c, m.d})})}};
  }
  Json out{{"basis", to_json(lattice.exact_basis())}};
  const auto& m = lattice.exact_basis();
  for (const FieldScalar* e : {&m.a, &m.b, &m.c, &m.d}) {
    if (!e->is_rational() && e->symbol()) {
      const auto& s = *e->symbol();
      Json sym{{"name", s.name}, {"approx", s.approx}, {"irrational", s.irrational}};
      if (s.square) sym["square"] = to_string(*s.square);
      out["symbol"] = sym;
      break;
    }
  }
  return out;
}

IntervalSet interval_set_from_json(const Json& j) {
  return guarded("interval set", [&] {
    const Json& list = j.is_array() ? j : j.at("intervals");
    std::vector<Interval> out;
    for (const auto& iv : list) {
      if (!iv.is_array() || iv.size() != 2) bad("intervals are [lo, hi] pairs");
      out.push_back({exact_value(iv[0]), exact_value(iv[1])});
    }
    return IntervalSet(std::move(out));
  });
}

Json to_json(const IntervalSet& s) {
  Json list = Json::array();
  for (const auto& iv : s.intervals()) list.push_back(Json::array({to_string(iv.lo), to_string(iv.hi)}));
  return {{"intervals", list}};
}

Json to_json(const FoldProfile& f) {
  Json pieces = Json::array();
  for (const auto& p : f.pieces) {
    pieces.push_back({{"lo", to_string(p.lo)}, {"hi", to_string(p.hi)}, {"multiplicity", p.multiplicity}});
  }
  return {{"period", to_string(f.period)}, {"pieces", pieces}};
}

std::vector<Point2> points_from_json(const Json& j) {
  return guarded("point list", [&] {
    const Json& list = j.is_array() ? j : j.at("points");
    std::vector<Point2> out;
    out.reserve(list.size());
    for (const auto& p : list) {
      if (!p.is_array() || p.size() != 2) bad("points are [x, y] pairs");
      out.push_back({p[0].get<double>(), p[1].get<double>()});
    }
    return out;
  });
}

Rect rect_from_json(const Json& j) {
  return guarded("rectangle", [&] {
    if (j.is_array()) {
      if (j.size() != 4) bad("rectangles are [x0, y0, x1, y1]");
      return Rect{j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>()};
    }
    return Rect{j.at("x0").get<double>(), j.at("y0").get<double>(), j.at("x1").get<double>(),
                j.at("y1").get<double>()};
  });
}

Window window_from_json(const Json& j) {
  return guarded("window", [&] {
    if (j.contains("piecewise")) {
      PiecewiseWindow w;
      for (const auto& p : j.at("piecewise")) {
        const auto& iv = p.at("interval");
        if (!iv.is_array() || iv.size() != 2) bad("interval must be [lo, hi]");
        WindowPiece piece;
        piece.interval = {exact_value(iv[0]), exact_value(iv[1])};
        if (p.contains("modulus_sq")) {
          piece.modulus_sq = exact_value(p.at("modulus_sq"));
        } else if (p.contains("modulus")) {
          const auto& m = p.at("modulus");
          piece.modulus_sq = m.is_string() ? modulus_sq_from_string(m.get<std::string>())
                                           : Rational(exact_value(m) * exact_value(m));
        } else {
          piece.modulus_sq = 1;
        }
        piece.phase = phase_from(p.contains("phase") ? p.at("phase") : Json());
        w.pieces.push_back(std::move(piece));
      }
      return Window(std::move(w));
    }
    if (j.contains("sampled")) {
      const auto& s = j.at("sampled");
      SampledWindow w;
      w.t_min = s.at("t_min").get<double>();
      w.step = s.at("step").get<double>();
      for (const auto& v : s.at("values")) w.values.push_back(complex_from(v));
      return Window(std::move(w));
    }
    bad("window needs a \"piecewise\" or \"sampled\" member");
  });
}

Json to_json(const Window& g) {
  if (g.is_piecewise()) {
    Json pieces = Json::array();
    for (const auto& p : g.piecewise().pieces) {
      pieces.push_back({{"interval", Json::array({to_string(p.interval.lo), to_string(p.interval.hi)})},
                        {"modulus_sq", to_string(p.modulus_sq)},
                        {"phase", {{"quad", p.phase.quad}, {"lin", p.phase.lin}, {"const", p.phase.constant}}}});
    }
    return {{"piecewise", pieces}};
  }
  const auto& s = g.sampled();
  Json values = Json::array();
  for (const auto& v : s.values) values.push_back(complex_pair(v));
  return {{"sampled", {{"t_min", s.t_min}, {"step", s.step}, {"values", values}}}};
}

SampledWindow sampled_from_csv(std::string_view text) {
  std::vector<double> ts;
  std::vector<std::complex<double>> values;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string line = trim(text.substr(start, end - start));
    ++line_no;
    start = end + 1;
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols;
    std::stringstream ss(line);
    for (std::string c; std::getline(ss, c, ',');) cols.push_back(trim(c));
    if (cols.size() != 2 && cols.size() != 3) {
      bad("CSV line " + std::to_string(line_no) + ": expected 2 or 3 columns");
    }
    double row[3] = {0.0, 0.0, 0.0};
    try {
      for (std::size_t i = 0; i < cols.size(); ++i) {
        std::size_t used = 0;
        row[i] = std::stod(cols[i], &used);
        if (used != cols[i].size()) throw std::invalid_argument("trailing characters");
      }
    } catch (const std::exception&) {
      if (ts.empty() && values.empty()) continue;  // header
      bad("CSV line " + std::to_string(line_no) + ": not a number");
    }
    ts.push_back(row[0]);
    values.emplace_back(row[1], row[2]);
  }
  if (ts.size() < 2) throw Error(ErrorCode::EmptyInput, "CSV needs at least two samples");
  const double step = (ts.back() - ts.front()) / static_cast<double>(ts.size() - 1);
  if (!(step > 0.0)) bad("CSV t column must increase");
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const double expect = ts.front() + static_cast<double>(i) * step;
    if (std::abs(ts[i] - expect) > 1e-6 * step) bad("CSV t column is not uniform at line " + std::to_string(i + 1));
  }
  return SampledWindow{ts.front(), step, std::move(values)};
}

std::string to_csv(const SampledWindow& s) {
  std::ostringstream out;
  out.precision(17);
  out << "t,re,im\n";
  for (std::size_t j = 0; j < s.values.size(); ++j) {
    out << s.t(j) << ',' << s.values[j].real() << ',' << s.values[j].imag() << '\n';
  }
  return out.str();
}

Json to_json(const WindowVerdict& v) {
  Json out{{"is_onb_window", v.is_onb_window}, {"reason", to_string(v.reason)}};
  if (v.generator) out["generator"] = to_json(*v.generator);
  if (v.fold) out["fold_profile"] = to_json(*v.fold);
  out["columns_swapped"] = v.columns_swapped;
  return out;
}

Json to_json(const GramReport& r) {
  return {{"size", r.size},
          {"max_offdiag", r.max_offdiag},
          {"max_diag_dev", r.max_diag_dev},
          {"worst_pair", Json::array({Json::array({r.worst_pair[0].t, r.worst_pair[0].s}),
                                      Json::array({r.worst_pair[1].t, r.worst_pair[1].s})})},
          {"method", to_string(r.method)},
          {"verdict", r.orthonormal_on_truncation ? "orthonormal-on-truncation" : "not-orthonormal"},
          {"window_norm_sq", r.window_norm_sq},
          {"completeness", r.completeness_note}};
}

Json to_json(const DeviationReport& r) {
  return {{"max", r.max}, {"median", r.median}, {"verdict", r.pass ? "pass" : "fail"}};
}

Json to_json(const ZakGrid& z) {
  auto sheet = [&](const std::vector<Complex>& v) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < z.omega.size(); ++i) {
      Json row = Json::array();
      for (std::size_t k = 0; k < z.theta.size(); ++k) row.push_back(complex_pair(v[i * z.theta.size() + k]));
      rows.push_back(std::move(row));
    }
    return rows;
  };
  return {{"alpha", z.alpha},
          {"K", z.K},
          {"summation", z.summation == Summation::Cesaro ? "cesaro" : "raw"},
          {"omega_points", z.omega.size()},
          {"theta_points", z.theta.size()},
          {"sheet0", sheet(z.sheet0)},
          {"sheet1", sheet(z.sheet1)}};
}

Json to_json(const DensityEstimate& d) {
  Json rows = Json::array();
  for (const auto& r : d.per_radius) {
    rows.push_back({{"radius", r.radius},
                    {"density", r.density},
                    {"best_center", Json::array({r.best_center.x, r.best_center.y})},
                    {"centers", r.centers}});
  }
  return {{"per_radius", rows},
          {"estimate", d.estimate},
          {"center_spacing", "r/8"},
          {"note", "finite-sample proxy for the upper density, not a certified limsup"}};
}

Json to_json(const SupportEstimate& s) {
  Json cands = Json::array();
  for (const auto& [B, frac] : s.candidate_fractions) cands.push_back({{"band_limit", B}, {"energy_fraction", frac}});
  return {{"interval", Json::array({s.lo, s.hi})}, {"radius", s.radius}, {"bin_width", s.bin_width},
          {"candidates", cands}};
}

}  // namespace gaborlat::io
