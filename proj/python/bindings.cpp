#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gaborlat/cli.hpp"
#include "gaborlat/density.hpp"
#include "gaborlat/error.hpp"
#include "gaborlat/frft.hpp"
#include "gaborlat/gabor_gram.hpp"
#include "gaborlat/io.hpp"
#include "gaborlat/tiling.hpp"
#include "gaborlat/window.hpp"
#include "gaborlat/zak.hpp"

namespace py = pybind11;
using namespace gaborlat;

namespace {

io::Json parse(const std::string& text) { return io::parse_json(text); }

std::string run(const std::string& command, const std::string& config_json, std::uint64_t seed) {
  cli::RunConfig rc;
  rc.command = command;
  rc.config = config_json.empty() ? io::Json::object() : parse(config_json);
  rc.seed = seed;
  return cli::make_report(rc).dump();
}

std::string decide_onb_json(const std::string& lattice_json, const std::string& window_json) {
  const auto v = decide_onb(io::window_from_json(parse(window_json)), io::lattice_from_json(parse(lattice_json)));
  return io::to_json(v).dump();
}

py::tuple tiles_by_py(const std::vector<std::pair<std::string, std::string>>& intervals, const std::string& a) {
  std::vector<Interval> iv;
  for (const auto& [lo, hi] : intervals) iv.push_back({parse_rational(lo), parse_rational(hi)});
  const auto r = tiles_by(IntervalSet(std::move(iv)), parse_rational(a));
  std::vector<std::tuple<std::string, std::string, long>> pieces;
  for (const auto& p : r.profile.pieces) pieces.emplace_back(to_string(p.lo), to_string(p.hi), p.multiplicity);
  return py::make_tuple(r.tiles, pieces);
}

std::vector<std::complex<double>> frft_py(const std::vector<std::complex<double>>& values, double theta,
                                          double half_width) {
  const FrftPlan plan(theta, values.size(), half_width);
  SampledWindow in{plan.t(0), plan.step(), values};
  return frft(in, plan).values.values;
}

std::vector<std::complex<double>> hermite_py(int n, std::size_t grid_n, double half_width) {
  return hermite(n, FrftPlan(0.0, grid_n, half_width)).values;
}

double density_py(const std::vector<std::pair<double, double>>& pts, std::tuple<double, double, double, double> w,
                  const std::vector<double>& radii) {
  std::vector<Point2> p;
  for (const auto& [x, y] : pts) p.push_back({x, y});
  const auto [x0, y0, x1, y1] = w;
  return upper_beurling_density(PointSet2D(std::move(p), Rect{x0, y0, x1, y1}), radii).estimate;
}

py::dict gram_py(const std::string& window_json, const std::string& lattice_json, int radius, double tol) {
  const auto r = onb_certificate(io::window_from_json(parse(window_json)), io::lattice_from_json(parse(lattice_json)),
                                 radius, tol);
  py::dict d;
  d["size"] = r.size;
  d["max_offdiag"] = r.max_offdiag;
  d["max_diag_dev"] = r.max_diag_dev;
  d["orthonormal"] = r.orthonormal_on_truncation;
  d["method"] = std::string(to_string(r.method));
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Gabor orthonormal bases on planar lattices";
  m.attr("__version__") = cli::kVersion;

  py::register_exception<Error>(m, "GaborlatError", PyExc_ValueError);

  m.def("run", &run, py::arg("command"), py::arg("config_json") = "", py::arg("seed") = 0,
        "Run a CLI command and return the JSON report as a string.");
  m.def("decide_onb", &decide_onb_json, py::arg("lattice_json"), py::arg("window_json"));
  m.def("tiles_by", &tiles_by_py, py::arg("intervals"), py::arg("a"));
  m.def("gamma_weights", &gamma_weights, py::arg("alpha"), py::arg("K"));
  m.def("frft", &frft_py, py::arg("values"), py::arg("theta"), py::arg("half_width") = 8.0,
        "F_theta of samples on the symmetric midpoint grid of [-T, T].");
  m.def("hermite", &hermite_py, py::arg("n"), py::arg("grid_n") = 2048, py::arg("half_width") = 8.0);
  m.def("verify_eigen", &verify_eigen, py::arg("theta"), py::arg("n"), py::arg("grid_n") = 2048,
        py::arg("half_width") = 8.0);
  m.def("upper_beurling_density", &density_py, py::arg("points"), py::arg("window"), py::arg("radii"));
  m.def("product_progression_bound", &product_progression_bound, py::arg("theta"));
  m.def("onb_certificate", &gram_py, py::arg("window_json"), py::arg("lattice_json"), py::arg("radius"),
        py::arg("tol"));
}
