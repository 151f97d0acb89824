#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gaborlat/density.hpp"
#include "gaborlat/gabor_gram.hpp"
#include "gaborlat/lattice.hpp"
#include "gaborlat/tiling.hpp"
#include "gaborlat/window.hpp"
#include "gaborlat/zak.hpp"

namespace gaborlat::io {

using Json = nlohmann::ordered_json;

/// Throws ParseError carrying the line and column of the first bad byte.
Json parse_json(std::string_view text);
Json load_json_file(const std::filesystem::path& path);
std::string read_text_file(const std::filesystem::path& path);

/// {"basis": [["p/q", ...], [...]], "symbol": {"name", "approx", "irrational", "square"?}}.
/// A "float_basis" of numbers gives a float-backend lattice instead.
Lattice2D lattice_from_json(const Json& j);
Json to_json(const Lattice2D& lattice);
Json to_json(const FieldScalar& x);
Json to_json(const ExactMatrix& m);
Json to_json(const IntMatrix& m);

/// {"intervals": [["0","1/2"], ["3/2","2"]]}.
IntervalSet interval_set_from_json(const Json& j);
Json to_json(const IntervalSet& s);
Json to_json(const FoldProfile& f);

/// [[x, y], ...].
std::vector<Point2> points_from_json(const Json& j);
Rect rect_from_json(const Json& j);

/// {"piecewise": [{"interval": ["0","1"], "modulus": "1", "phase": {...}}]} or
/// {"sampled": {"t_min", "step", "values": [[re, im], ...]}}. A modulus is a
/// rational "p/q" or a root "sqrt(p/q)"/"1/sqrt(p/q)"; "modulus_sq" may be
/// given instead.
Window window_from_json(const Json& j);
Json to_json(const Window& g);

/// Rows "t,re[,im]"; a header line and blank lines are skipped. The t column
/// must be uniform.
SampledWindow sampled_from_csv(std::string_view text);
std::string to_csv(const SampledWindow& s);

Json to_json(const WindowVerdict& v);
Json to_json(const GramReport& r);
Json to_json(const DeviationReport& r);
Json to_json(const ZakGrid& z);
Json to_json(const DensityEstimate& d);
Json to_json(const SupportEstimate& s);

}  // namespace gaborlat::io
