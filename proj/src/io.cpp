#include "jnrange/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>

#include "jnrange/errors.hpp"

namespace jnrange::io {

namespace {

std::vector<std::vector<double>> parse_grid(const json& j, const char* field, std::size_t rows,
                                            std::size_t cols) {
  if (!j.is_array() || j.size() != rows) {
    throw ParseError(std::string("matrix: '") + field + "' must be an array of " +
                     std::to_string(rows) + " rows");
  }
  std::vector<std::vector<double>> grid;
  grid.reserve(rows);
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != cols) {
      throw ParseError(std::string("matrix: ragged or mis-sized row in '") + field + "'");
    }
    std::vector<double> values;
    values.reserve(cols);
    for (const auto& v : row) {
      if (!v.is_number()) throw ParseError(std::string("matrix: non-numeric entry in '") + field + "'");
      const double x = v.get<double>();
      if (!std::isfinite(x)) throw ParseError("matrix: non-finite entry");
      values.push_back(x);
    }
    grid.push_back(std::move(values));
  }
  return grid;
}

std::size_t positive_size(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_number_integer() || j[field].get<long long>() <= 0) {
    throw ParseError(std::string("missing or non-positive integer field '") + field + "'");
  }
  return j[field].get<std::size_t>();
}

json double_array(std::span<const double> xs) {
  json a = json::array();
  for (double x : xs) a.push_back(x);
  return a;
}

void write_row(std::ostream& out, std::span<const double> xs) {
  for (std::size_t j = 0; j < xs.size(); ++j) {
    if (j > 0) out << ',';
    out << format_double(xs[j]);
  }
  out << '\n';
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  if (ec != std::errc{}) throw NumericalError("format_double: conversion failed");
  return std::string(buf, ptr);
}

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("matrix: expected a JSON object");
  const std::size_t rows = positive_size(j, "rows");
  const std::size_t cols = positive_size(j, "cols");
  if (!j.contains("re")) throw ParseError("matrix: missing 're'");
  const auto re = parse_grid(j["re"], "re", rows, cols);
  std::vector<std::vector<double>> im;
  if (j.contains("im")) im = parse_grid(j["im"], "im", rows, cols);
  ComplexMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      m(r, c) = Complex(re[r][c], im.empty() ? 0.0 : im[r][c]);
    }
  }
  return m;
}

json matrix_to_json(const ComplexMatrix& m) {
  json re = json::array();
  json im = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json rr = json::array();
    json ri = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      rr.push_back(m(r, c).real());
      ri.push_back(m(r, c).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ri));
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

PureState state_from_json(const json& j) {
  if (j.value("kind", std::string{}) != "state") throw ParseError("state: expected \"kind\": \"state\"");
  const ComplexMatrix m = matrix_from_json(j);
  if (m.cols() != 1) throw DimensionError("state: expected an N x 1 column");
  return PureState(column(m, 0));
}

DensityMatrix density_from_json(const json& j) {
  if (j.value("kind", std::string{}) != "density") {
    throw ParseError("density: expected \"kind\": \"density\"");
  }
  return DensityMatrix(matrix_from_json(j));
}

json state_to_json(const PureState& psi) {
  ComplexMatrix m(psi.dim(), 1);
  for (std::size_t i = 0; i < psi.dim(); ++i) m(i, 0) = psi[i];
  json j = matrix_to_json(m);
  j["kind"] = "state";
  return j;
}

json density_to_json(const DensityMatrix& rho) {
  json j = matrix_to_json(rho.matrix());
  j["kind"] = "density";
  return j;
}

KrausChannel channel_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("channel: expected a JSON object");
  const std::size_t dim = positive_size(j, "dim");
  if (!j.contains("kraus") || !j["kraus"].is_array() || j["kraus"].empty()) {
    throw ParseError("channel: 'kraus' must be a non-empty array");
  }
  std::vector<ComplexMatrix> kraus;
  for (const auto& k : j["kraus"]) {
    ComplexMatrix x = matrix_from_json(k);
    if (x.rows() != dim || x.cols() != dim) {
      throw DimensionError("channel: Kraus operator is not " + std::to_string(dim) + "x" +
                           std::to_string(dim));
    }
    kraus.push_back(std::move(x));
  }
  return KrausChannel(std::move(kraus));
}

json channel_to_json(const KrausChannel& channel) {
  json kraus = json::array();
  for (const auto& x : channel.kraus()) kraus.push_back(matrix_to_json(x));
  return json{{"dim", channel.dim()}, {"kraus", std::move(kraus)}};
}

HermitianTuple tuple_from_json(const json& j) {
  const json* list = &j;
  if (j.is_object()) {
    if (!j.contains("operators")) throw ParseError("tuple: missing 'operators'");
    list = &j["operators"];
  }
  if (!list->is_array() || list->empty()) throw ParseError("tuple: expected a non-empty array");
  std::vector<ComplexMatrix> ops;
  for (const auto& m : *list) ops.push_back(matrix_from_json(m));
  return HermitianTuple(std::move(ops));
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError("invalid JSON in '" + path + "': " + e.what());
  }
}

void write_boundary_csv(std::ostream& out, const RangeBoundary& b) {
  out << "theta,support,re,im\n";
  for (std::size_t t = 0; t < b.size(); ++t) {
    const double row[] = {b.angles[t], b.support_values[t], b.boundary_points[t].real(),
                          b.boundary_points[t].imag()};
    write_row(out, row);
  }
}

void write_points_csv(std::ostream& out, const PointCloud& points) {
  for (std::size_t j = 0; j < points.dim; ++j) out << (j > 0 ? "," : "") << 'x' << (j + 1);
  out << '\n';
  for (std::size_t i = 0; i < points.size(); ++i) write_row(out, points.point(i));
}

void write_moments_csv(std::ostream& out, const MomentTable& table, std::size_t m) {
  for (std::size_t j = 0; j < m; ++j) out << 'k' << (j + 1) << ',';
  out << "estimate,std_error\n";
  for (const auto& e : table.entries) {
    for (unsigned k : e.index) out << k << ',';
    out << format_double(e.estimate) << ',' << format_double(e.std_error) << '\n';
  }
}

json histogram_to_json(const Histogram& h) {
  json bounds = json::array();
  for (const auto& [lo, hi] : h.bounds) bounds.push_back(json::array({lo, hi}));
  return json{{"bounds", std::move(bounds)},
              {"bins", h.bins_per_axis},
              {"counts", h.counts},
              {"total", h.total},
              {"outside", h.outside}};
}

json report_to_json(const ChannelReport& r) {
  return json{{"is_unital", r.is_unital},
              {"is_trace_preserving", r.is_trace_preserving},
              {"unital_defect", r.unital_defect},
              {"tp_defect", r.tp_defect}};
}

json report_to_json(const InclusionReport& r) {
  return json{{"max_violation", r.max_violation},
              {"directions_checked", r.directions_checked},
              {"samples_checked", r.samples_checked},
              {"violations", r.violations},
              {"tolerance", r.tolerance},
              {"hypothesis_defects", {{"unital_defect", r.unital_defect}, {"tp_defect", r.tp_defect}}},
              {"passed", r.passed()}};
}

json report_to_json(const InjectivityReport& r) {
  return json{{"rank", r.rank},
              {"condition_number", r.condition_number},
              {"violations", r.violations},
              {"trials", r.trials},
              {"min_distance_ratio", r.min_distance_ratio},
              {"sigma_min", r.sigma_min},
              {"passed", r.violations == 0}};
}

json report_to_json(const InvarianceReport& r) {
  return json{{"passed", r.passed}, {"moments_compared", r.moments_compared}, {"max_z", r.max_z}};
}

json report_to_json(const BallReport& r) {
  return json{{"sample_count", r.sample_count},
              {"max_norm", r.max_norm},
              {"ks_statistic", r.ks_statistic},
              {"ks_critical", r.ks_critical},
              {"second_moments", r.second_moments},
              {"second_moment_std_errors", r.second_moment_std_errors},
              {"max_second_moment_z", r.max_second_moment_z},
              {"max_route_discrepancy", r.max_route_discrepancy},
              {"passed", r.passed()}};
}

json factorization_to_json(const ProjectionFactorization& f) {
  json map = json::array();
  for (std::size_t i = 0; i < f.coefficient_map.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < f.coefficient_map.cols(); ++k) row.push_back(f.coefficient_map(i, k));
    map.push_back(std::move(row));
  }
  return json{{"rank", f.rank},
              {"condition_number", f.condition_number},
              {"coefficient_map", std::move(map)},
              {"trace_offsets", double_array(f.trace_offsets)},
              {"centered", true}};
}

json decomposition_to_json(const PureDecomposition& d) {
  json states = json::array();
  for (const auto& s : d.states) states.push_back(state_to_json(s));
  double total = 0.0;
  for (double w : d.weights) total += w;
  return json{{"weights", d.weights}, {"weight_sum", total}, {"states", std::move(states)}};
}

}  // namespace jnrange::io
