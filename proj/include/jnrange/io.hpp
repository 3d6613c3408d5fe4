#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "jnrange/channels.hpp"
#include "jnrange/hermitian_tuple.hpp"
#include "jnrange/jnr.hpp"
#include "jnrange/linalg.hpp"
#include "jnrange/numrange.hpp"
#include "jnrange/shadow.hpp"
#include "jnrange/states.hpp"

namespace jnrange::io {

using nlohmann::json;

/// 17 significant digits, locale independent.
std::string format_double(double x);

/// {"rows": R, "cols": C, "re": [[...]], "im": [[...]]}; "im" optional (zeros).
/// Throws ParseError on missing fields, ragged arrays, shape disagreement or non-finite entries.
ComplexMatrix matrix_from_json(const json& j);
json matrix_to_json(const ComplexMatrix& m);

/// Matrix schema plus "kind": "state" (an N x 1 column) or "density".
PureState state_from_json(const json& j);
DensityMatrix density_from_json(const json& j);
json state_to_json(const PureState& psi);
json density_to_json(const DensityMatrix& rho);

/// {"dim": N, "kraus": [<matrix>, ...]}
KrausChannel channel_from_json(const json& j);
json channel_to_json(const KrausChannel& channel);

/// {"operators": [<matrix>, ...]} or a bare array of matrices.
HermitianTuple tuple_from_json(const json& j);

json read_json_file(const std::string& path);

void write_boundary_csv(std::ostream& out, const RangeBoundary& b);
void write_points_csv(std::ostream& out, const PointCloud& points);
void write_moments_csv(std::ostream& out, const MomentTable& table, std::size_t m);

/// {"bounds": [[lo, hi], ...], "bins": B, "counts": [...], "total": T, "outside": K}
json histogram_to_json(const Histogram& h);

json report_to_json(const ChannelReport& r);
json report_to_json(const InclusionReport& r);
json report_to_json(const InjectivityReport& r);
json report_to_json(const InvarianceReport& r);
json report_to_json(const BallReport& r);
json factorization_to_json(const ProjectionFactorization& f);
json decomposition_to_json(const PureDecomposition& d);

}  // namespace jnrange::io
