#pragma once

// JSON shapes shared by the CLI and external consumers. Exact scalars are
// strings such as "3/2" or "1/2+1/2r3"; complex matrices are arrays of rows
// of [re, im] pairs.

#include <json.hpp>

#include "cwlab/lie_group.hpp"
#include "cwlab/orbit_certify.hpp"
#include "cwlab/quadric.hpp"
#include "cwlab/randers.hpp"
#include "cwlab/strata.hpp"

namespace cwlab {

using Json = nlohmann::json;

Json to_json(const Vec& v);
Vec vec_from_json(const Json& j);
Json to_json(const ExactMatrix& m);
ExactMatrix exact_matrix_from_json(const Json& j);

Json to_json(const Quadric& q);
Quadric quadric_from_json(const Json& j);

/// {verdict, method, dimension, quadric_space_dim, witness: {A, b, c}}
Json to_json(const CenterCertificate& c);
Json to_json(const OrbitCertification& c);

/// {family, rank, n0, parts, codim, generic}
Json to_json(const StratumReport& s);

/// {mode: "exact", A, B, V} with exact strings
Json to_json(const RandersData& d);
/// {mode: "float", A, B, V} with numbers
Json to_json(const NumericRanders& d);
/// Accepts both modes; throws kParse on malformed input.
NumericRanders numeric_randers_from_json(const Json& j);
/// Accepts mode "exact" only.
RandersData randers_from_json(const Json& j);

Json to_json(const Eigen::MatrixXcd& m);
Eigen::MatrixXcd complex_matrix_from_json(const Json& j);

Json to_json(const VariationReport& r);
Json to_json(const LemgeoResult& r);

}  // namespace cwlab
