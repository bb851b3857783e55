#pragma once

#include <json.hpp>

#include "melon/laurent_poly.hpp"
#include "melon/paths.hpp"
#include "melon/plane_partitions.hpp"

namespace melon {

using Json = nlohmann::ordered_json;

/// [[exponent, "coefficient"], ...] with strictly increasing exponents.
Json poly_to_json(const LaurentPoly& p);
/// Inverse of poly_to_json. Rejects unsorted or repeated exponents, zero
/// coefficients and malformed decimals with ParseError.
LaurentPoly poly_from_json(const Json& j);

/// Compact single-line text of poly_to_json.
std::string serialize_poly(const LaurentPoly& p);
LaurentPoly parse_poly(const std::string& text);

/// {N, M, k, lambda, c_steps, b_steps, volume, c_tableau, b_tableau}.
/// c_steps / b_steps are the line counts l_j of the two nests; the
/// tableaux pin down the individual paths.
Json watermelon_to_json(const Watermelon& w);
/// Accepts the fields above. When the tableaux are absent, the first pair
/// (in enumeration order) matching lambda, c_steps and b_steps is used.
Watermelon watermelon_from_json(const Json& j);

/// {N, L, M, parts: [[...]], volume}
Json plane_partition_to_json(const PlanePartition& pi, std::size_t n, std::size_t l, int m);
struct BoxedPlanePartition {
  PlanePartition pi;
  std::size_t n = 0;
  std::size_t l = 0;
  int m = 0;
};
BoxedPlanePartition plane_partition_from_json(const Json& j);

}  // namespace melon
