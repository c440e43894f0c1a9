/**
 * @file io.hpp
 * @brief JSON connection files and JSON or plain-text rendering of results.
 *
 * Connection file:
 * @code
 * {"n": 2, "gamma": {"1,1,2": "x1", "2,2,1": "-x2"}, "scale_form": ["0", "x1"]}
 * @endcode
 * Indices are 1-based, "i,j,k" names Gamma_ij^k and the (j,i) entry is
 * filled in by symmetry. Missing entries are zero.
 */
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "projstar/connection.hpp"

namespace projstar {

using Json = nlohmann::ordered_json;

Connection connection_from_json(const Json& j);
Connection load_connection(const std::string& path);
Json connection_to_json(const Connection& conn);

/// Canonical monomial text, "1" for the unit monomial.
std::string monomial_string(const Mono& m);
/// {"monomial": "coeff"} in canonical monomial order.
Json poly_to_json(const Poly& p);
/// {"0": {...}, "1": {...}, ...}.
Json series_to_json(const std::vector<Poly>& terms);
/// One line per nonzero term: "[label^r] poly".
std::string series_to_text(const std::vector<Poly>& terms, const std::string& label);

}  // namespace projstar
