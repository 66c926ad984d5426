#ifndef TAUTRING_JSON_IO_HPP
#define TAUTRING_JSON_IO_HPP

#include <json.hpp>

#include "tautring/family.hpp"
#include "tautring/kappa.hpp"
#include "tautring/poly.hpp"
#include "tautring/relations.hpp"

namespace tautring {

using Json = nlohmann::ordered_json;

/// {"vars":[{"name":"x","weight":2},...],
///  "terms":[{"coeff":"num/den","exps":[e1,...]},...]}
/// with terms in canonical order and rationals in lowest terms.
Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j);

/// {"c0": Poly, "cx": [Poly...], "cnu": Poly}
Json ring_element_to_json(const RingElement& e);

/// {"n":..., "a":..., "b":..., "choice_i":...|null, "poly": Poly}
Json kappa_to_json(const KappaExpression& k);

/// {"d":..., "coeffs":[ints], "labels":[...]}
Json relation_to_json(const RelationVector& r);

/// Coefficients only, comma-separated: "0,4,-41,100".
std::string relation_to_csv_row(const RelationVector& r);

}  // namespace tautring

#endif
