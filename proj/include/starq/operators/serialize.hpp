#ifndef STARQ_OPERATORS_SERIALIZE_HPP
#define STARQ_OPERATORS_SERIALIZE_HPP

#include <json.hpp>

#include <starq/algebra/gaussian_rational.hpp>
#include <starq/algebra/hbar_series.hpp>
#include <starq/algebra/poly.hpp>
#include <starq/operators/bidiff_op.hpp>
#include <starq/operators/diff_op.hpp>

namespace starq
{

// Canonical JSON shapes. Every coefficient is exact:
//   complex  {"re": "a/b", "im": "c/d"}
//   Poly     [{"m": [exponents...], "c": complex}, ...]       graded order
//   DiffOp   {"dim": d, "terms": [{"d": [exponents...], "coeff": Poly}, ...]}
//   BiDiffOp {"dim": d, "terms": [{"left": [...], "right": [...], "coeff": Poly}, ...]}
// Decoding validates the shape and throws parse_error.

nlohmann::json to_json(const GaussianRational &c);
nlohmann::json to_json(const Poly &p);
nlohmann::json to_json(const DiffOp &op);
nlohmann::json to_json(const BiDiffOp &op);
nlohmann::json to_json(const PolySeries &s);

GaussianRational gaussian_from_json(const nlohmann::json &j);
Poly poly_from_json(const nlohmann::json &j, std::size_t dim);
DiffOp diff_op_from_json(const nlohmann::json &j);
BiDiffOp bidiff_op_from_json(const nlohmann::json &j);

} // namespace starq

#endif
