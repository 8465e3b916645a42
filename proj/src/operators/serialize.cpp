#include <starq/operators/serialize.hpp>

#include <string>
#include <vector>

#include <starq/error.hpp>

namespace starq
{

using nlohmann::json;

namespace
{

json exponents_to_json(const MultiIndex &m)
{
    return json(m.to_vector());
}

MultiIndex exponents_from_json(const json &j, std::size_t dim)
{
    if (!j.is_array() || j.size() != dim) {
        throw parse_error("exponent list must be an array of length " + std::to_string(dim));
    }
    std::vector<unsigned> e;
    for (const auto &v : j) {
        if (!v.is_number_unsigned()) {
            throw parse_error("exponents must be non-negative integers");
        }
        e.push_back(v.get<unsigned>());
    }
    return MultiIndex(dim, std::span<const unsigned>(e));
}

std::size_t dim_from_json(const json &j)
{
    if (!j.is_object() || !j.contains("dim") || !j.at("dim").is_number_unsigned() || !j.contains("terms") ||
        !j.at("terms").is_array()) {
        throw parse_error("operator JSON needs unsigned 'dim' and array 'terms'");
    }
    return j.at("dim").get<std::size_t>();
}

} // namespace

json to_json(const GaussianRational &c)
{
    return json{{"re", rational_to_string(c.re())}, {"im", rational_to_string(c.im())}};
}

json to_json(const Poly &p)
{
    json out = json::array();
    for (const auto &[m, c] : p.terms()) {
        out.push_back(json{{"m", exponents_to_json(m)}, {"c", to_json(c)}});
    }
    return out;
}

json to_json(const DiffOp &op)
{
    json terms = json::array();
    for (const auto &[index, c] : op.terms()) {
        terms.push_back(json{{"d", exponents_to_json(index)}, {"coeff", to_json(c)}});
    }
    return json{{"dim", op.dim()}, {"terms", std::move(terms)}};
}

json to_json(const BiDiffOp &op)
{
    json terms = json::array();
    for (const auto &[k, c] : op.terms()) {
        terms.push_back(
            json{{"left", exponents_to_json(k.first)}, {"right", exponents_to_json(k.second)}, {"coeff", to_json(c)}});
    }
    return json{{"dim", op.dim()}, {"terms", std::move(terms)}};
}

json to_json(const PolySeries &s)
{
    json out = json::array();
    for (const auto &c : s.coefficients()) {
        out.push_back(to_json(c));
    }
    return out;
}

GaussianRational gaussian_from_json(const json &j)
{
    if (j.is_string()) {
        return GaussianRational(GaussianRational::parse_rational(j.get<std::string>()));
    }
    if (j.is_number_integer()) {
        return GaussianRational(j.get<long>());
    }
    if (!j.is_object() || !j.contains("re") || !j.contains("im") || !j.at("re").is_string() ||
        !j.at("im").is_string()) {
        throw parse_error("complex coefficient must be {\"re\": \"a/b\", \"im\": \"c/d\"}");
    }
    return {GaussianRational::parse_rational(j.at("re").get<std::string>()),
            GaussianRational::parse_rational(j.at("im").get<std::string>())};
}

Poly poly_from_json(const json &j, std::size_t dim)
{
    if (!j.is_array()) {
        throw parse_error("polynomial must be an array of terms");
    }
    std::vector<Poly::term> terms;
    for (const auto &t : j) {
        if (!t.is_object() || !t.contains("m") || !t.contains("c")) {
            throw parse_error("polynomial term needs 'm' and 'c'");
        }
        terms.emplace_back(exponents_from_json(t.at("m"), dim), gaussian_from_json(t.at("c")));
    }
    return Poly::from_terms(dim, std::move(terms));
}

DiffOp diff_op_from_json(const json &j)
{
    const std::size_t dim = dim_from_json(j);
    DiffOp op(dim);
    for (const auto &t : j.at("terms")) {
        if (!t.is_object() || !t.contains("d") || !t.contains("coeff")) {
            throw parse_error("operator term needs 'd' and 'coeff'");
        }
        op.add_term(exponents_from_json(t.at("d"), dim), poly_from_json(t.at("coeff"), dim));
    }
    return op;
}

BiDiffOp bidiff_op_from_json(const json &j)
{
    const std::size_t dim = dim_from_json(j);
    BiDiffOp op(dim);
    for (const auto &t : j.at("terms")) {
        if (!t.is_object() || !t.contains("left") || !t.contains("right") || !t.contains("coeff")) {
            throw parse_error("bidifferential term needs 'left', 'right' and 'coeff'");
        }
        op.add_term(exponents_from_json(t.at("left"), dim), exponents_from_json(t.at("right"), dim),
                    poly_from_json(t.at("coeff"), dim));
    }
    return op;
}

} // namespace starq
