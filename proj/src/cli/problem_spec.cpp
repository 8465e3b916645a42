#include <starq/cli/problem_spec.hpp>

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <starq/algebra/poly_parser.hpp>
#include <starq/error.hpp>
#include <starq/operators/serialize.hpp>

namespace starq
{

namespace
{

using nlohmann::json;

const std::set<std::string> kinds = {"moyal", "vector-field", "natural-cotangent", "symplectic-truncated"};
const std::set<std::string> top_keys = {"kind",          "n", "casimirs", "order", "max_degree", "connection", "frame",
                                        "lowered_gamma", "a", "f",        "g",     "fault",      "table_fault"};

[[noreturn]] void fail(const std::string &msg)
{
    throw parse_error(msg);
}

std::size_t get_size(const json &j, const char *key, std::size_t fallback)
{
    if (!j.contains(key)) {
        return fallback;
    }
    const json &v = j.at(key);
    if (!v.is_number_integer() || v.get<long long>() < 0) {
        fail(std::string("'") + key + "' must be a non-negative integer");
    }
    return v.get<std::size_t>();
}

// A polynomial given as an expression string or in the canonical term-list shape.
Poly get_poly(const json &j, std::span<const std::string> names, const std::string &what)
{
    if (j.is_string()) {
        try {
            return parse_poly(j.get<std::string>(), names);
        } catch (const parse_error &e) {
            fail(what + ": " + e.what());
        }
    }
    if (j.is_number_integer()) {
        return Poly(names.size(), GaussianRational(j.get<long>()));
    }
    if (j.is_array()) {
        return poly_from_json(j, names.size());
    }
    fail(what + ": expected a polynomial expression string or term list");
}

std::size_t coordinate_index(const json &j, std::span<const std::string> names, const std::string &what)
{
    if (!j.is_string()) {
        fail(what + ": coordinate must be given by name");
    }
    const auto s = j.get<std::string>();
    const auto it = std::find(names.begin(), names.end(), s);
    if (it == names.end()) {
        fail(what + ": unknown coordinate '" + s + "'");
    }
    return static_cast<std::size_t>(it - names.begin());
}

MultiIndex get_index(const json &j, std::size_t dim, const std::string &what)
{
    if (!j.is_array() || j.size() != dim) {
        fail(what + ": expected " + std::to_string(dim) + " exponents");
    }
    MultiIndex m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (!j[i].is_number_integer() || j[i].get<long long>() < 0 || j[i].get<long long>() > 255) {
            fail(what + ": exponents must be integers in 0..255");
        }
        m.set(i, j[i].get<unsigned>());
    }
    return m;
}

Connection parse_connection(const json &j, std::size_t n)
{
    std::vector<std::string> q;
    for (std::size_t i = 0; i < n; ++i) {
        q.push_back("q" + std::to_string(i + 1));
    }
    if (!j.is_object()) {
        fail("'connection' must be an object");
    }
    if (j.contains("diffeo") == j.contains("gamma")) {
        fail("'connection' needs exactly one of 'diffeo' or 'gamma'");
    }
    if (j.contains("diffeo")) {
        const json &d = j.at("diffeo");
        if (!d.is_array() || d.size() != n) {
            fail("'connection.diffeo' must list " + std::to_string(n) + " polynomials");
        }
        std::vector<Poly> phi;
        for (std::size_t i = 0; i < n; ++i) {
            phi.push_back(get_poly(d[i], q, "connection.diffeo[" + std::to_string(i) + "]"));
        }
        try {
            return flat_connection_from_diffeo(phi);
        } catch (const error &e) {
            fail(std::string("connection.diffeo: ") + e.what());
        }
    }
    const json &g = j.at("gamma");
    if (!g.is_array()) {
        fail("'connection.gamma' must be an array");
    }
    Christoffel symbols(n);
    std::map<std::array<std::size_t, 3>, Poly> seen;
    for (std::size_t e = 0; e < g.size(); ++e) {
        const json &entry = g[e];
        const std::string what = "connection.gamma[" + std::to_string(e) + "]";
        if (!entry.is_object() || !entry.contains("upper") || !entry.contains("lower") || !entry.contains("value")) {
            fail(what + ": expected {\"upper\", \"lower\", \"value\"}");
        }
        if (!entry.at("lower").is_array() || entry.at("lower").size() != 2) {
            fail(what + ": 'lower' must name two coordinates");
        }
        const std::size_t a = coordinate_index(entry.at("upper"), q, what);
        std::size_t b = coordinate_index(entry.at("lower")[0], q, what);
        std::size_t c = coordinate_index(entry.at("lower")[1], q, what);
        if (b > c) {
            std::swap(b, c);
        }
        const Poly value = get_poly(entry.at("value"), q, what);
        auto [it, inserted] = seen.emplace(std::array<std::size_t, 3>{a, b, c}, value);
        if (!inserted && !(it->second == value)) {
            fail(what + ": conflicts with an earlier entry for the same symmetric component");
        }
        symbols.set(a, b, c, value);
        symbols.set(a, c, b, value);
    }
    if (!curvature(symbols).is_zero()) {
        fail("connection.gamma: the connection is not flat");
    }
    return Connection(std::move(symbols));
}

VectorFieldFrame parse_frame(const json &j, std::span<const std::string> names)
{
    const std::size_t d = names.size();
    if (!j.is_array() || j.size() != d) {
        fail("'frame' must list " + std::to_string(d) + " vector fields");
    }
    std::vector<DiffOp> fields;
    for (std::size_t m = 0; m < d; ++m) {
        const std::string what = "frame[" + std::to_string(m) + "]";
        if (!j[m].is_object()) {
            fail(what + ": expected an object mapping coordinate names to coefficients");
        }
        DiffOp field(d);
        for (const auto &[key, value] : j[m].items()) {
            const std::size_t a = coordinate_index(json(key), names, what);
            field.add_term(MultiIndex::unit(d, a), get_poly(value, names, what + "." + key));
        }
        fields.push_back(std::move(field));
    }
    try {
        return VectorFieldFrame(std::move(fields));
    } catch (const error &e) {
        fail(std::string("frame: ") + e.what());
    }
}

SymplecticConnectionSpec parse_symplectic(const json &j, std::size_t n, const GaussianRational &a)
{
    const auto names = phase_space_names(n);
    const std::size_t d = 2 * n;
    if (!j.is_array()) {
        fail("'lowered_gamma' must be an array");
    }
    std::vector<Poly> lowered(d * d * d, Poly(d));
    std::map<std::array<std::size_t, 3>, Poly> seen;
    for (std::size_t e = 0; e < j.size(); ++e) {
        const std::string what = "lowered_gamma[" + std::to_string(e) + "]";
        const json &entry = j[e];
        if (!entry.is_object() || !entry.contains("indices") || !entry.contains("value") ||
            !entry.at("indices").is_array() || entry.at("indices").size() != 3) {
            fail(what + ": expected {\"indices\": [three coordinates], \"value\"}");
        }
        std::array<std::size_t, 3> idx{};
        for (std::size_t x = 0; x < 3; ++x) {
            idx[x] = coordinate_index(entry.at("indices")[x], names, what);
        }
        std::sort(idx.begin(), idx.end());
        const Poly value = get_poly(entry.at("value"), names, what);
        auto [it, inserted] = seen.emplace(idx, value);
        if (!inserted && !(it->second == value)) {
            fail(what + ": conflicts with an earlier entry for the same symmetric component");
        }
        auto perm = idx;
        do {
            lowered[(perm[0] * d + perm[1]) * d + perm[2]] = value;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    try {
        return SymplecticConnectionSpec(n, std::move(lowered), a);
    } catch (const error &e) {
        fail(std::string("lowered_gamma: ") + e.what());
    }
}

} // namespace

ProblemSpec parse_problem_spec(const json &j)
{
    if (!j.is_object()) {
        fail("problem spec must be a JSON object");
    }
    for (const auto &[key, value] : j.items()) {
        if (!top_keys.contains(key)) {
            fail("unknown key '" + key + "'");
        }
    }
    ProblemSpec spec;
    if (!j.contains("kind") || !j.at("kind").is_string() || !kinds.contains(j.at("kind").get<std::string>())) {
        fail("'kind' must be one of moyal, vector-field, natural-cotangent, symplectic-truncated");
    }
    spec.kind = j.at("kind").get<std::string>();
    spec.n = get_size(j, "n", 1);
    spec.casimirs = get_size(j, "casimirs", 0);
    spec.order = get_size(j, "order", spec.kind == "symplectic-truncated" ? 2 : default_truncation_order);
    spec.max_degree = static_cast<unsigned>(get_size(j, "max_degree", 4));
    if (spec.n == 0 && spec.casimirs == 0) {
        fail("phase space is empty");
    }
    if (spec.dim() > max_dim) {
        fail("at most " + std::to_string(max_dim) + " coordinates are supported");
    }
    if (spec.order > max_operator_order()) {
        fail("order exceeds the operator order limit");
    }
    const auto names = spec.names();

    if (spec.kind == "natural-cotangent" || spec.kind == "symplectic-truncated") {
        if (spec.casimirs != 0) {
            fail("'" + spec.kind + "' needs casimirs = 0");
        }
        if (spec.n == 0) {
            fail("'" + spec.kind + "' needs n >= 1");
        }
    }
    if (spec.kind == "natural-cotangent") {
        if (spec.order > 4) {
            fail("natural-cotangent supports order <= 4");
        }
        if (!j.contains("connection")) {
            fail("natural-cotangent needs 'connection'");
        }
        spec.connection = parse_connection(j.at("connection"), spec.n);
    } else if (j.contains("connection")) {
        fail("'connection' only applies to natural-cotangent");
    }
    if (spec.kind == "symplectic-truncated") {
        if (spec.order != 2) {
            fail("symplectic-truncated has order 2");
        }
        GaussianRational a(0);
        if (j.contains("a")) {
            a = gaussian_from_json(j.at("a"));
            if (!a.is_real()) {
                fail("'a' must be real");
            }
        }
        spec.symplectic = parse_symplectic(j.contains("lowered_gamma") ? j.at("lowered_gamma") : json::array(),
                                           spec.n, a);
    } else if (j.contains("lowered_gamma") || j.contains("a")) {
        fail("'lowered_gamma' and 'a' only apply to symplectic-truncated");
    }
    if (spec.kind == "vector-field") {
        spec.frame = j.contains("frame") ? parse_frame(j.at("frame"), names) : VectorFieldFrame::coordinate(spec.dim());
    } else if (j.contains("frame")) {
        fail("'frame' only applies to vector-field");
    }
    for (const char *key : {"f", "g"}) {
        if (j.contains(key)) {
            if (!j.at(key).is_string()) {
                fail(std::string("'") + key + "' must be an expression string");
            }
            (key[0] == 'f' ? spec.f : spec.g) = j.at(key).get<std::string>();
        }
    }
    if (j.contains("fault")) {
        const json &fj = j.at("fault");
        if (!fj.is_object() || !fj.contains("order") || !fj.contains("left") || !fj.contains("right") ||
            !fj.contains("coeff")) {
            fail("'fault' must be {\"order\", \"left\", \"right\", \"coeff\"}");
        }
        ProductFault f;
        f.order = get_size(fj, "order", 0);
        if (f.order > spec.order) {
            fail("fault order exceeds the product order");
        }
        f.left = get_index(fj.at("left"), spec.dim(), "fault.left");
        f.right = get_index(fj.at("right"), spec.dim(), "fault.right");
        f.coeff = get_poly(fj.at("coeff"), names, "fault.coeff");
        spec.fault = std::move(f);
    }
    if (j.contains("table_fault")) {
        const json &tj = j.at("table_fault");
        if (!tj.is_object() || !tj.contains("table") || !tj.contains("d") || !tj.contains("coeff") ||
            !tj.at("table").is_string()) {
            fail("'table_fault' must be {\"table\", \"d\", \"coeff\"}");
        }
        TableFault t;
        t.table = tj.at("table").get<std::string>();
        if (t.table != "S2" && t.table != "S4") {
            fail("table_fault.table must be S2 or S4");
        }
        t.index = get_index(tj.at("d"), spec.dim(), "table_fault.d");
        t.coeff = get_poly(tj.at("coeff"), names, "table_fault.coeff");
        spec.table_fault = std::move(t);
    }
    return spec;
}

ProblemSpec load_problem_spec(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        fail("cannot read '" + path + "'");
    }
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error &e) {
        fail(std::string("malformed JSON: ") + e.what());
    }
    try {
        return parse_problem_spec(j);
    } catch (const json::exception &e) {
        fail(std::string("invalid spec: ") + e.what());
    }
}

StarProduct build_product(const ProblemSpec &spec)
{
    StarProduct s;
    const PoissonTensor p = PoissonTensor::canonical(spec.n, spec.casimirs);
    if (spec.kind == "moyal") {
        s = moyal(p, spec.order);
    } else if (spec.kind == "vector-field") {
        s = vf_product(*spec.frame, p, spec.order);
    } else if (spec.kind == "natural-cotangent") {
        s = natural_tstar(*spec.connection, spec.order);
    } else {
        s = truncated_symplectic(*spec.symplectic);
    }
    if (spec.fault) {
        s.c[spec.fault->order].add_term(spec.fault->left, spec.fault->right, spec.fault->coeff);
    }
    return s;
}

} // namespace starq
