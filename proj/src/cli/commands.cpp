#include <starq/cli/commands.hpp>

#include <chrono>

#include <starq/algebra/poly_parser.hpp>
#include <starq/cli/problem_spec.hpp>
#include <starq/equivalence/derivation.hpp>
#include <starq/equivalence/tables.hpp>
#include <starq/equivalence/verification.hpp>
#include <starq/error.hpp>
#include <starq/operators/serialize.hpp>
#include <starq/starproducts/checks.hpp>

#ifndef STARQ_VERSION
#define STARQ_VERSION "0.0.0"
#endif

namespace starq
{

namespace
{

using nlohmann::json;

json checks_json(const CheckReport &r)
{
    json out = json::array();
    for (const auto &e : r.entries) {
        out.push_back({{"name", e.name}, {"passed", e.passed}, {"detail", e.detail}});
    }
    return out;
}

json series_json(const PolySeries &s, std::span<const std::string> names)
{
    json text = json::array();
    for (const auto &c : s.coefficients()) {
        text.push_back(c.to_string(names));
    }
    return {{"coefficients", to_json(s)}, {"text", text}};
}

json operator_json(const DiffOp &op, std::span<const std::string> names)
{
    return {{"terms", op.size()}, {"operator", to_json(op)}, {"text", op.to_string(names)}};
}

json differences_json(const std::vector<TermDifference> &diffs, std::span<const std::string> names)
{
    json out = json::array();
    for (const auto &d : diffs) {
        out.push_back({{"d", d.index.to_vector()},
                       {"closed_form", to_json(d.left)},
                       {"derived", to_json(d.right)},
                       {"closed_form_text", d.left.to_string(names)},
                       {"derived_text", d.right.to_string(names)}});
    }
    return out;
}

json problem_json(const ProblemSpec &spec)
{
    return {{"kind", spec.kind},
            {"n", spec.n},
            {"casimirs", spec.casimirs},
            {"order", spec.order},
            {"max_degree", spec.max_degree}};
}

void add_table_fault(const ProblemSpec &spec, const std::string &table, DiffOp &op)
{
    if (spec.table_fault && spec.table_fault->table == table) {
        op.add_term(spec.table_fault->index, spec.table_fault->coeff);
    }
}

void cmd_validate(const ProblemSpec &spec, const StarProduct &s, CheckReport &checks, json &report)
{
    checks.append(check_axioms(s, spec.max_degree));
    checks.append(quantum_canonicity_check(s));
    json cs = json::array();
    for (std::size_t k = 0; k <= s.order(); ++k) {
        cs.push_back({{"order", k}, {"terms", s.c[k].size()}, {"operator", to_json(s.c[k])}});
    }
    report["product"] = {{"kind", s.kind}, {"parity", s.parity}, {"associative_order", s.associative_order}, {"C", cs}};
}

// Derivation plus the checks every morphism must pass. Returns nullopt (with a
// failed entry) when the derivation itself is refused.
std::optional<EquivalenceMorphism> derive_checked(const StarProduct &s, std::size_t N, CheckReport &checks)
{
    try {
        EquivalenceMorphism m = derive_equivalence(s, N);
        checks.append(derivation_checks(m, s.parity));
        checks.append(verify_defining_relation(m, s));
        return m;
    } catch (const error &e) {
        checks.add("derivation", false, e.what());
        return std::nullopt;
    }
}

json morphism_json(const EquivalenceMorphism &m, std::span<const std::string> names)
{
    json S = json::array();
    for (std::size_t k = 1; k <= m.order(); ++k) {
        json entry = operator_json(m.S[k], names);
        entry["order"] = k;
        S.push_back(entry);
    }
    return {{"provenance", m.provenance}, {"order", m.order()}, {"S", S}};
}

void cmd_derive(const ProblemSpec &spec, const StarProduct &s, CheckReport &checks, json &report)
{
    const auto names = spec.names();
    auto m = derive_checked(s, s.order(), checks);
    if (!m) {
        return;
    }
    checks.append(verify_intertwining(*m, s, spec.max_degree));
    checks.append(verify_symmetrization(*m, s, spec.max_degree));
    if (spec.kind == "symplectic-truncated" && m->order() >= 2) {
        const DiffOp closed = paper_S2_symplectic(*spec.symplectic);
        bool ok = true;
        for (std::size_t a = 0; a < s.dim(); ++a) {
            ok = ok && commutator_with_coordinate(closed, a) == slot_fix(s.c[2], a, Slot::left);
        }
        checks.add("symplectic-S2-commutator", ok);
    }
    report["morphism"] = morphism_json(*m, names);
}

void cmd_verify_tables(const ProblemSpec &spec, const StarProduct &s, CheckReport &checks, json &report)
{
    const auto names = spec.names();
    if (s.order() < 2) {
        throw parse_error("verify-tables needs order >= 2");
    }
    auto m = derive_checked(s, s.order(), checks);
    if (!m) {
        return;
    }
    json tables;
    if (spec.kind == "symplectic-truncated") {
        DiffOp closed = paper_S2_symplectic(*spec.symplectic);
        add_table_fault(spec, "S2", closed);
        const TableComparison cmp = compare_operators(closed, m->S[2]);
        checks.add("table-S2", cmp.match, cmp.match ? "" : std::to_string(cmp.differences.size()) + " differing terms");
        bool ok = true;
        for (std::size_t a = 0; a < s.dim(); ++a) {
            ok = ok && commutator_with_coordinate(closed, a) == slot_fix(s.c[2], a, Slot::left);
        }
        checks.add("table-S2-commutator", ok);
        tables["S2"] = {{"match", cmp.match}, {"differences", differences_json(cmp.differences, names)}};
    } else {
        DiffOp s2 = paper_S2_flat(*spec.connection);
        add_table_fault(spec, "S2", s2);
        const TableComparison c2 = compare_operators(s2, m->S[2]);
        checks.add("table-S2", c2.match, c2.match ? "" : std::to_string(c2.differences.size()) + " differing terms");
        tables["S2"] = {{"match", c2.match}, {"differences", differences_json(c2.differences, names)}};
        if (s.order() >= 4) {
            json s4;
            std::optional<CyclicConvention> matched;
            for (auto conv : {CyclicConvention::cyclic, CyclicConvention::full_symmetrization}) {
                DiffOp closed = paper_S4_flat(*spec.connection, conv);
                add_table_fault(spec, "S4", closed);
                const TableComparison c4 = compare_operators(closed, m->S[4]);
                s4[to_string(conv)] = {{"match", c4.match}, {"differences", differences_json(c4.differences, names)}};
                if (c4.match) {
                    matched = conv;
                    break;
                }
            }
            s4["match"] = matched.has_value();
            s4["convention"] = matched ? json(to_string(*matched)) : json(nullptr);
            checks.add("table-S4", matched.has_value(),
                       matched ? "matched under the " + to_string(*matched) + " reading of cycl"
                               : "no reading of cycl reproduces the derived operator");
            tables["S4"] = s4;
            if (!matched) {
                checks.append(verify_intertwining(*m, s, spec.max_degree));
            }
        }
    }
    report["tables"] = tables;
    report["morphism"] = morphism_json(*m, names);
}

void cmd_apply(const ProblemSpec &spec, const StarProduct &s, const CommandOptions &options, CheckReport &checks,
               json &report)
{
    const auto names = spec.names();
    const std::string ftext = options.f.value_or(spec.f.empty() ? "1" : spec.f);
    const std::string gtext = options.g.value_or(spec.g.empty() ? "1" : spec.g);
    const Poly f = parse_poly(ftext, names);
    const Poly g = parse_poly(gtext, names);
    json out{{"f", ftext}, {"g", gtext}};
    out["star"] = series_json(star(s, f, g), names);
    if (s.order() >= 1) {
        out["bracket"] = series_json(star_bracket(s, f, g), names);
    }
    if (auto m = derive_checked(s, s.order(), checks)) {
        out["S_f"] = series_json(apply(*m, f), names);
    }
    report["apply"] = out;
}

std::string summarize(const std::string &command, const CheckReport &checks, int code)
{
    std::size_t passed = 0;
    for (const auto &e : checks.entries) {
        passed += e.passed ? 1 : 0;
    }
    std::string s = "starq " + command + ": " + (code == exit_pass ? "pass" : "FAIL") + " (" + std::to_string(passed) +
                    "/" + std::to_string(checks.entries.size()) + " checks)";
    for (const auto &e : checks.entries) {
        if (!e.passed) {
            s += "\n  failed " + e.name + (e.detail.empty() ? "" : ": " + e.detail);
        }
    }
    return s;
}

} // namespace

std::string engine_version()
{
    return STARQ_VERSION;
}

CommandResult run_command(const std::string &command, const std::string &spec_path, const CommandOptions &options)
{
    const auto start = std::chrono::steady_clock::now();
    CommandResult result;
    json &report = result.report;
    report["command"] = command;
    report["engine"] = {{"name", "starq"}, {"version", engine_version()}};
    CheckReport checks;
    try {
        if (command != "validate" && command != "derive" && command != "verify-tables" && command != "apply") {
            throw parse_error("unknown command '" + command + "'");
        }
        ProblemSpec spec = load_problem_spec(spec_path);
        if (options.order) {
            spec.order = *options.order;
            if ((spec.kind == "natural-cotangent" && spec.order > 4) ||
                (spec.kind == "symplectic-truncated" && spec.order != 2)) {
                throw parse_error("--order is out of range for '" + spec.kind + "'");
            }
        }
        if (options.max_degree) {
            spec.max_degree = *options.max_degree;
        }
        if (command == "verify-tables" && spec.kind != "natural-cotangent" && spec.kind != "symplectic-truncated") {
            throw parse_error("verify-tables needs a natural-cotangent or symplectic-truncated spec");
        }
        report["problem"] = problem_json(spec);
        StarProduct s;
        try {
            s = build_product(spec);
        } catch (const order_limit_exceeded &) {
            throw;
        } catch (const error &e) {
            throw parse_error(std::string("cannot construct the product: ") + e.what());
        }
        if (command == "validate") {
            cmd_validate(spec, s, checks, report);
        } else if (command == "derive") {
            cmd_derive(spec, s, checks, report);
        } else if (command == "verify-tables") {
            cmd_verify_tables(spec, s, checks, report);
        } else {
            cmd_apply(spec, s, options, checks, report);
        }
        result.exit_code = checks.passed() ? exit_pass : exit_check_failure;
        report["status"] = checks.passed() ? "pass" : "fail";
        report["checks"] = checks_json(checks);
        result.summary = summarize(command, checks, result.exit_code);
    } catch (const parse_error &e) {
        result.exit_code = exit_parse_error;
        report["status"] = "error";
        report["error"] = e.what();
        result.summary = "starq " + command + ": parse error: " + e.what();
    } catch (const error &e) {
        // Engine refusals during a check run count as check failures.
        checks.add("engine", false, e.what());
        result.exit_code = exit_check_failure;
        report["status"] = "fail";
        report["checks"] = checks_json(checks);
        result.summary = summarize(command, checks, result.exit_code);
    }
    if (options.timing) {
        report["timing"] = {
            {"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()}};
    }
    return result;
}

} // namespace starq
