// Acceptance criteria 1-11. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <starq/algebra/poly_parser.hpp>
#include <starq/equivalence/derivation.hpp>
#include <starq/equivalence/solvers.hpp>
#include <starq/equivalence/tables.hpp>
#include <starq/equivalence/verification.hpp>
#include <starq/geometry/connection.hpp>
#include <starq/starproducts/checks.hpp>
#include <starq/starproducts/constructors.hpp>

using namespace starq;

namespace
{

struct Outcome {
    bool passed = true;
    std::string detail;

    void require(bool ok, const std::string &what)
    {
        if (!ok) {
            passed = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

struct NamedConnection {
    std::string name;
    Connection connection;
};

std::vector<std::string> base_names(std::size_t n)
{
    std::vector<std::string> q;
    for (std::size_t i = 1; i <= n; ++i) {
        q.push_back("q" + std::to_string(i));
    }
    return q;
}

Connection from_gamma(const std::string &gamma)
{
    return Connection::one_dimensional(parse_poly(gamma, base_names(1)));
}

Connection from_diffeo(const std::vector<std::string> &maps)
{
    std::vector<Poly> phi;
    for (const auto &m : maps) {
        phi.push_back(parse_poly(m, base_names(maps.size())));
    }
    return flat_connection_from_diffeo(phi);
}

const std::vector<NamedConnection> &table_connections()
{
    static const std::vector<NamedConnection> c{
        {"n=1 gamma=q", from_gamma("q1")},
        {"n=1 gamma=1+q^2", from_gamma("1 + q1^2")},
        {"n=2 triangular", from_diffeo({"q1 + (q2 + q1^3)^2", "q2 + q1^3"})},
    };
    return c;
}

// Every F produced while deriving, gathered for the solver-agreement criterion.
std::vector<std::vector<DiffOp>> collected_F;
// Every parity-flagged derived morphism.
std::vector<std::pair<std::string, EquivalenceMorphism>> parity_morphisms;

EquivalenceMorphism derive(const std::string &label, const StarProduct &s, std::size_t N)
{
    EquivalenceMorphism m = derive_equivalence(s, N);
    for (const auto &step : m.trace) {
        collected_F.push_back(step.F);
    }
    if (s.parity) {
        parity_morphisms.emplace_back(label, m);
    }
    return m;
}

std::string first_failure(const CheckReport &r)
{
    const CheckEntry *e = r.first_failure();
    return e == nullptr ? std::string() : e->name + (e->detail.empty() ? "" : ": " + e->detail);
}

Outcome criterion1()
{
    Outcome o;
    const StarProduct s = moyal(PoissonTensor::canonical(1), 4);
    const auto names = phase_space_names(1);
    auto P = [&](const char *t) { return parse_poly(t, names); };
    const PolySeries got = star(s, P("q1^2"), P("p1^2"));
    const PolySeries expected(std::vector<Poly>{P("q1^2*p1^2"), P("2*i*q1*p1"), P("-1/2"), Poly(2), Poly(2)});
    o.require(got == expected, "q^2 * p^2 differs from q^2p^2 + 2i hbar qp - hbar^2/2");
    const CheckReport axioms = check_axioms(s, 6);
    o.require(axioms.passed(), "axiom failure: " + first_failure(axioms));
    return o;
}

Outcome criterion2()
{
    Outcome o;
    for (const auto &[name, c] : table_connections()) {
        const EquivalenceMorphism m = derive(name + " N=2", natural_tstar(c, 2), 2);
        const TableComparison cmp = compare_operators(paper_S2_flat(c), m.S[2]);
        o.require(cmp.match, name + ": S2 differs in " + std::to_string(cmp.differences.size()) + " terms");
    }
    return o;
}

Outcome criterion3(std::string &convention)
{
    Outcome o;
    std::vector<std::string> used;
    for (const auto &[name, c] : table_connections()) {
        const StarProduct s = natural_tstar(c, 4);
        const EquivalenceMorphism m = derive(name + " N=4", s, 4);
        bool matched = false;
        for (const auto conv : {CyclicConvention::cyclic, CyclicConvention::full_symmetrization}) {
            const TableComparison cmp = compare_operators(paper_S4_flat(c, conv), m.S[4]);
            if (cmp.match) {
                matched = true;
                used.push_back(to_string(conv));
                break;
            }
            std::printf("  S4 table vs derived (%s, %s): %zu differing terms\n", name.c_str(),
                        to_string(conv).c_str(), cmp.differences.size());
        }
        if (!matched) {
            // Fallback: the derived S4 must satisfy its defining relation and intertwine.
            const CheckReport rel = verify_defining_relation(m, s);
            const CheckReport inter = verify_intertwining(m, s, 4);
            o.require(false, name + ": no convention matches (defining relation " +
                                 (rel.passed() ? "holds" : "fails") + ", intertwining " +
                                 (inter.passed() ? "holds" : "fails") + ")");
        }
    }
    convention.clear();
    for (const auto &u : used) {
        if (convention.find(u) == std::string::npos) {
            convention += (convention.empty() ? "" : ",") + u;
        }
    }
    return o;
}

SymplecticConnectionSpec random_symplectic(std::mt19937_64 &rng, const GaussianRational &a)
{
    const std::size_t d = 2;
    const auto monomials = all_multi_indices(d, 2);
    auto small = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
    auto random_poly = [&] {
        Poly p(d);
        for (const auto &m : monomials) {
            if (small(0, 2) != 0) {
                p += Poly::monomial(m, GaussianRational::fraction(small(-5, 5), small(1, 3)));
            }
        }
        return p;
    };
    std::vector<Poly> lowered(d * d * d, Poly(d));
    const std::size_t independent[4][3] = {{0, 0, 0}, {0, 0, 1}, {0, 1, 1}, {1, 1, 1}};
    for (const auto &idx : independent) {
        const Poly v = random_poly();
        const std::size_t a0 = idx[0], b0 = idx[1], c0 = idx[2];
        const std::size_t perm[6][3] = {{a0, b0, c0}, {a0, c0, b0}, {b0, a0, c0},
                                        {b0, c0, a0}, {c0, a0, b0}, {c0, b0, a0}};
        for (const auto &pi : perm) {
            lowered[(pi[0] * d + pi[1]) * d + pi[2]] = v;
        }
    }
    return SymplecticConnectionSpec(1, std::move(lowered), a);
}

Outcome criterion4()
{
    Outcome o;
    std::mt19937_64 rng(20240607);
    const GaussianRational weights[] = {GaussianRational(0), GaussianRational(1), GaussianRational::fraction(-3, 7)};
    for (int trial = 0; trial < 5; ++trial) {
        for (const auto &a : weights) {
            const SymplecticConnectionSpec spec = random_symplectic(rng, a);
            const StarProduct s = truncated_symplectic(spec);
            const DiffOp s2 = paper_S2_symplectic(spec);
            for (std::size_t alpha = 0; alpha < 2; ++alpha) {
                o.require(commutator_with_coordinate(s2, alpha) == slot_fix(s.c[2], alpha, Slot::left),
                          "trial " + std::to_string(trial) + " a=" + a.to_string() + " alpha=" +
                              std::to_string(alpha));
            }
            derive("symplectic trial " + std::to_string(trial) + " a=" + a.to_string(), s, 2);
        }
    }
    return o;
}

Outcome criterion5()
{
    Outcome o;
    std::size_t index = 0;
    for (const auto &F : collected_F) {
        o.require(eta_from_phi(F) == nested_commutator_solution(F), "family " + std::to_string(index));
        ++index;
    }
    o.require(!collected_F.empty(), "no families collected");
    if (o.passed) {
        o.detail = std::to_string(collected_F.size()) + " families";
    }
    return o;
}

const StarProduct &gamma_q_product()
{
    static const StarProduct s = natural_tstar(from_gamma("q1"), 4);
    return s;
}

const EquivalenceMorphism &gamma_q_morphism()
{
    static const EquivalenceMorphism m = derive_equivalence(gamma_q_product(), 4);
    return m;
}

Outcome criterion6()
{
    Outcome o;
    const CheckReport r = verify_intertwining(gamma_q_morphism(), gamma_q_product(), 4);
    o.require(r.passed(), first_failure(r));
    return o;
}

Outcome criterion7()
{
    Outcome o;
    const CheckReport r = verify_symmetrization(gamma_q_morphism(), gamma_q_product(), 4);
    o.require(r.passed(), first_failure(r));
    return o;
}

Outcome criterion8()
{
    Outcome o;
    derive("moyal casimir", moyal(PoissonTensor::canonical(1, 1), 4), 4);
    derive("moyal n=2", moyal(PoissonTensor::canonical(2), 4), 4);
    for (const auto &[name, m] : parity_morphisms) {
        for (std::size_t k = 1; k <= m.order(); k += 2) {
            o.require(m.S[k].is_zero(), name + ": S" + std::to_string(k) + " nonzero");
        }
    }
    if (o.passed) {
        o.detail = std::to_string(parity_morphisms.size()) + " products";
    }
    return o;
}

Outcome criterion9()
{
    Outcome o;
    const auto names = phase_space_names(1);
    const PolySeries bracket =
        star_bracket(gamma_q_product(), parse_poly("q1", names), parse_poly("p1", names));
    o.require(bracket == constant_series(Poly(2, GaussianRational(1)), bracket.order()),
              "natural product: [[q,p]] != 1");
    const CheckReport r = quantum_canonicity_check(moyal(PoissonTensor::canonical(1, 1), 4));
    o.require(r.passed(), "moyal with a Casimir: " + first_failure(r));
    return o;
}

Outcome criterion10()
{
    Outcome o;
    for (std::size_t n = 1; n <= 2; ++n) {
        const StarProduct m = moyal(PoissonTensor::canonical(n), 4);
        o.require(natural_tstar(Connection::flat_zero(n), 4).c == m.c,
                  "natural(0) != moyal for n=" + std::to_string(n));
        o.require(vf_product(VectorFieldFrame::coordinate(2 * n), PoissonTensor::canonical(n), 4).c == m.c,
                  "coordinate frame != moyal for n=" + std::to_string(n));
    }
    for (const auto &[name, c] : table_connections()) {
        const StarProduct sym =
            truncated_symplectic(SymplecticConnectionSpec::from_lifted(lift_connection(c), GaussianRational(0)));
        o.require(sym.c == truncated(natural_tstar(c, 4), 2).c, name + ": truncated symplectic != natural");
    }
    return o;
}

Outcome criterion11()
{
    Outcome o;
    std::vector<NamedConnection> all = table_connections();
    all.push_back({"n=2 zero", Connection::flat_zero(2)});
    all.push_back({"n=2 y2=x2+x1^2", from_diffeo({"q1", "q2 + q1^2"})});
    all.push_back({"n=3 triangular", from_diffeo({"q1", "q2 + q1^2", "q3 + q1*q2"})});
    all.push_back({"n=1 gamma=q^3-2q", from_gamma("q1^3 - 2*q1")});
    for (const auto &[name, c] : all) {
        const LiftedConnection l = lift_connection(c);
        o.require(curvature(l.symbols()).is_zero(), name + ": lifted curvature nonzero");
        o.require(is_totally_symmetric(l.dim(), lower_first_index(l.symbols())),
                  name + ": lowered symbols not totally symmetric");
    }
    if (o.passed) {
        o.detail = std::to_string(all.size()) + " connections";
    }
    return o;
}

} // namespace

int main()
{
    int failures = 0;
    auto run = [&](int number, const char *title, double limit_seconds, const std::function<Outcome()> &body) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = body();
        } catch (const std::exception &e) {
            o.passed = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (seconds > limit_seconds) {
            o.passed = false;
            o.detail += (o.detail.empty() ? "" : "; ") + std::string("time limit exceeded");
        }
        std::printf("%s criterion %d: %s (%.2fs)%s%s\n", o.passed ? "PASS" : "FAIL", number, title, seconds,
                    o.detail.empty() ? "" : " - ", o.detail.c_str());
        std::fflush(stdout);
        failures += o.passed ? 0 : 1;
    };

    run(1, "Moyal product and axioms", 10, criterion1);
    run(2, "S2 table, flat cotangent case", 30, criterion2);
    std::string convention;
    run(3, "S4 table, flat cotangent case", 600, [&] {
        Outcome o = criterion3(convention);
        if (o.passed) {
            o.detail = "convention " + convention;
        }
        return o;
    });
    run(4, "symplectic S2 commutator identity", 60, criterion4);
    run(5, "solver agreement", 60, criterion5);
    run(6, "intertwining", 60, criterion6);
    run(7, "symmetrization", 60, criterion7);
    run(8, "odd orders vanish", 60, criterion8);
    run(9, "quantum canonical coordinates", 60, criterion9);
    run(10, "reductions", 60, criterion10);
    run(11, "lifted connections are flat and symplectic", 60, criterion11);

    std::printf("%d of 11 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
