#include <starq/equivalence/tables.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <string_view>
#include <tuple>

#include <starq/error.hpp>

namespace starq
{

std::string to_string(CyclicConvention c)
{
    return c == CyclicConvention::cyclic ? "cyclic" : "full-symmetrization";
}

namespace
{

// Index pattern language for the tables. A factor "ab c,de" reads
// G^a_{bc,de}: upper index, two lower indices, then optional derivative
// indices after the comma. Digits 1..6 are the contracted momentum-derivative
// slots j1..j6; i, a, b are free q-derivative indices; r, s are free momentum
// multipliers; k, l, m, n are summed.
struct Factor {
    char up;
    char lo1;
    char lo2;
    std::string derivs;
};

struct Term {
    long coeff;
    std::vector<Factor> factors;
    std::string dummies;
};

Term make_term(long coeff, std::string_view text)
{
    Term t{coeff, {}, {}};
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find(' ', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        const std::string_view f = text.substr(pos, end - pos);
        Factor fac{f[0], f[1], f[2], {}};
        if (f.size() > 3) {
            fac.derivs = std::string(f.substr(4));
        }
        for (char ch : std::string(f)) {
            if (std::string_view("klmn").find(ch) != std::string_view::npos && t.dummies.find(ch) == std::string::npos) {
                t.dummies += ch;
            }
        }
        t.factors.push_back(std::move(fac));
        pos = end + 1;
    }
    return t;
}

struct Block {
    mpq_class prefactor;
    std::size_t slots;  // number of momentum-derivative indices j
    std::string uppers; // free indices other than j
    bool cyclic_sum;    // carries "+ cycl(j1..jr)"
    std::vector<Term> terms;
};

class Evaluator
{
public:
    explicit Evaluator(const Connection &c) : c_(c), n_(c.n()) {}

    const Poly &gamma(std::size_t up, std::size_t lo1, std::size_t lo2, const MultiIndex &derivs)
    {
        auto key = std::make_tuple(up, lo1, lo2, derivs);
        auto it = cache_.find(key);
        if (it == cache_.end()) {
            it = cache_.emplace(key, c_(up, lo1, lo2).diff(derivs)).first;
        }
        return it->second;
    }

    // Sum over all dummy assignments of the term's factor product.
    Poly evaluate(const Term &t, std::array<int, 128> &binding)
    {
        Poly out(n_);
        sum_dummies(t, binding, 0, out);
        return out * GaussianRational(t.coeff);
    }

private:
    const Connection &c_;
    std::size_t n_;
    std::map<std::tuple<std::size_t, std::size_t, std::size_t, MultiIndex>, Poly> cache_;

    void sum_dummies(const Term &t, std::array<int, 128> &binding, std::size_t depth, Poly &out)
    {
        if (depth == t.dummies.size()) {
            Poly prod(n_, GaussianRational(1));
            for (const auto &f : t.factors) {
                MultiIndex dv(n_);
                for (char ch : f.derivs) {
                    dv = dv.incremented(static_cast<std::size_t>(binding[static_cast<unsigned char>(ch)]));
                }
                const Poly &g = gamma(static_cast<std::size_t>(binding[static_cast<unsigned char>(f.up)]),
                                      static_cast<std::size_t>(binding[static_cast<unsigned char>(f.lo1)]),
                                      static_cast<std::size_t>(binding[static_cast<unsigned char>(f.lo2)]), dv);
                if (g.is_zero()) {
                    return;
                }
                prod = prod * g;
            }
            out += prod;
            return;
        }
        const auto ch = static_cast<unsigned char>(t.dummies[depth]);
        for (std::size_t v = 0; v < n_; ++v) {
            binding[ch] = static_cast<int>(v);
            sum_dummies(t, binding, depth + 1, out);
        }
        binding[ch] = -1;
    }
};

std::vector<std::vector<std::size_t>> tuples(std::size_t n, std::size_t length)
{
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> t(length, 0);
    while (true) {
        out.push_back(t);
        std::size_t i = length;
        while (i > 0) {
            --i;
            if (++t[i] < n) {
                break;
            }
            t[i] = 0;
            if (i == 0) {
                return out;
            }
        }
        if (length == 0) {
            return out;
        }
    }
}

std::size_t tuple_offset(std::span<const std::size_t> t, std::size_t n)
{
    std::size_t o = 0;
    for (std::size_t v : t) {
        o = o * n + v;
    }
    return o;
}

// Accumulates prefactor * sum_{uppers, j} [cycl-expanded T] * (monomial) d_... into op.
void add_block(DiffOp &op, const Block &b, Evaluator &ev, std::size_t n, CyclicConvention convention)
{
    const std::size_t d = 2 * n;
    const auto upper_values = tuples(n, b.uppers.size());
    const auto slot_values = tuples(n, b.slots);
    for (const auto &u : upper_values) {
        std::array<int, 128> binding;
        binding.fill(-1);
        for (std::size_t x = 0; x < b.uppers.size(); ++x) {
            binding[static_cast<unsigned char>(b.uppers[x])] = static_cast<int>(u[x]);
        }
        // Listed tensor at every j tuple.
        std::vector<Poly> listed;
        listed.reserve(slot_values.size());
        for (const auto &j : slot_values) {
            for (std::size_t x = 0; x < b.slots; ++x) {
                binding[static_cast<unsigned char>('1' + x)] = static_cast<int>(j[x]);
            }
            Poly v(n);
            for (const auto &t : b.terms) {
                v += ev.evaluate(t, binding);
            }
            listed.push_back(std::move(v));
        }
        // Multiplier: p_r p_s ..., and q-derivatives from i, a, b.
        Poly mult(d, GaussianRational(1));
        MultiIndex qd(d);
        for (std::size_t x = 0; x < b.uppers.size(); ++x) {
            const char ch = b.uppers[x];
            if (ch == 'r' || ch == 's') {
                mult = mult * Poly::coordinate(d, n + u[x]);
            } else {
                qd = qd.incremented(u[x]);
            }
        }
        for (const auto &j : slot_values) {
            Poly coeff(n);
            if (!b.cyclic_sum) {
                coeff = listed[tuple_offset(j, n)];
            } else if (convention == CyclicConvention::cyclic) {
                std::vector<std::size_t> shifted(j);
                for (std::size_t s = 0; s < b.slots; ++s) {
                    coeff += listed[tuple_offset(shifted, n)];
                    std::rotate(shifted.begin(), shifted.begin() + 1, shifted.end());
                }
            } else {
                std::vector<std::size_t> order(b.slots);
                std::iota(order.begin(), order.end(), std::size_t{0});
                std::vector<std::size_t> permuted(b.slots);
                do {
                    for (std::size_t x = 0; x < b.slots; ++x) {
                        permuted[x] = j[order[x]];
                    }
                    coeff += listed[tuple_offset(permuted, n)];
                } while (std::next_permutation(order.begin(), order.end()));
            }
            if (coeff.is_zero()) {
                continue;
            }
            MultiIndex index = qd;
            for (std::size_t v : j) {
                index = index.incremented(n + v);
            }
            op.add_term(index, coeff.embed(d) * mult * GaussianRational(b.prefactor));
        }
    }
}

Block block(mpq_class prefactor, std::size_t slots, std::string uppers, bool cyclic,
            std::initializer_list<std::pair<long, std::string_view>> terms)
{
    Block b{std::move(prefactor), slots, std::move(uppers), cyclic, {}};
    b.prefactor.canonicalize();
    for (const auto &[c, text] : terms) {
        b.terms.push_back(make_term(c, text));
    }
    return b;
}

const std::vector<Block> &s2_blocks()
{
    static const std::vector<Block> blocks = {
        block(mpq_class(1, 8), 2, "i", false, {{1, "i12"}}),
        block(mpq_class(1, 8), 2, "", false, {{1, "kl1 lk2"}}),
        block(mpq_class(1, 24), 3, "r", false, {{2, "rn3 n12"}, {-1, "r12,3"}}),
    };
    return blocks;
}

const std::vector<Block> &s4_blocks()
{
    static const std::vector<Block> blocks = {
        block(mpq_class(1, 384 * 24), 4, "", true,
              {{-3, "k1l l23,4k"},
               {-1, "k1l lk2,34"},
               {-1, "kn1 l23 nkl,4"},
               {-3, "kln lk1 n23,4"},
               {3, "kn1 lk2 nl3,4"},
               {3, "kn1 lk2 n34,l"},
               {3, "kn1 l23 nl4,k"},
               {7, "kn1 l23 nk4,l"},
               {3, "kn1 lm2 nkl m34"},
               {3, "kl1 lk2 nm3 mn4"},
               {-1, "kn1 lk2 nm3 ml4"}}),
        block(mpq_class(1, 384 * 24), 4, "i", true,
              {{-1, "i12,34"},
               {4, "k12 i34,k"},
               {1, "k12 ik3,4"},
               {-2, "ik1 k23,4"},
               {6, "kl1 lk2 i34"},
               {1, "kl1 l23 ik4"},
               {1, "k12 l34 ikl"}}),
        block(mpq_class(1, 128 * 24), 4, "ab", true, {{1, "a12 b34"}}),
        block(mpq_class(1, 1920 * 120), 5, "r", true,
              {{1, "r12,345"},
               {-7, "k12 r34,5k"},
               {-2, "k12 rk3,45"},
               {-2, "rk1 k23,45"},
               {2, "rk1,2 k34,5"},
               {1, "r12,k k34,5"},
               {-8, "rk1 kl2 l34,5"},
               {-6, "rkl k12 l34,5"},
               {10, "rl1 k23 l45,k"},
               {4, "rl1 k23 lk4,5"},
               {-10, "kl1 lk2 r34,5"},
               {-2, "kl1 l23 r45,k"},
               {-2, "k12 l34 rkl,5"},
               {10, "k12 l34 rk5,l"},
               {20, "rk1 k23 ln4 nl5"},
               {8, "rkn k12 l34 nl5"},
               {8, "rk1 kn2 l34 nl5"}}),
        block(mpq_class(1, 192 * 120), 5, "ri", true, {{-1, "i12 r34,5"}, {2, "rk1 k23 i45"}}),
        block(mpq_class(1, 1152 * 720), 6, "rs", true,
              {{1, "r12,3 s45,6"}, {-4, "rk1 k23 s45,6"}, {4, "rk1 sl2 k34 l56"}}),
    };
    return blocks;
}

DiffOp assemble(const Connection &c, const std::vector<Block> &blocks, CyclicConvention convention)
{
    const std::size_t n = c.n();
    if (!curvature(c.symbols()).is_zero()) {
        throw invalid_argument("closed-form tables need a flat connection");
    }
    Evaluator ev(c);
    DiffOp op(2 * n);
    for (const auto &b : blocks) {
        add_block(op, b, ev, n, convention);
    }
    return op;
}

} // namespace

DiffOp paper_S2_flat(const Connection &c)
{
    return assemble(c, s2_blocks(), CyclicConvention::cyclic);
}

DiffOp paper_S4_flat(const Connection &c, CyclicConvention convention)
{
    return assemble(c, s4_blocks(), convention);
}

DiffOp paper_S2_symplectic(const SymplecticConnectionSpec &spec)
{
    const std::size_t d = spec.dim();
    const auto p = canonical_poisson_matrix(spec.n());
    const Christoffel &up = spec.raised();
    const RicciTensor ric = ricci(spec);
    // d^a = sum_b P^{ab} d_b; canonical P has one nonzero entry per row.
    std::vector<std::pair<std::size_t, int>> raised(d);
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
            if (p[a * d + b] != 0) {
                raised[a] = {b, p[a * d + b]};
            }
        }
    }
    DiffOp op(d);
    const GaussianRational w3(mpq_class(-1, 24));
    const GaussianRational w2(mpq_class(1, 16));
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
            const int sab = raised[a].second * raised[b].second;
            const MultiIndex ab = MultiIndex::unit(d, raised[a].first).incremented(raised[b].first);
            for (std::size_t c = 0; c < d; ++c) {
                const Poly &g = spec.lowered(a, b, c);
                if (!g.is_zero()) {
                    op.add_term(ab.incremented(raised[c].first), g * (w3 * GaussianRational(sab * raised[c].second)));
                }
            }
            Poly quad = ric(a, b) * spec.a();
            for (std::size_t m = 0; m < d; ++m) {
                for (std::size_t v = 0; v < d; ++v) {
                    quad += up(m, v, a) * up(v, m, b);
                }
            }
            if (!quad.is_zero()) {
                op.add_term(ab, quad * (w2 * GaussianRational(sab)));
            }
        }
    }
    return op;
}

TableComparison compare_operators(const DiffOp &closed_form, const DiffOp &derived)
{
    TableComparison r;
    r.match = op_equal(closed_form, derived);
    if (!r.match) {
        r.differences = term_differences(closed_form, derived);
    }
    return r;
}

} // namespace starq
