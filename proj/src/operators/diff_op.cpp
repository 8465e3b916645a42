#include <starq/operators/diff_op.hpp>

#include <atomic>
#include <cstdlib>
#include <string>

#include <starq/error.hpp>

namespace starq
{

namespace
{

constexpr unsigned default_max_order = 12;

unsigned order_from_env()
{
    if (const char *env = std::getenv("STARQ_MAX_OP_ORDER")) {
        try {
            const unsigned long v = std::stoul(env);
            if (v > 0 && v < 256) {
                return static_cast<unsigned>(v);
            }
        } catch (const std::exception &) {
        }
    }
    return default_max_order;
}

std::atomic<unsigned> &order_limit()
{
    static std::atomic<unsigned> limit{order_from_env()};
    return limit;
}

} // namespace

unsigned max_operator_order()
{
    return order_limit().load(std::memory_order_relaxed);
}

void set_max_operator_order(unsigned order)
{
    order_limit().store(order, std::memory_order_relaxed);
}

DiffOp DiffOp::identity(std::size_t dim)
{
    DiffOp op(dim);
    op.terms_.emplace(MultiIndex(dim), Poly(dim, GaussianRational(1)));
    return op;
}

DiffOp DiffOp::derivative(const MultiIndex &index)
{
    DiffOp op(index.dim());
    op.check_order(index);
    op.terms_.emplace(index, Poly(index.dim(), GaussianRational(1)));
    return op;
}

DiffOp DiffOp::multiplication(const Poly &f)
{
    DiffOp op(f.dim());
    if (!f.is_zero()) {
        op.terms_.emplace(MultiIndex(f.dim()), f);
    }
    return op;
}

int DiffOp::order() const noexcept
{
    // Graded order puts the longest index last.
    return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.length());
}

Poly DiffOp::coefficient(const MultiIndex &index) const
{
    auto it = terms_.find(index);
    return it == terms_.end() ? Poly(dim_) : it->second;
}

void DiffOp::check_dim(std::size_t other) const
{
    if (other != dim_) {
        throw dimension_mismatch(dim_, other);
    }
}

void DiffOp::check_order(const MultiIndex &index) const
{
    if (index.length() > max_operator_order()) {
        throw order_limit_exceeded("differential operator of order " + std::to_string(index.length()) +
                                   " exceeds the limit " + std::to_string(max_operator_order()));
    }
}

void DiffOp::add_term(const MultiIndex &index, const Poly &c)
{
    check_dim(index.dim());
    check_dim(c.dim());
    if (c.is_zero()) {
        return;
    }
    auto it = terms_.find(index);
    if (it == terms_.end()) {
        check_order(index);
        terms_.emplace(index, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) {
        terms_.erase(it);
    }
}

DiffOp &DiffOp::operator+=(const DiffOp &o)
{
    check_dim(o.dim_);
    for (const auto &[index, c] : o.terms_) {
        add_term(index, c);
    }
    return *this;
}

DiffOp &DiffOp::operator-=(const DiffOp &o)
{
    check_dim(o.dim_);
    for (const auto &[index, c] : o.terms_) {
        add_term(index, -c);
    }
    return *this;
}

DiffOp &DiffOp::operator*=(const GaussianRational &c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto &[index, coeff] : terms_) {
        coeff *= c;
    }
    return *this;
}

DiffOp DiffOp::operator-() const
{
    DiffOp r(*this);
    r *= GaussianRational(-1);
    return r;
}

DiffOp DiffOp::left_multiplied(const Poly &f) const
{
    check_dim(f.dim());
    DiffOp r(dim_);
    if (f.is_zero()) {
        return r;
    }
    for (const auto &[index, c] : terms_) {
        r.add_term(index, f * c);
    }
    return r;
}

DiffOp DiffOp::right_derivative(const MultiIndex &index) const
{
    check_dim(index.dim());
    DiffOp r(dim_);
    for (const auto &[k, c] : terms_) {
        r.add_term(k + index, c);
    }
    return r;
}

std::string DiffOp::to_string(std::span<const std::string> names) const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string s;
    for (const auto &[index, c] : terms_) {
        if (!s.empty()) {
            s += " + ";
        }
        s += "(" + c.to_string(names) + ")";
        for (std::size_t i = 0; i < dim_; ++i) {
            for (unsigned k = 0; k < index[i]; ++k) {
                s += "*d_" + names[i];
            }
        }
    }
    return s;
}

Poly apply(const DiffOp &op, const Poly &f)
{
    if (op.dim() != f.dim()) {
        throw dimension_mismatch(op.dim(), f.dim());
    }
    Poly result(f.dim());
    for (const auto &[index, c] : op.terms()) {
        const Poly df = f.diff(index);
        if (!df.is_zero()) {
            result += c * df;
        }
    }
    return result;
}

PolySeries apply(const DiffOp &op, const PolySeries &f)
{
    std::vector<Poly> out;
    out.reserve(f.order() + 1);
    for (const auto &c : f.coefficients()) {
        out.push_back(apply(op, c));
    }
    return PolySeries(std::move(out));
}

DiffOp compose(const DiffOp &a, const DiffOp &b)
{
    if (a.dim() != b.dim()) {
        throw dimension_mismatch(a.dim(), b.dim());
    }
    DiffOp r(a.dim());
    // (a_I d_I) o (b_J d_J) = a_I sum_{K <= I} binom(I, K) (d_K b_J) d_{I - K + J}
    for (const auto &[i_index, ac] : a.terms()) {
        const auto subs = divisors(i_index);
        for (const auto &[j_index, bc] : b.terms()) {
            const int bdeg = bc.degree();
            for (const auto &k : subs) {
                if (static_cast<int>(k.length()) > bdeg) {
                    break;
                }
                Poly dk = bc.diff(k);
                if (dk.is_zero()) {
                    continue;
                }
                dk *= GaussianRational(static_cast<long>(multi_binomial(i_index, k)));
                r.add_term(i_index - k + j_index, ac * dk);
            }
        }
    }
    return r;
}

DiffOp commutator(const DiffOp &a, const DiffOp &b)
{
    return compose(a, b) - compose(b, a);
}

DiffOp commutator_with_coordinate(const DiffOp &op, std::size_t alpha)
{
    if (alpha >= op.dim()) {
        throw invalid_argument("coordinate index out of range");
    }
    // d_I o x^alpha = x^alpha d_I + I_alpha d_{I - e_alpha}
    DiffOp r(op.dim());
    for (const auto &[index, c] : op.terms()) {
        if (index[alpha] == 0) {
            continue;
        }
        r.add_term(index.decremented(alpha), c * GaussianRational(static_cast<long>(index[alpha])));
    }
    return r;
}

bool op_equal(const DiffOp &a, const DiffOp &b)
{
    if (a.dim() != b.dim()) {
        throw dimension_mismatch(a.dim(), b.dim());
    }
    return a == b;
}

std::vector<TermDifference> term_differences(const DiffOp &a, const DiffOp &b)
{
    std::vector<TermDifference> out;
    auto ia = a.terms().begin();
    auto ib = b.terms().begin();
    const Poly zero(a.dim());
    while (ia != a.terms().end() || ib != b.terms().end()) {
        if (ib == b.terms().end() || (ia != a.terms().end() && ia->first < ib->first)) {
            out.push_back({ia->first, ia->second, zero});
            ++ia;
        } else if (ia == a.terms().end() || ib->first < ia->first) {
            out.push_back({ib->first, zero, ib->second});
            ++ib;
        } else {
            if (!(ia->second == ib->second)) {
                out.push_back({ia->first, ia->second, ib->second});
            }
            ++ia;
            ++ib;
        }
    }
    return out;
}

} // namespace starq
