#include <starq/operators/bidiff_op.hpp>

#include <algorithm>
#include <vector>

#include <starq/error.hpp>

namespace starq
{

BiDiffOp BiDiffOp::pointwise_product(std::size_t dim)
{
    BiDiffOp c(dim);
    c.add_term(MultiIndex(dim), MultiIndex(dim), Poly(dim, GaussianRational(1)));
    return c;
}

BiDiffOp BiDiffOp::tensor(const DiffOp &a, const DiffOp &b)
{
    if (a.dim() != b.dim()) {
        throw dimension_mismatch(a.dim(), b.dim());
    }
    BiDiffOp c(a.dim());
    for (const auto &[i, ca] : a.terms()) {
        for (const auto &[j, cb] : b.terms()) {
            c.add_term(i, j, ca * cb);
        }
    }
    return c;
}

int BiDiffOp::order(Slot slot) const noexcept
{
    int o = -1;
    for (const auto &[k, c] : terms_) {
        const auto &idx = slot == Slot::left ? k.first : k.second;
        o = std::max(o, static_cast<int>(idx.length()));
    }
    return o;
}

Poly BiDiffOp::coefficient(const MultiIndex &left, const MultiIndex &right) const
{
    auto it = terms_.find({left, right});
    return it == terms_.end() ? Poly(dim_) : it->second;
}

void BiDiffOp::check_dim(std::size_t other) const
{
    if (other != dim_) {
        throw dimension_mismatch(dim_, other);
    }
}

void BiDiffOp::add_term(const MultiIndex &left, const MultiIndex &right, const Poly &c)
{
    check_dim(left.dim());
    check_dim(right.dim());
    check_dim(c.dim());
    if (c.is_zero()) {
        return;
    }
    auto it = terms_.find({left, right});
    if (it == terms_.end()) {
        if (left.length() > max_operator_order() || right.length() > max_operator_order()) {
            throw order_limit_exceeded("bidifferential operator exceeds the order limit " +
                                       std::to_string(max_operator_order()));
        }
        terms_.emplace(key{left, right}, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) {
        terms_.erase(it);
    }
}

BiDiffOp &BiDiffOp::operator+=(const BiDiffOp &o)
{
    check_dim(o.dim_);
    for (const auto &[k, c] : o.terms_) {
        add_term(k.first, k.second, c);
    }
    return *this;
}

BiDiffOp &BiDiffOp::operator-=(const BiDiffOp &o)
{
    check_dim(o.dim_);
    for (const auto &[k, c] : o.terms_) {
        add_term(k.first, k.second, -c);
    }
    return *this;
}

BiDiffOp &BiDiffOp::operator*=(const GaussianRational &c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto &[k, coeff] : terms_) {
        coeff *= c;
    }
    return *this;
}

BiDiffOp BiDiffOp::swapped() const
{
    BiDiffOp r(dim_);
    for (const auto &[k, c] : terms_) {
        r.terms_.emplace(key{k.second, k.first}, c);
    }
    return r;
}

bool BiDiffOp::vanishes_on_constants() const noexcept
{
    return std::none_of(terms_.begin(), terms_.end(),
                        [](const auto &t) { return t.first.first.is_zero() || t.first.second.is_zero(); });
}

std::string BiDiffOp::to_string(std::span<const std::string> names) const
{
    if (terms_.empty()) {
        return "0";
    }
    auto derivs = [&](const MultiIndex &m) {
        std::string s;
        for (std::size_t i = 0; i < dim_; ++i) {
            for (unsigned k = 0; k < m[i]; ++k) {
                s += (s.empty() ? "d_" : "*d_") + names[i];
            }
        }
        return s.empty() ? std::string("1") : s;
    };
    std::string s;
    for (const auto &[k, c] : terms_) {
        if (!s.empty()) {
            s += " + ";
        }
        s += "(" + c.to_string(names) + ")*[" + derivs(k.first) + " (x) " + derivs(k.second) + "]";
    }
    return s;
}

Poly bidiff_apply(const BiDiffOp &c, const Poly &f, const Poly &g)
{
    if (c.dim() != f.dim()) {
        throw dimension_mismatch(c.dim(), f.dim());
    }
    if (c.dim() != g.dim()) {
        throw dimension_mismatch(c.dim(), g.dim());
    }
    Poly result(c.dim());
    if (f.is_zero() || g.is_zero()) {
        return result;
    }
    const int fdeg = f.degree();
    const int gdeg = g.degree();
    // Terms share derivative indices heavily; cache them.
    std::map<MultiIndex, Poly> fcache;
    std::map<MultiIndex, Poly> gcache;
    auto cached = [](std::map<MultiIndex, Poly> &cache, const Poly &p, const MultiIndex &i) -> const Poly & {
        auto it = cache.find(i);
        if (it == cache.end()) {
            it = cache.emplace(i, p.diff(i)).first;
        }
        return it->second;
    };
    for (const auto &[k, coeff] : c.terms()) {
        if (static_cast<int>(k.first.length()) > fdeg || static_cast<int>(k.second.length()) > gdeg) {
            continue;
        }
        const Poly &df = cached(fcache, f, k.first);
        if (df.is_zero()) {
            continue;
        }
        const Poly &dg = cached(gcache, g, k.second);
        if (dg.is_zero()) {
            continue;
        }
        result += coeff * (df * dg);
    }
    return result;
}

DiffOp slot_fix(const BiDiffOp &c, std::size_t alpha, Slot side)
{
    if (alpha >= c.dim()) {
        throw invalid_argument("coordinate index out of range");
    }
    const std::size_t d = c.dim();
    const MultiIndex zero(d);
    const MultiIndex unit = MultiIndex::unit(d, alpha);
    const Poly x = Poly::coordinate(d, alpha);
    DiffOp op(d);
    // d_I x^alpha is x^alpha for I = 0, 1 for I = e_alpha, and 0 otherwise.
    for (const auto &[k, coeff] : c.terms()) {
        const MultiIndex &fixed = side == Slot::left ? k.first : k.second;
        const MultiIndex &free = side == Slot::left ? k.second : k.first;
        if (fixed == zero) {
            op.add_term(free, coeff * x);
        } else if (fixed == unit) {
            op.add_term(free, coeff);
        }
    }
    return op;
}

} // namespace starq
