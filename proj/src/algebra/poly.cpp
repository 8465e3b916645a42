#include <starq/algebra/poly.hpp>

#include <algorithm>

#include <starq/error.hpp>

namespace starq
{

Poly::Poly(std::size_t dim, GaussianRational constant) : dim_(dim)
{
    if (!constant.is_zero()) {
        terms_.emplace_back(MultiIndex(dim), std::move(constant));
    }
}

Poly Poly::coordinate(std::size_t dim, std::size_t alpha)
{
    return monomial(MultiIndex::unit(dim, alpha));
}

Poly Poly::monomial(MultiIndex m, GaussianRational c)
{
    Poly p(m.dim());
    if (!c.is_zero()) {
        p.terms_.emplace_back(std::move(m), std::move(c));
    }
    return p;
}

Poly Poly::from_terms(std::size_t dim, std::vector<term> terms)
{
    std::sort(terms.begin(), terms.end(), [](const term &a, const term &b) { return a.first < b.first; });
    Poly p(dim);
    for (auto &t : terms) {
        if (t.first.dim() != dim) {
            throw dimension_mismatch(t.first.dim(), dim);
        }
        if (!p.terms_.empty() && p.terms_.back().first == t.first) {
            p.terms_.back().second += t.second;
            if (p.terms_.back().second.is_zero()) {
                p.terms_.pop_back();
            }
        } else if (!t.second.is_zero()) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

bool Poly::is_constant() const noexcept
{
    return terms_.empty() || (terms_.size() == 1 && terms_.front().first.is_zero());
}

int Poly::degree() const noexcept
{
    return terms_.empty() ? -1 : static_cast<int>(terms_.back().first.length());
}

int Poly::degree_in(std::size_t alpha) const noexcept
{
    int d = -1;
    for (const auto &t : terms_) {
        d = std::max(d, static_cast<int>(t.first[alpha]));
    }
    return d;
}

GaussianRational Poly::coefficient(const MultiIndex &m) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const term &t, const MultiIndex &key) { return t.first < key; });
    if (it != terms_.end() && it->first == m) {
        return it->second;
    }
    return {};
}

GaussianRational Poly::constant_term() const
{
    if (!terms_.empty() && terms_.front().first.is_zero()) {
        return terms_.front().second;
    }
    return {};
}

void Poly::check_dim(const Poly &o) const
{
    if (dim_ != o.dim_) {
        throw dimension_mismatch(dim_, o.dim_);
    }
}

Poly &Poly::merge(const Poly &o, bool subtract)
{
    check_dim(o);
    if (o.terms_.empty()) {
        return *this;
    }
    std::vector<term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
            out.push_back(std::move(*a++));
        } else if (a == terms_.end() || b->first < a->first) {
            out.emplace_back(b->first, subtract ? -b->second : b->second);
            ++b;
        } else {
            if (subtract) {
                a->second -= b->second;
            } else {
                a->second += b->second;
            }
            if (!a->second.is_zero()) {
                out.push_back(std::move(*a));
            }
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
    return *this;
}

Poly &Poly::operator+=(const Poly &o)
{
    return merge(o, false);
}

Poly &Poly::operator-=(const Poly &o)
{
    return merge(o, true);
}

Poly operator*(const Poly &a, const Poly &b)
{
    a.check_dim(b);
    if (a.terms_.empty() || b.terms_.empty()) {
        return Poly(a.dim_);
    }
    std::vector<Poly::term> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto &[ma, ca] : a.terms_) {
        for (const auto &[mb, cb] : b.terms_) {
            prod.emplace_back(ma + mb, ca * cb);
        }
    }
    return Poly::from_terms(a.dim_, std::move(prod));
}

Poly &Poly::operator*=(const Poly &o)
{
    *this = *this * o;
    return *this;
}

Poly &Poly::operator*=(const GaussianRational &c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto &t : terms_) {
        t.second *= c;
    }
    return *this;
}

Poly Poly::operator-() const
{
    Poly r(*this);
    for (auto &t : r.terms_) {
        t.second = -t.second;
    }
    return r;
}

Poly Poly::diff(const MultiIndex &index) const
{
    if (index.dim() != dim_) {
        throw dimension_mismatch(index.dim(), dim_);
    }
    if (index.is_zero()) {
        return *this;
    }
    std::vector<term> out;
    for (const auto &[m, c] : terms_) {
        if (!index.divides(m)) {
            continue;
        }
        out.emplace_back(m - index, c * GaussianRational(static_cast<long>(falling_factorial(m, index))));
    }
    // Differentiation by a fixed index is injective on surviving monomials,
    // but it does not preserve graded order across different degrees.
    return from_terms(dim_, std::move(out));
}

Poly Poly::diff(std::size_t alpha) const
{
    return diff(MultiIndex::unit(dim_, alpha));
}

Poly Poly::pow(unsigned e) const
{
    Poly r(dim_, GaussianRational(1));
    for (unsigned k = 0; k < e; ++k) {
        r *= *this;
    }
    return r;
}

Poly Poly::substitute(std::span<const Poly> values) const
{
    if (values.size() != dim_) {
        throw dimension_mismatch(values.size(), dim_);
    }
    const std::size_t out_dim = values.empty() ? 0 : values.front().dim();
    Poly result(out_dim);
    for (const auto &[m, c] : terms_) {
        Poly t(out_dim, c);
        for (std::size_t i = 0; i < dim_; ++i) {
            if (m[i] != 0) {
                t *= values[i].pow(m[i]);
            }
        }
        result += t;
    }
    return result;
}

Poly Poly::embed(std::size_t new_dim, std::size_t offset) const
{
    if (offset + dim_ > new_dim) {
        throw invalid_argument("embedding does not fit target dimension");
    }
    Poly r(new_dim);
    r.terms_.reserve(terms_.size());
    for (const auto &[m, c] : terms_) {
        MultiIndex e(new_dim);
        for (std::size_t i = 0; i < dim_; ++i) {
            e.set(offset + i, m[i]);
        }
        r.terms_.emplace_back(std::move(e), c);
    }
    std::sort(r.terms_.begin(), r.terms_.end(), [](const term &a, const term &b) { return a.first < b.first; });
    return r;
}

Poly Poly::restrict(std::size_t new_dim, std::size_t offset) const
{
    if (offset + new_dim > dim_) {
        throw invalid_argument("restriction does not fit source dimension");
    }
    std::vector<term> out;
    for (const auto &[m, c] : terms_) {
        MultiIndex e(new_dim);
        for (std::size_t i = 0; i < dim_; ++i) {
            if (i >= offset && i < offset + new_dim) {
                e.set(i - offset, m[i]);
            } else if (m[i] != 0) {
                throw invalid_argument("polynomial depends on a dropped coordinate");
            }
        }
        out.emplace_back(std::move(e), c);
    }
    return from_terms(new_dim, std::move(out));
}

namespace
{

std::string monomial_string(const MultiIndex &m, std::span<const std::string> names)
{
    std::string s;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        if (m[i] == 0) {
            continue;
        }
        if (!s.empty()) {
            s += "*";
        }
        s += names[i];
        if (m[i] > 1) {
            s += "^" + std::to_string(m[i]);
        }
    }
    return s;
}

} // namespace

std::string Poly::to_string(std::span<const std::string> names) const
{
    if (names.size() < dim_) {
        throw invalid_argument("not enough coordinate names");
    }
    if (terms_.empty()) {
        return "0";
    }
    std::string s;
    // Highest degree first reads naturally.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto &[m, c] = *it;
        const std::string mono = monomial_string(m, names);
        std::string coeff = c.to_string();
        const bool compound = !c.is_real() && sgn(c.re()) != 0;
        if (compound) {
            coeff = "(" + coeff + ")";
        }
        std::string piece;
        if (mono.empty()) {
            piece = coeff;
        } else if (c.is_one()) {
            piece = mono;
        } else if (c == GaussianRational(-1)) {
            piece = "-" + mono;
        } else {
            piece = coeff + "*" + mono;
        }
        if (s.empty()) {
            s = piece;
        } else if (piece.front() == '-') {
            s += " - " + piece.substr(1);
        } else {
            s += " + " + piece;
        }
    }
    return s;
}

std::string Poly::to_string() const
{
    return to_string(generic_names(dim_));
}

std::vector<std::string> phase_space_names(std::size_t n, std::size_t casimirs)
{
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) {
        names.push_back("q" + std::to_string(i));
    }
    for (std::size_t i = 1; i <= n; ++i) {
        names.push_back("p" + std::to_string(i));
    }
    for (std::size_t i = 1; i <= casimirs; ++i) {
        names.push_back("z" + std::to_string(i));
    }
    return names;
}

std::vector<std::string> generic_names(std::size_t dim)
{
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= dim; ++i) {
        names.push_back("x" + std::to_string(i));
    }
    return names;
}

} // namespace starq
