#include <starq/algebra/multi_index.hpp>

#include <algorithm>
#include <limits>

#include <starq/error.hpp>

namespace starq
{

namespace
{

void check_dim(std::size_t dim)
{
    if (dim > max_dim) {
        throw invalid_argument("dimension " + std::to_string(dim) + " exceeds maximum " + std::to_string(max_dim));
    }
}

MultiIndex::value_type narrow(unsigned v)
{
    if (v > std::numeric_limits<MultiIndex::value_type>::max()) {
        throw invalid_argument("exponent overflow");
    }
    return static_cast<MultiIndex::value_type>(v);
}

} // namespace

MultiIndex::MultiIndex(std::size_t dim) : dim_(static_cast<std::uint8_t>(dim))
{
    check_dim(dim);
}

MultiIndex::MultiIndex(std::size_t dim, std::initializer_list<unsigned> exponents)
    : MultiIndex(dim, std::span<const unsigned>(exponents.begin(), exponents.size()))
{
}

MultiIndex::MultiIndex(std::size_t dim, std::span<const unsigned> exponents) : MultiIndex(dim)
{
    if (exponents.size() != dim) {
        throw dimension_mismatch(exponents.size(), dim);
    }
    for (std::size_t i = 0; i < dim; ++i) {
        set(i, exponents[i]);
    }
}

MultiIndex MultiIndex::unit(std::size_t dim, std::size_t alpha)
{
    MultiIndex m(dim);
    if (alpha >= dim) {
        throw invalid_argument("coordinate index out of range");
    }
    m.set(alpha, 1);
    return m;
}

MultiIndex MultiIndex::from_indices(std::size_t dim, std::span<const std::size_t> indices)
{
    MultiIndex m(dim);
    for (auto a : indices) {
        if (a >= dim) {
            throw invalid_argument("coordinate index out of range");
        }
        m.set(a, m[a] + 1);
    }
    return m;
}

void MultiIndex::set(std::size_t i, unsigned value)
{
    const value_type v = narrow(value);
    length_ = static_cast<std::uint16_t>(length_ - exps_[i] + v);
    exps_[i] = v;
}

MultiIndex MultiIndex::operator+(const MultiIndex &o) const
{
    if (dim_ != o.dim_) {
        throw dimension_mismatch(dim_, o.dim_);
    }
    MultiIndex r(*this);
    for (std::size_t i = 0; i < dim_; ++i) {
        r.exps_[i] = narrow(unsigned(exps_[i]) + o.exps_[i]);
    }
    r.length_ = static_cast<std::uint16_t>(length_ + o.length_);
    return r;
}

MultiIndex MultiIndex::operator-(const MultiIndex &o) const
{
    MultiIndex r(*this);
    for (std::size_t i = 0; i < dim_; ++i) {
        r.exps_[i] = static_cast<value_type>(exps_[i] - o.exps_[i]);
    }
    r.length_ = static_cast<std::uint16_t>(length_ - o.length_);
    return r;
}

bool MultiIndex::divides(const MultiIndex &o) const noexcept
{
    for (std::size_t i = 0; i < dim_; ++i) {
        if (exps_[i] > o.exps_[i]) {
            return false;
        }
    }
    return true;
}

MultiIndex MultiIndex::incremented(std::size_t i) const
{
    MultiIndex r(*this);
    r.set(i, exps_[i] + 1u);
    return r;
}

MultiIndex MultiIndex::decremented(std::size_t i) const
{
    MultiIndex r(*this);
    r.set(i, exps_[i] - 1u);
    return r;
}

std::vector<std::size_t> MultiIndex::to_indices() const
{
    std::vector<std::size_t> out;
    out.reserve(length_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (unsigned k = 0; k < exps_[i]; ++k) {
            out.push_back(i);
        }
    }
    return out;
}

std::vector<unsigned> MultiIndex::to_vector() const
{
    return std::vector<unsigned>(exps_.begin(), exps_.begin() + dim_);
}

std::strong_ordering operator<=>(const MultiIndex &a, const MultiIndex &b) noexcept
{
    if (auto c = a.length_ <=> b.length_; c != 0) {
        return c;
    }
    if (auto c = a.dim_ <=> b.dim_; c != 0) {
        return c;
    }
    // Among equal degree, the monomial with the larger leading exponent sorts last.
    for (std::size_t i = 0; i < a.dim_; ++i) {
        if (a.exps_[i] != b.exps_[i]) {
            return b.exps_[i] <=> a.exps_[i];
        }
    }
    return std::strong_ordering::equal;
}

std::string MultiIndex::to_string() const
{
    std::string s = "(";
    for (std::size_t i = 0; i < dim_; ++i) {
        if (i != 0) {
            s += ",";
        }
        s += std::to_string(exps_[i]);
    }
    return s + ")";
}

unsigned long multi_binomial(const MultiIndex &top, const MultiIndex &bottom)
{
    unsigned long r = 1;
    for (std::size_t i = 0; i < top.dim(); ++i) {
        const unsigned n = top[i];
        const unsigned k = bottom[i];
        unsigned long c = 1;
        for (unsigned j = 1; j <= k; ++j) {
            c = c * (n - k + j) / j;
        }
        r *= c;
    }
    return r;
}

unsigned long falling_factorial(const MultiIndex &top, const MultiIndex &bottom)
{
    unsigned long r = 1;
    for (std::size_t i = 0; i < top.dim(); ++i) {
        for (unsigned j = 0; j < bottom[i]; ++j) {
            r *= top[i] - j;
        }
    }
    return r;
}

std::vector<MultiIndex> divisors(const MultiIndex &index)
{
    std::vector<MultiIndex> out;
    MultiIndex k(index.dim());
    while (true) {
        out.push_back(k);
        std::size_t i = 0;
        for (; i < index.dim(); ++i) {
            if (k[i] < index[i]) {
                k.set(i, k[i] + 1u);
                break;
            }
            k.set(i, 0);
        }
        if (i == index.dim()) {
            break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<MultiIndex> all_multi_indices(std::size_t dim, unsigned max_length)
{
    std::vector<MultiIndex> out;
    std::vector<unsigned> e(dim, 0);
    // Odometer over the box [0, max_length]^dim, filtered by length.
    while (true) {
        unsigned len = 0;
        for (auto v : e) {
            len += v;
        }
        if (len <= max_length) {
            out.emplace_back(dim, std::span<const unsigned>(e));
        }
        std::size_t i = 0;
        for (; i < dim; ++i) {
            if (++e[i] <= max_length) {
                break;
            }
            e[i] = 0;
        }
        if (i == dim) {
            break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace starq
