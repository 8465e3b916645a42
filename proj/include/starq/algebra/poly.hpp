#ifndef STARQ_ALGEBRA_POLY_HPP
#define STARQ_ALGEBRA_POLY_HPP

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <starq/algebra/gaussian_rational.hpp>
#include <starq/algebra/multi_index.hpp>

namespace starq
{

/// Multivariate polynomial over the Gaussian rationals in `dim` coordinates.
///
/// Terms are kept sorted in ascending graded-lex order of their monomials with
/// no zero coefficients; the zero polynomial has no terms. Two polynomials are
/// equal iff their term lists are identical.
class Poly
{
public:
    using term = std::pair<MultiIndex, GaussianRational>;

    Poly() = default;
    explicit Poly(std::size_t dim) : dim_(dim) {}
    Poly(std::size_t dim, GaussianRational constant);

    static Poly coordinate(std::size_t dim, std::size_t alpha);
    static Poly monomial(MultiIndex m, GaussianRational c = GaussianRational(1));
    // Sums duplicate monomials and drops zeros.
    static Poly from_terms(std::size_t dim, std::vector<term> terms);

    std::size_t dim() const noexcept { return dim_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    std::size_t size() const noexcept { return terms_.size(); }
    // Total degree; -1 for the zero polynomial.
    int degree() const noexcept;
    // Degree in a single coordinate; -1 for the zero polynomial.
    int degree_in(std::size_t alpha) const noexcept;

    std::span<const term> terms() const noexcept { return terms_; }
    // Coefficient of the given monomial (zero if absent).
    GaussianRational coefficient(const MultiIndex &m) const;
    GaussianRational constant_term() const;

    Poly &operator+=(const Poly &o);
    Poly &operator-=(const Poly &o);
    Poly &operator*=(const Poly &o);
    Poly &operator*=(const GaussianRational &c);

    friend Poly operator+(Poly a, const Poly &b) { return a += b; }
    friend Poly operator-(Poly a, const Poly &b) { return a -= b; }
    friend Poly operator*(const Poly &a, const Poly &b);
    friend Poly operator*(Poly a, const GaussianRational &c) { return a *= c; }
    friend Poly operator*(const GaussianRational &c, Poly a) { return a *= c; }
    Poly operator-() const;

    friend bool operator==(const Poly &a, const Poly &b) = default;

    // Iterated partial derivative d_I.
    Poly diff(const MultiIndex &index) const;
    Poly diff(std::size_t alpha) const;

    Poly pow(unsigned e) const;

    // Substitute values[alpha] for x^alpha. values[i].dim() fixes the result dimension.
    Poly substitute(std::span<const Poly> values) const;
    // Reinterprets this polynomial in `new_dim` >= dim() coordinates; the
    // existing coordinates keep their positions starting at `offset`.
    Poly embed(std::size_t new_dim, std::size_t offset = 0) const;
    // Drops coordinates outside [offset, offset + new_dim); throws if any
    // dropped coordinate occurs.
    Poly restrict(std::size_t new_dim, std::size_t offset = 0) const;

    std::string to_string(std::span<const std::string> names) const;
    std::string to_string() const;

private:
    std::size_t dim_ = 0;
    std::vector<term> terms_;

    void check_dim(const Poly &o) const;
    Poly &merge(const Poly &o, bool subtract);
};

// d = 2n + k phase-space coordinate names: q1..qn, p1..pn, z1..zk.
std::vector<std::string> phase_space_names(std::size_t n, std::size_t casimirs = 0);
// x1..xd.
std::vector<std::string> generic_names(std::size_t dim);

} // namespace starq

#endif
