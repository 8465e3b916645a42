#ifndef STARQ_GEOMETRY_CONNECTION_HPP
#define STARQ_GEOMETRY_CONNECTION_HPP

#include <cstddef>
#include <span>
#include <vector>

#include <starq/algebra/gaussian_rational.hpp>
#include <starq/algebra/poly.hpp>

namespace starq
{

/// Dense Christoffel symbols G^a_{bc} of a linear connection on `dim`
/// coordinates; every component is a polynomial in those same coordinates.
class Christoffel
{
public:
    Christoffel() = default;
    explicit Christoffel(std::size_t dim);

    std::size_t dim() const noexcept { return dim_; }
    const Poly &operator()(std::size_t upper, std::size_t lower1, std::size_t lower2) const
    {
        return g_[(upper * dim_ + lower1) * dim_ + lower2];
    }
    void set(std::size_t upper, std::size_t lower1, std::size_t lower2, Poly value);

    bool is_zero() const noexcept;
    bool is_torsion_free() const;

    friend bool operator==(const Christoffel &a, const Christoffel &b) = default;

private:
    std::size_t dim_ = 0;
    std::vector<Poly> g_;
};

/// Riemann tensor R^r_{s m n}, dense over dim^4 components.
struct RiemannTensor {
    std::size_t dim = 0;
    std::vector<Poly> components;

    const Poly &operator()(std::size_t r, std::size_t s, std::size_t m, std::size_t n) const
    {
        return components[((r * dim + s) * dim + m) * dim + n];
    }
    bool is_zero() const noexcept;
};

/// Symmetric 2-tensor components R_{mn}.
struct RicciTensor {
    std::size_t dim = 0;
    std::vector<Poly> components;

    const Poly &operator()(std::size_t m, std::size_t n) const { return components[m * dim + n]; }
    bool is_zero() const noexcept;
    bool is_symmetric() const;
};

// R^r_{smn} = d_m G^r_{ns} - d_n G^r_{ms} + G^r_{ml} G^l_{ns} - G^r_{nl} G^l_{ms}.
RiemannTensor curvature(const Christoffel &g);

// R_{mn} = R^a_{m a n}.
RicciTensor ricci(const Christoffel &g);

/// Torsion-free linear connection on an n-dimensional base, components in q^1..q^n.
class Connection
{
public:
    Connection() = default;
    // Throws invalid_argument unless symmetric in the lower indices.
    explicit Connection(Christoffel symbols);

    // Zero connection.
    static Connection flat_zero(std::size_t n);
    // n = 1: any polynomial gamma(q) is flat.
    static Connection one_dimensional(const Poly &gamma);

    std::size_t n() const noexcept { return g_.dim(); }
    const Poly &operator()(std::size_t i, std::size_t j, std::size_t k) const { return g_(i, j, k); }
    const Christoffel &symbols() const noexcept { return g_; }

    friend bool operator==(const Connection &a, const Connection &b) = default;

private:
    Christoffel g_;
};

// Connection G^i_{jk} = (dx^i/dy^a) d^2 y^a / dx^j dx^k pulled back through the
// polynomial map y = phi(x). The Jacobian determinant of phi must be a nonzero
// constant (triangular maps with unit leading coefficients, and compositions of
// them), which keeps the inverse Jacobian polynomial. Throws otherwise.
Connection flat_connection_from_diffeo(std::span<const Poly> phi);

/// Symbols G~ of the connection induced on the cotangent bundle (coordinates
/// q^1..q^n, p_1..p_n, barred index i + n).
class LiftedConnection
{
public:
    LiftedConnection() = default;
    explicit LiftedConnection(Christoffel symbols) : g_(std::move(symbols)) {}

    std::size_t n() const noexcept { return g_.dim() / 2; }
    std::size_t dim() const noexcept { return g_.dim(); }
    const Poly &operator()(std::size_t a, std::size_t b, std::size_t c) const { return g_(a, b, c); }
    const Christoffel &symbols() const noexcept { return g_; }

private:
    Christoffel g_;
};

LiftedConnection lift_connection(const Connection &c);

// Integer entries of the canonical Poisson matrix with n conjugate pairs and k
// Casimir directions (row-major, d = 2n + k).
std::vector<int> canonical_poisson_matrix(std::size_t n, std::size_t casimirs = 0);
// omega = P^{-1} for the symplectic block (d = 2n).
std::vector<int> canonical_symplectic_form(std::size_t n);

// G_{abc} = omega_{ad} G^d_{bc}.
std::vector<Poly> lower_first_index(const Christoffel &g);
// G^d_{bc} = P^{da} G_{abc}.
Christoffel raise_first_index(std::size_t dim, std::span<const Poly> lowered);
bool is_totally_symmetric(std::size_t dim, std::span<const Poly> lowered);

/// Symplectic torsion-free connection given by its fully lowered symbols plus
/// the Ricci weight `a` of the truncated product.
class SymplecticConnectionSpec
{
public:
    SymplecticConnectionSpec() = default;
    // Throws invalid_argument unless `lowered` is totally symmetric over (2n)^3 entries.
    SymplecticConnectionSpec(std::size_t n, std::vector<Poly> lowered, GaussianRational a);

    static SymplecticConnectionSpec from_lifted(const LiftedConnection &c, GaussianRational a);

    std::size_t n() const noexcept { return n_; }
    std::size_t dim() const noexcept { return 2 * n_; }
    const GaussianRational &a() const noexcept { return a_; }
    const Poly &lowered(std::size_t a, std::size_t b, std::size_t c) const
    {
        return lowered_[(a * dim() + b) * dim() + c];
    }
    std::span<const Poly> lowered() const noexcept { return lowered_; }
    const Christoffel &raised() const noexcept { return raised_; }

private:
    std::size_t n_ = 0;
    std::vector<Poly> lowered_;
    Christoffel raised_;
    GaussianRational a_;
};

RicciTensor ricci(const SymplecticConnectionSpec &spec);

} // namespace starq

#endif
