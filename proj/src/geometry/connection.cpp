#include <starq/geometry/connection.hpp>

#include <algorithm>

#include <starq/error.hpp>

namespace starq
{

Christoffel::Christoffel(std::size_t dim) : dim_(dim), g_(dim * dim * dim, Poly(dim)) {}

void Christoffel::set(std::size_t upper, std::size_t lower1, std::size_t lower2, Poly value)
{
    if (value.dim() != dim_) {
        throw dimension_mismatch(value.dim(), dim_);
    }
    g_[(upper * dim_ + lower1) * dim_ + lower2] = std::move(value);
}

bool Christoffel::is_zero() const noexcept
{
    return std::all_of(g_.begin(), g_.end(), [](const Poly &p) { return p.is_zero(); });
}

bool Christoffel::is_torsion_free() const
{
    for (std::size_t a = 0; a < dim_; ++a) {
        for (std::size_t b = 0; b < dim_; ++b) {
            for (std::size_t c = b + 1; c < dim_; ++c) {
                if (!((*this)(a, b, c) == (*this)(a, c, b))) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool RiemannTensor::is_zero() const noexcept
{
    return std::all_of(components.begin(), components.end(), [](const Poly &p) { return p.is_zero(); });
}

bool RicciTensor::is_zero() const noexcept
{
    return std::all_of(components.begin(), components.end(), [](const Poly &p) { return p.is_zero(); });
}

bool RicciTensor::is_symmetric() const
{
    for (std::size_t m = 0; m < dim; ++m) {
        for (std::size_t n = m + 1; n < dim; ++n) {
            if (!((*this)(m, n) == (*this)(n, m))) {
                return false;
            }
        }
    }
    return true;
}

RiemannTensor curvature(const Christoffel &g)
{
    const std::size_t d = g.dim();
    RiemannTensor r{d, std::vector<Poly>(d * d * d * d, Poly(d))};
    for (std::size_t rho = 0; rho < d; ++rho) {
        for (std::size_t s = 0; s < d; ++s) {
            for (std::size_t m = 0; m < d; ++m) {
                for (std::size_t n = 0; n < d; ++n) {
                    Poly v = g(rho, n, s).diff(m) - g(rho, m, s).diff(n);
                    for (std::size_t l = 0; l < d; ++l) {
                        v += g(rho, m, l) * g(l, n, s);
                        v -= g(rho, n, l) * g(l, m, s);
                    }
                    r.components[((rho * d + s) * d + m) * d + n] = std::move(v);
                }
            }
        }
    }
    return r;
}

RicciTensor ricci(const Christoffel &g)
{
    const std::size_t d = g.dim();
    const RiemannTensor riem = curvature(g);
    RicciTensor out{d, std::vector<Poly>(d * d, Poly(d))};
    for (std::size_t m = 0; m < d; ++m) {
        for (std::size_t n = 0; n < d; ++n) {
            Poly v(d);
            for (std::size_t a = 0; a < d; ++a) {
                v += riem(a, m, a, n);
            }
            out.components[m * d + n] = std::move(v);
        }
    }
    return out;
}

Connection::Connection(Christoffel symbols) : g_(std::move(symbols))
{
    if (!g_.is_torsion_free()) {
        throw invalid_argument("connection symbols must be symmetric in the lower indices");
    }
}

Connection Connection::flat_zero(std::size_t n)
{
    return Connection(Christoffel(n));
}

Connection Connection::one_dimensional(const Poly &gamma)
{
    if (gamma.dim() != 1) {
        throw dimension_mismatch(gamma.dim(), 1);
    }
    Christoffel g(1);
    g.set(0, 0, 0, gamma);
    return Connection(std::move(g));
}

namespace
{

// Determinant by cofactor expansion along the first row (matrices are at most 8x8
// and in practice 1..4).
Poly determinant(const std::vector<std::vector<Poly>> &m, std::size_t dim)
{
    const std::size_t n = m.size();
    if (n == 0) {
        return Poly(dim, GaussianRational(1));
    }
    if (n == 1) {
        return m[0][0];
    }
    Poly det(dim);
    for (std::size_t col = 0; col < n; ++col) {
        if (m[0][col].is_zero()) {
            continue;
        }
        std::vector<std::vector<Poly>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Poly> row;
            for (std::size_t c = 0; c < n; ++c) {
                if (c != col) {
                    row.push_back(m[r][c]);
                }
            }
            minor.push_back(std::move(row));
        }
        Poly term = m[0][col] * determinant(minor, dim);
        if (col % 2 == 0) {
            det += term;
        } else {
            det -= term;
        }
    }
    return det;
}

} // namespace

Connection flat_connection_from_diffeo(std::span<const Poly> phi)
{
    const std::size_t n = phi.size();
    if (n == 0) {
        throw invalid_argument("empty coordinate map");
    }
    for (const auto &y : phi) {
        if (y.dim() != n) {
            throw dimension_mismatch(y.dim(), n);
        }
    }
    // jac[a][j] = d y^a / d x^j
    std::vector<std::vector<Poly>> jac(n, std::vector<Poly>(n, Poly(n)));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t j = 0; j < n; ++j) {
            jac[a][j] = phi[a].diff(j);
        }
    }
    const Poly det = determinant(jac, n);
    if (!det.is_constant() || det.is_zero()) {
        throw invalid_argument("coordinate map is not polynomially invertible (Jacobian determinant is not a "
                               "nonzero constant)");
    }
    const GaussianRational inv_det = GaussianRational(1) / det.constant_term();
    // inverse[i][a] = d x^i / d y^a = adj(jac)[i][a] / det
    std::vector<std::vector<Poly>> inverse(n, std::vector<Poly>(n, Poly(n)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t a = 0; a < n; ++a) {
            std::vector<std::vector<Poly>> minor;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == a) {
                    continue;
                }
                std::vector<Poly> row;
                for (std::size_t c = 0; c < n; ++c) {
                    if (c != i) {
                        row.push_back(jac[r][c]);
                    }
                }
                minor.push_back(std::move(row));
            }
            Poly cof = determinant(minor, n);
            if ((i + a) % 2 == 1) {
                cof = -cof;
            }
            inverse[i][a] = cof * inv_det;
        }
    }
    Christoffel g(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                Poly v(n);
                for (std::size_t a = 0; a < n; ++a) {
                    v += inverse[i][a] * jac[a][j].diff(k);
                }
                g.set(i, j, k, std::move(v));
            }
        }
    }
    return Connection(std::move(g));
}

LiftedConnection lift_connection(const Connection &c)
{
    const std::size_t n = c.n();
    const std::size_t d = 2 * n;
    auto base = [&](std::size_t i, std::size_t j, std::size_t k) { return c(i, j, k).embed(d); };
    Christoffel g(d);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                g.set(i, j, k, base(i, j, k));
                g.set(n + i, n + j, k, -base(j, i, k));
                g.set(n + i, j, n + k, -base(k, j, i));
                Poly v(d);
                for (std::size_t l = 0; l < n; ++l) {
                    Poly inner(d);
                    for (std::size_t r = 0; r < n; ++r) {
                        inner += base(r, j, k) * base(l, r, i);
                        inner += base(r, i, k) * base(l, r, j);
                    }
                    inner -= base(l, i, j).diff(k);
                    v += Poly::coordinate(d, n + l) * inner;
                }
                g.set(n + i, j, k, std::move(v));
            }
        }
    }
    return LiftedConnection(std::move(g));
}

std::vector<int> canonical_poisson_matrix(std::size_t n, std::size_t casimirs)
{
    const std::size_t d = 2 * n + casimirs;
    std::vector<int> p(d * d, 0);
    for (std::size_t i = 0; i < n; ++i) {
        p[i * d + n + i] = 1;
        p[(n + i) * d + i] = -1;
    }
    return p;
}

std::vector<int> canonical_symplectic_form(std::size_t n)
{
    const std::size_t d = 2 * n;
    std::vector<int> w(d * d, 0);
    for (std::size_t i = 0; i < n; ++i) {
        w[i * d + n + i] = -1;
        w[(n + i) * d + i] = 1;
    }
    return w;
}

std::vector<Poly> lower_first_index(const Christoffel &g)
{
    const std::size_t d = g.dim();
    if (d % 2 != 0) {
        throw invalid_argument("lowering with the symplectic form needs an even dimension");
    }
    const auto w = canonical_symplectic_form(d / 2);
    std::vector<Poly> out(d * d * d, Poly(d));
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
            for (std::size_t c = 0; c < d; ++c) {
                Poly v(d);
                for (std::size_t e = 0; e < d; ++e) {
                    if (w[a * d + e] != 0) {
                        v += g(e, b, c) * GaussianRational(w[a * d + e]);
                    }
                }
                out[(a * d + b) * d + c] = std::move(v);
            }
        }
    }
    return out;
}

Christoffel raise_first_index(std::size_t dim, std::span<const Poly> lowered)
{
    if (dim % 2 != 0 || lowered.size() != dim * dim * dim) {
        throw invalid_argument("lowered symbols must have (2n)^3 components");
    }
    const auto p = canonical_poisson_matrix(dim / 2);
    Christoffel g(dim);
    for (std::size_t e = 0; e < dim; ++e) {
        for (std::size_t b = 0; b < dim; ++b) {
            for (std::size_t c = 0; c < dim; ++c) {
                Poly v(dim);
                for (std::size_t a = 0; a < dim; ++a) {
                    if (p[e * dim + a] != 0) {
                        v += lowered[(a * dim + b) * dim + c] * GaussianRational(p[e * dim + a]);
                    }
                }
                g.set(e, b, c, std::move(v));
            }
        }
    }
    return g;
}

bool is_totally_symmetric(std::size_t dim, std::span<const Poly> lowered)
{
    if (lowered.size() != dim * dim * dim) {
        return false;
    }
    auto at = [&](std::size_t a, std::size_t b, std::size_t c) -> const Poly & {
        return lowered[(a * dim + b) * dim + c];
    };
    for (std::size_t a = 0; a < dim; ++a) {
        for (std::size_t b = 0; b < dim; ++b) {
            for (std::size_t c = 0; c < dim; ++c) {
                const Poly &v = at(a, b, c);
                if (!(v == at(b, a, c)) || !(v == at(a, c, b))) {
                    return false;
                }
            }
        }
    }
    return true;
}

SymplecticConnectionSpec::SymplecticConnectionSpec(std::size_t n, std::vector<Poly> lowered, GaussianRational a)
    : n_(n), lowered_(std::move(lowered)), a_(std::move(a))
{
    const std::size_t d = 2 * n;
    if (n == 0 || lowered_.size() != d * d * d) {
        throw invalid_argument("symplectic connection needs (2n)^3 lowered components");
    }
    for (const auto &p : lowered_) {
        if (p.dim() != d) {
            throw dimension_mismatch(p.dim(), d);
        }
    }
    if (!is_totally_symmetric(d, lowered_)) {
        throw invalid_argument("lowered symplectic connection symbols are not totally symmetric");
    }
    raised_ = raise_first_index(d, lowered_);
}

SymplecticConnectionSpec SymplecticConnectionSpec::from_lifted(const LiftedConnection &c, GaussianRational a)
{
    return SymplecticConnectionSpec(c.n(), lower_first_index(c.symbols()), std::move(a));
}

RicciTensor ricci(const SymplecticConnectionSpec &spec)
{
    return ricci(spec.raised());
}

} // namespace starq
