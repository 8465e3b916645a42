#ifndef STARQ_OPERATORS_DIFF_OP_HPP
#define STARQ_OPERATORS_DIFF_OP_HPP

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <starq/algebra/hbar_series.hpp>
#include <starq/algebra/multi_index.hpp>
#include <starq/algebra/poly.hpp>

namespace starq
{

// Largest operator order the engine will build. Defaults to 12, overridable
// through the STARQ_MAX_OP_ORDER environment variable or explicitly.
unsigned max_operator_order();
void set_max_operator_order(unsigned order);

/// Linear differential operator sum_I c_I(x) d_I in normal form: coefficient
/// functions stand left of the derivatives, no zero coefficients are stored.
class DiffOp
{
public:
    using term_map = std::map<MultiIndex, Poly>;

    DiffOp() = default;
    explicit DiffOp(std::size_t dim) : dim_(dim) {}

    static DiffOp identity(std::size_t dim);
    // d_I with unit coefficient.
    static DiffOp derivative(const MultiIndex &index);
    // Multiplication by a function.
    static DiffOp multiplication(const Poly &f);

    std::size_t dim() const noexcept { return dim_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    const term_map &terms() const noexcept { return terms_; }
    // Highest derivative length; -1 for the zero operator.
    int order() const noexcept;
    std::size_t size() const noexcept { return terms_.size(); }

    // Coefficient of d_I (zero polynomial if absent).
    Poly coefficient(const MultiIndex &index) const;

    // Adds c * d_I, merging with an existing term.
    void add_term(const MultiIndex &index, const Poly &c);

    DiffOp &operator+=(const DiffOp &o);
    DiffOp &operator-=(const DiffOp &o);
    DiffOp &operator*=(const GaussianRational &c);
    friend DiffOp operator+(DiffOp a, const DiffOp &b) { return a += b; }
    friend DiffOp operator-(DiffOp a, const DiffOp &b) { return a -= b; }
    friend DiffOp operator*(DiffOp a, const GaussianRational &c) { return a *= c; }
    friend DiffOp operator*(const GaussianRational &c, DiffOp a) { return a *= c; }
    DiffOp operator-() const;

    // f * (this): multiplies every coefficient by f.
    DiffOp left_multiplied(const Poly &f) const;
    // (this) o d_I: shifts every derivative index by I.
    DiffOp right_derivative(const MultiIndex &index) const;

    // Structural equality of normal forms.
    friend bool operator==(const DiffOp &a, const DiffOp &b) = default;

    std::string to_string(std::span<const std::string> names) const;

private:
    std::size_t dim_ = 0;
    term_map terms_;

    void check_dim(std::size_t other) const;
    void check_order(const MultiIndex &index) const;
};

// sum_I c_I d_I f.
Poly apply(const DiffOp &op, const Poly &f);
PolySeries apply(const DiffOp &op, const PolySeries &f);

// Normal form of a o b by the generalized Leibniz rule.
DiffOp compose(const DiffOp &a, const DiffOp &b);

// a o b - b o a.
DiffOp commutator(const DiffOp &a, const DiffOp &b);

// op o x^alpha - x^alpha o op, computed directly on the normal form.
DiffOp commutator_with_coordinate(const DiffOp &op, std::size_t alpha);

bool op_equal(const DiffOp &a, const DiffOp &b);

// Terms where the two operators differ, as (index, a-coefficient, b-coefficient).
struct TermDifference {
    MultiIndex index;
    Poly left;
    Poly right;
};
std::vector<TermDifference> term_differences(const DiffOp &a, const DiffOp &b);

} // namespace starq

#endif
