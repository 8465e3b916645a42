#ifndef STARQ_OPERATORS_BIDIFF_OP_HPP
#define STARQ_OPERATORS_BIDIFF_OP_HPP

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>

#include <starq/algebra/poly.hpp>
#include <starq/operators/diff_op.hpp>

namespace starq
{

enum class Slot { left, right };

/// Bidifferential operator (f, g) -> sum_{I,J} c_{IJ}(x) (d_I f)(d_J g) in normal form.
class BiDiffOp
{
public:
    using key = std::pair<MultiIndex, MultiIndex>;
    using term_map = std::map<key, Poly>;

    BiDiffOp() = default;
    explicit BiDiffOp(std::size_t dim) : dim_(dim) {}

    // (f, g) -> f g.
    static BiDiffOp pointwise_product(std::size_t dim);
    // (f, g) -> (a f)(b g), expanded into normal form.
    static BiDiffOp tensor(const DiffOp &a, const DiffOp &b);

    std::size_t dim() const noexcept { return dim_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    const term_map &terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    // Maximal derivative order in the given slot; -1 for zero.
    int order(Slot slot) const noexcept;

    Poly coefficient(const MultiIndex &left, const MultiIndex &right) const;
    void add_term(const MultiIndex &left, const MultiIndex &right, const Poly &c);

    BiDiffOp &operator+=(const BiDiffOp &o);
    BiDiffOp &operator-=(const BiDiffOp &o);
    BiDiffOp &operator*=(const GaussianRational &c);
    friend BiDiffOp operator+(BiDiffOp a, const BiDiffOp &b) { return a += b; }
    friend BiDiffOp operator-(BiDiffOp a, const BiDiffOp &b) { return a -= b; }
    friend BiDiffOp operator*(BiDiffOp a, const GaussianRational &c) { return a *= c; }
    friend BiDiffOp operator*(const GaussianRational &c, BiDiffOp a) { return a *= c; }

    // (f, g) -> this(g, f).
    BiDiffOp swapped() const;

    // True iff no term has a zeroth-order derivative in either slot,
    // equivalently C(1, f) = C(f, 1) = 0 for every f.
    bool vanishes_on_constants() const noexcept;

    friend bool operator==(const BiDiffOp &a, const BiDiffOp &b) = default;

    std::string to_string(std::span<const std::string> names) const;

private:
    std::size_t dim_ = 0;
    term_map terms_;

    void check_dim(std::size_t other) const;
};

// sum c_{IJ} (d_I f)(d_J g).
Poly bidiff_apply(const BiDiffOp &c, const Poly &f, const Poly &g);

// The differential operator f -> C(x^alpha, f) (side = left) or f -> C(f, x^alpha) (side = right).
DiffOp slot_fix(const BiDiffOp &c, std::size_t alpha, Slot side);

} // namespace starq

#endif
