#ifndef STARQ_ALGEBRA_MULTI_INDEX_HPP
#define STARQ_ALGEBRA_MULTI_INDEX_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace starq
{

// Upper bound on the number of coordinates (d = 2n + k).
inline constexpr std::size_t max_dim = 8;

/// Exponent vector over d coordinates. Used both for monomials x^I and for
/// derivative multi-indices d_I. Length |I| is the sum of the entries.
///
/// Ordering is graded lexicographic: total degree first, then exponents
/// compared coordinate by coordinate.
class MultiIndex
{
public:
    using value_type = std::uint8_t;

    MultiIndex() = default;
    explicit MultiIndex(std::size_t dim);
    MultiIndex(std::size_t dim, std::initializer_list<unsigned> exponents);
    MultiIndex(std::size_t dim, std::span<const unsigned> exponents);

    // e_alpha: one in direction alpha.
    static MultiIndex unit(std::size_t dim, std::size_t alpha);
    // Multi-index counting how often each coordinate appears in `indices`.
    static MultiIndex from_indices(std::size_t dim, std::span<const std::size_t> indices);

    std::size_t dim() const noexcept { return dim_; }
    unsigned length() const noexcept { return length_; }
    bool is_zero() const noexcept { return length_ == 0; }

    unsigned operator[](std::size_t i) const noexcept { return exps_[i]; }
    void set(std::size_t i, unsigned value);

    // Componentwise sum; throws on exponent overflow.
    MultiIndex operator+(const MultiIndex &o) const;
    // Componentwise difference; precondition o <= *this componentwise.
    MultiIndex operator-(const MultiIndex &o) const;
    bool divides(const MultiIndex &o) const noexcept;

    MultiIndex incremented(std::size_t i) const;
    MultiIndex decremented(std::size_t i) const;

    // Coordinates listed with multiplicity, ascending.
    std::vector<std::size_t> to_indices() const;
    std::vector<unsigned> to_vector() const;

    friend bool operator==(const MultiIndex &a, const MultiIndex &b) noexcept
    {
        return a.dim_ == b.dim_ && a.exps_ == b.exps_;
    }
    friend std::strong_ordering operator<=>(const MultiIndex &a, const MultiIndex &b) noexcept;

    std::string to_string() const;

private:
    std::array<value_type, max_dim> exps_{};
    std::uint8_t dim_ = 0;
    std::uint16_t length_ = 0;
};

// prod_i binom(top_i, bottom_i).
unsigned long multi_binomial(const MultiIndex &top, const MultiIndex &bottom);

// prod_i top_i! / (top_i - bottom_i)!  (coefficient of d_bottom x^top).
unsigned long falling_factorial(const MultiIndex &top, const MultiIndex &bottom);

// Every K with K <= index componentwise, graded order.
std::vector<MultiIndex> divisors(const MultiIndex &index);

// All multi-indices of the given dimension with length <= max_length, graded order.
std::vector<MultiIndex> all_multi_indices(std::size_t dim, unsigned max_length);

} // namespace starq

#endif
