#ifndef STARQ_GEOMETRY_F_TENSORS_HPP
#define STARQ_GEOMETRY_F_TENSORS_HPP

#include <cstddef>
#include <span>
#include <vector>

#include <starq/algebra/poly.hpp>
#include <starq/geometry/connection.hpp>

namespace starq
{

/// Components f^l_{i1...ik i} on the base (polynomials in q), dense over n^(k+2).
class FTensor
{
public:
    FTensor() = default;
    FTensor(std::size_t n, std::size_t rank);

    std::size_t n() const noexcept { return n_; }
    std::size_t rank() const noexcept { return rank_; }

    // indices = (i1, ..., ik); `last` is the trailing lower index i.
    const Poly &at(std::size_t l, std::span<const std::size_t> indices, std::size_t last) const;
    void set(std::size_t l, std::span<const std::size_t> indices, std::size_t last, Poly value);

    const std::vector<Poly> &components() const noexcept { return comps_; }
    bool is_zero() const noexcept;

private:
    std::size_t n_ = 0;
    std::size_t rank_ = 0;
    std::vector<Poly> comps_;

    std::size_t offset(std::size_t l, std::span<const std::size_t> indices, std::size_t last) const;
};

// Element k holds rank k for k = 0..max_rank. Rank 0 is the Kronecker delta
// f^l_i that seeds the recursion; rank 1 equals G^l_{i1 i}, and
//   f^l_{i1..i(k+1) i} = d_{i(k+1)} f^l_{i1..ik i} + G^l_{i(k+1) j} f^j_{i1..ik i}
//                        - sum_m G^j_{im i(k+1)} f^l_{i1..j..ik i}.
std::vector<FTensor> f_tensors(const Connection &c, std::size_t max_rank);

// All index tuples of the given length over {0..n-1}, lexicographic.
std::vector<std::vector<std::size_t>> index_tuples(std::size_t n, std::size_t length);

} // namespace starq

#endif
