#include <starq/geometry/f_tensors.hpp>

#include <algorithm>

#include <starq/error.hpp>

namespace starq
{

FTensor::FTensor(std::size_t n, std::size_t rank) : n_(n), rank_(rank)
{
    std::size_t size = n * n;
    for (std::size_t k = 0; k < rank; ++k) {
        size *= n;
    }
    comps_.assign(size, Poly(n));
}

std::size_t FTensor::offset(std::size_t l, std::span<const std::size_t> indices, std::size_t last) const
{
    if (indices.size() != rank_) {
        throw invalid_argument("f-tensor index count does not match its rank");
    }
    std::size_t off = l;
    for (auto i : indices) {
        off = off * n_ + i;
    }
    return off * n_ + last;
}

const Poly &FTensor::at(std::size_t l, std::span<const std::size_t> indices, std::size_t last) const
{
    return comps_[offset(l, indices, last)];
}

void FTensor::set(std::size_t l, std::span<const std::size_t> indices, std::size_t last, Poly value)
{
    comps_[offset(l, indices, last)] = std::move(value);
}

bool FTensor::is_zero() const noexcept
{
    return std::all_of(comps_.begin(), comps_.end(), [](const Poly &p) { return p.is_zero(); });
}

std::vector<std::vector<std::size_t>> index_tuples(std::size_t n, std::size_t length)
{
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> t(length, 0);
    while (true) {
        out.push_back(t);
        std::size_t pos = length;
        while (pos > 0) {
            --pos;
            if (++t[pos] < n) {
                break;
            }
            t[pos] = 0;
            if (pos == 0) {
                return out;
            }
        }
        if (length == 0) {
            return out;
        }
    }
}

std::vector<FTensor> f_tensors(const Connection &c, std::size_t max_rank)
{
    const std::size_t n = c.n();
    std::vector<FTensor> out;
    FTensor delta(n, 0);
    for (std::size_t l = 0; l < n; ++l) {
        delta.set(l, {}, l, Poly(n, GaussianRational(1)));
    }
    out.push_back(std::move(delta));
    for (std::size_t k = 0; k < max_rank; ++k) {
        const FTensor &prev = out.back();
        FTensor next(n, k + 1);
        for (const auto &idx : index_tuples(n, k)) {
            std::vector<std::size_t> ext(idx);
            ext.push_back(0);
            for (std::size_t top = 0; top < n; ++top) {
                ext[k] = top;
                for (std::size_t l = 0; l < n; ++l) {
                    for (std::size_t i = 0; i < n; ++i) {
                        Poly v = prev.at(l, idx, i).diff(top);
                        for (std::size_t j = 0; j < n; ++j) {
                            v += c(l, top, j) * prev.at(j, idx, i);
                        }
                        std::vector<std::size_t> sub(idx);
                        for (std::size_t m = 0; m < k; ++m) {
                            for (std::size_t j = 0; j < n; ++j) {
                                sub[m] = j;
                                v -= c(j, idx[m], top) * prev.at(l, sub, i);
                            }
                            sub[m] = idx[m];
                        }
                        next.set(l, ext, i, std::move(v));
                    }
                }
            }
        }
        out.push_back(std::move(next));
    }
    return out;
}

} // namespace starq
