#include "plr/kernels.hpp"

namespace plr::kernels {

namespace {

// Lazy reduction: every term is < 2^62, so reducing whenever the
// accumulator crosses 2^63 keeps it from overflowing.
inline std::uint32_t affine_eval(std::uint32_t p, const std::uint32_t* c,
                                 const std::uint32_t* x, std::size_t dim) {
    std::uint64_t acc = c[dim];
    for (std::size_t d = 0; d < dim; ++d) {
        acc += static_cast<std::uint64_t>(c[d]) * x[d];
        if (acc >> 63) acc %= p;
    }
    return static_cast<std::uint32_t>(acc % p);
}

}  // namespace

std::size_t consensus_count_scalar(std::uint32_t p, std::size_t n, std::size_t dim,
                                   const std::uint32_t* xs, const std::uint32_t* ys,
                                   const std::uint32_t* coeffs, std::size_t m) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint32_t* x = xs + i * dim;
        bool ok = true;
        for (std::size_t j = 0; j < m; ++j) {
            if (affine_eval(p, coeffs + j * (dim + 1), x, dim) != ys[i]) {
                ok = false;
                break;
            }
        }
        if (ok) ++count;
    }
    return count;
}

bool fits_unreduced(std::uint32_t p, std::size_t dim) {
    if (p < 2) return true;
    const std::uint64_t sq = static_cast<std::uint64_t>(p - 1) * (p - 1);
    if (sq == 0) return true;
    return static_cast<std::uint64_t>(dim) + 1 <= UINT64_MAX / sq;
}

}  // namespace plr::kernels
