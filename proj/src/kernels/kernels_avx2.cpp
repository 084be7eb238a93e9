#include <immintrin.h>

#include "plr/kernels.hpp"

namespace plr::kernels {

namespace {

// Unreduced dot product over 64-bit lanes; caller guarantees
// fits_unreduced(p, dim). Even/odd 32-bit lanes are widened separately.
inline std::uint64_t dot_unreduced(const std::uint32_t* c, const std::uint32_t* x,
                                   std::size_t dim) {
    __m256i acc_even = _mm256_setzero_si256();
    __m256i acc_odd = _mm256_setzero_si256();
    std::size_t d = 0;
    for (; d + 8 <= dim; d += 8) {
        const __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + d));
        const __m256i vc = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(c + d));
        acc_even = _mm256_add_epi64(acc_even, _mm256_mul_epu32(vx, vc));
        acc_odd = _mm256_add_epi64(
            acc_odd, _mm256_mul_epu32(_mm256_srli_epi64(vx, 32), _mm256_srli_epi64(vc, 32)));
    }
    const __m256i acc = _mm256_add_epi64(acc_even, acc_odd);
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    std::uint64_t s = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; d < dim; ++d) s += static_cast<std::uint64_t>(c[d]) * x[d];
    return s;
}

}  // namespace

std::size_t consensus_count_avx2(std::uint32_t p, std::size_t n, std::size_t dim,
                                 const std::uint32_t* xs, const std::uint32_t* ys,
                                 const std::uint32_t* coeffs, std::size_t m) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint32_t* x = xs + i * dim;
        bool ok = true;
        for (std::size_t j = 0; j < m; ++j) {
            const std::uint32_t* c = coeffs + j * (dim + 1);
            const std::uint64_t s = dot_unreduced(c, x, dim) + c[dim];
            if (static_cast<std::uint32_t>(s % p) != ys[i]) {
                ok = false;
                break;
            }
        }
        if (ok) ++count;
    }
    return count;
}

}  // namespace plr::kernels
