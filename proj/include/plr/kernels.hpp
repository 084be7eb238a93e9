#pragma once

#include <cstddef>
#include <cstdint>

namespace plr::kernels {

// Counts indices i in [0, n) whose sample (x_i, y_i) satisfies every affine
// equation y = <c, x> mod p given by `coeffs` (m rows of dim + 1 entries,
// row-major). xs is n * dim row-major; all entries are canonical residues.
// Dispatches to the fastest variant available at runtime.
std::size_t consensus_count(std::uint32_t p, std::size_t n, std::size_t dim,
                            const std::uint32_t* xs, const std::uint32_t* ys,
                            const std::uint32_t* coeffs, std::size_t m);

// Reference kernel; valid for every p < 2^31.
std::size_t consensus_count_scalar(std::uint32_t p, std::size_t n, std::size_t dim,
                                   const std::uint32_t* xs, const std::uint32_t* ys,
                                   const std::uint32_t* coeffs, std::size_t m);

// True when (dim + 1) * (p - 1)^2 < 2^64, i.e. a dot product can be
// accumulated without intermediate reduction. Precondition of the AVX2 kernel.
bool fits_unreduced(std::uint32_t p, std::size_t dim);

bool avx2_supported();

#if defined(PLR_HAVE_AVX2)
std::size_t consensus_count_avx2(std::uint32_t p, std::size_t n, std::size_t dim,
                                 const std::uint32_t* xs, const std::uint32_t* ys,
                                 const std::uint32_t* coeffs, std::size_t m);
#endif

// Name of the variant consensus_count would pick for these parameters.
const char* active_backend(std::uint32_t p, std::size_t dim);

}  // namespace plr::kernels
