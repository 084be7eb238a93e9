#include "plr/kernels.hpp"

namespace plr::kernels {

bool avx2_supported() {
#if defined(__x86_64__) || defined(_M_X64)
    static const bool supported = __builtin_cpu_supports("avx2");
    return supported;
#else
    return false;
#endif
}

namespace {

bool use_avx2(std::uint32_t p, std::size_t dim) {
#if defined(PLR_HAVE_AVX2)
    return avx2_supported() && fits_unreduced(p, dim);
#else
    (void)p;
    (void)dim;
    return false;
#endif
}

}  // namespace

std::size_t consensus_count(std::uint32_t p, std::size_t n, std::size_t dim,
                            const std::uint32_t* xs, const std::uint32_t* ys,
                            const std::uint32_t* coeffs, std::size_t m) {
#if defined(PLR_HAVE_AVX2)
    if (use_avx2(p, dim)) return consensus_count_avx2(p, n, dim, xs, ys, coeffs, m);
#endif
    return consensus_count_scalar(p, n, dim, xs, ys, coeffs, m);
}

const char* active_backend(std::uint32_t p, std::size_t dim) {
    return use_avx2(p, dim) ? "avx2" : "scalar";
}

}  // namespace plr::kernels
