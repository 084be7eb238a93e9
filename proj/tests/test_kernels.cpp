#include <doctest.h>

#include <gmpxx.h>

#include <vector>

#include "plr/kernels.hpp"
#include "plr/rng.hpp"

using namespace plr;

namespace {

// big-integer reference, no modular tricks at all
std::size_t count_naive(std::uint32_t p, std::size_t n, std::size_t dim,
                        const std::vector<std::uint32_t>& xs,
                        const std::vector<std::uint32_t>& ys,
                        const std::vector<std::uint32_t>& coeffs, std::size_t m) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i) {
        bool ok = true;
        for (std::size_t j = 0; j < m && ok; ++j) {
            mpz_class acc = coeffs[j * (dim + 1) + dim];
            for (std::size_t d = 0; d < dim; ++d) {
                acc += mpz_class(coeffs[j * (dim + 1) + d]) * xs[i * dim + d];
            }
            ok = mpz_fdiv_ui(acc.get_mpz_t(), p) == ys[i];
        }
        if (ok) ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("kernel variants agree") {
    Rng rng(101);
    const std::uint32_t primes[] = {2, 3, 7, 65521, 2147483647};
    for (int trial = 0; trial < 300; ++trial) {
        const std::uint32_t p = primes[rng.below(5)];
        const auto n = static_cast<std::size_t>(rng.below(120));
        const auto dim = static_cast<std::size_t>(rng.below(20));
        const auto m = static_cast<std::size_t>(rng.below(4)) + 1;
        std::vector<std::uint32_t> xs(n * dim), ys(n), coeffs(m * (dim + 1));
        for (auto& a : xs) a = static_cast<std::uint32_t>(rng.below(p));
        for (auto& a : coeffs) a = static_cast<std::uint32_t>(rng.below(p));
        // mix exact hits with random ys so both comparison branches are hit
        for (std::size_t i = 0; i < n; ++i) {
            if (rng.below(2) == 0) {
                mpz_class acc = coeffs[dim];
                for (std::size_t d = 0; d < dim; ++d)
                    acc += mpz_class(coeffs[d]) * xs[i * dim + d];
                ys[i] = static_cast<std::uint32_t>(mpz_fdiv_ui(acc.get_mpz_t(), p));
            } else {
                ys[i] = static_cast<std::uint32_t>(rng.below(p));
            }
        }

        const std::size_t expected = count_naive(p, n, dim, xs, ys, coeffs, m);
        CHECK(kernels::consensus_count_scalar(p, n, dim, xs.data(), ys.data(), coeffs.data(),
                                              m) == expected);
        CHECK(kernels::consensus_count(p, n, dim, xs.data(), ys.data(), coeffs.data(), m) ==
              expected);
#if defined(PLR_HAVE_AVX2)
        if (kernels::avx2_supported() && kernels::fits_unreduced(p, dim)) {
            CHECK(kernels::consensus_count_avx2(p, n, dim, xs.data(), ys.data(), coeffs.data(),
                                                m) == expected);
        }
#endif
    }
}

TEST_CASE("unreduced accumulation gate") {
    CHECK(kernels::fits_unreduced(7, 1000000));
    CHECK(kernels::fits_unreduced(65521, 1000000));
    CHECK(kernels::fits_unreduced(2, 1000000));
    // (p-1)^2 ~ 2^62: only a handful of terms fit
    CHECK(kernels::fits_unreduced(2147483647, 2));
    CHECK_FALSE(kernels::fits_unreduced(2147483647, 100));
}

TEST_CASE("dispatch backend naming") {
    const char* b = kernels::active_backend(7, 20);
#if defined(PLR_HAVE_AVX2)
    if (kernels::avx2_supported()) {
        CHECK(std::string(b) == "avx2");
        CHECK(std::string(kernels::active_backend(2147483647, 100)) == "scalar");
    } else {
        CHECK(std::string(b) == "scalar");
    }
#else
    CHECK(std::string(b) == "scalar");
#endif
}
