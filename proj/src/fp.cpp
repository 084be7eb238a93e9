#include "plr/fp.hpp"

namespace plr {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    while (e != 0) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This base set is deterministic for all n < 2^64.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

PrimeModulus::PrimeModulus(std::uint64_t p) {
    if (!is_prime(p)) throw NotPrime("modulus is not prime");
    if (p >= (1ULL << 31)) throw NotPrime("modulus exceeds 2^31");
    p_ = static_cast<std::uint32_t>(p);
}

std::uint32_t PrimeModulus::inv(std::uint32_t a) const {
    if (a == 0) throw ZeroInversion{};
    std::int64_t r0 = p_, r1 = a;
    std::int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        t0 -= q * t1;
        std::swap(t0, t1);
    }
    // r0 == gcd(p, a) == 1 since p is prime and a != 0
    if (t0 < 0) t0 += p_;
    return static_cast<std::uint32_t>(t0);
}

FpScalar fp_affine_eval(const PrimeModulus& m, std::span<const FpScalar> c,
                        std::span<const FpScalar> x) {
    if (c.size() != x.size() + 1)
        throw LengthMismatch("affine evaluation needs |c| == |x| + 1");
    std::uint64_t acc = c[x.size()];
    for (std::size_t d = 0; d < x.size(); ++d) {
        acc += static_cast<std::uint64_t>(c[d]) * x[d];
        if (acc >> 63) acc %= m.p();
    }
    return m.reduce(acc);
}

}  // namespace plr
