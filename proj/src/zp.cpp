#include "plr/zp.hpp"

namespace plr {

mpz_class pow_ui(std::uint32_t base, unsigned exp) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

namespace {

void require_compatible(const ZpTrunc& a, const ZpTrunc& b) {
    if (a.prime() != b.prime())
        throw ModulusMismatch("operands have different primes");
    if (a.precision() != b.precision())
        throw PrecisionMismatch("operands have different precisions");
}

}  // namespace

ZpTrunc::ZpTrunc(mpz_class value, std::uint32_t p, unsigned precision)
    : value_(std::move(value)), p_(p), prec_(precision) {
    const mpz_class q = pow_ui(p_, prec_);
    mpz_mod(value_.get_mpz_t(), value_.get_mpz_t(), q.get_mpz_t());
}

ZpTrunc operator+(const ZpTrunc& a, const ZpTrunc& b) {
    require_compatible(a, b);
    return ZpTrunc(a.value_ + b.value_, a.p_, a.prec_);
}

ZpTrunc operator-(const ZpTrunc& a, const ZpTrunc& b) {
    require_compatible(a, b);
    return ZpTrunc(a.value_ - b.value_, a.p_, a.prec_);
}

ZpTrunc operator*(const ZpTrunc& a, const ZpTrunc& b) {
    require_compatible(a, b);
    return ZpTrunc(a.value_ * b.value_, a.p_, a.prec_);
}

unsigned ZpTrunc::valuation() const {
    if (value_ == 0) return prec_;
    mpz_class reduced;
    const mpz_class p(p_);
    const auto v = mpz_remove(reduced.get_mpz_t(), value_.get_mpz_t(), p.get_mpz_t());
    return v < prec_ ? static_cast<unsigned>(v) : prec_;
}

ZpTrunc ZpTrunc::exact_div_p() const {
    if (prec_ == 0) throw NotDivisible{};
    if (!mpz_divisible_ui_p(value_.get_mpz_t(), p_)) throw NotDivisible{};
    mpz_class q;
    mpz_divexact_ui(q.get_mpz_t(), value_.get_mpz_t(), p_);
    return ZpTrunc(std::move(q), p_, prec_ - 1);
}

ZpTrunc ZpTrunc::truncate(unsigned new_precision) const {
    if (new_precision > prec_)
        throw PrecisionMismatch("cannot truncate to a higher precision");
    return ZpTrunc(value_, p_, new_precision);
}

std::uint32_t ZpTrunc::mod_p() const {
    if (prec_ == 0) return 0;
    return static_cast<std::uint32_t>(mpz_fdiv_ui(value_.get_mpz_t(), p_));
}

ZpTrunc zp_affine_eval(std::span<const ZpTrunc> c, std::span<const ZpTrunc> x) {
    if (c.size() != x.size() + 1)
        throw LengthMismatch("affine evaluation needs |c| == |x| + 1");
    ZpTrunc acc = c[x.size()];
    for (std::size_t d = 0; d < x.size(); ++d) acc = acc + c[d] * x[d];
    return acc;
}

}  // namespace plr
