#include <doctest.h>

#include <cmath>
#include <sstream>

#include "plr/fp.hpp"
#include "plr/io.hpp"
#include "plr/synthgen.hpp"
#include "plr/zp.hpp"

using namespace plr;

TEST_CASE("mod-p generator invariants") {
    const ModpInstance inst = gen_modp_instance(7, 5, 1000, 0.03, 42);
    CHECK(inst.data.size() == 1000);
    CHECK(inst.truth.size() == 6);
    CHECK(inst.noise_indices.size() == 30);  // round(0.03 * 1000)
    CHECK(std::is_sorted(inst.noise_indices.begin(), inst.noise_indices.end()));
    CHECK(std::any_of(inst.truth.begin(), inst.truth.end(),
                      [](FpScalar a) { return a != 0; }));

    // clean indices sit exactly on the truth hyperplane
    std::size_t k = 0;
    for (std::size_t i = 0; i < inst.data.size(); ++i) {
        const bool noisy = k < inst.noise_indices.size() && inst.noise_indices[k] == i;
        if (noisy) ++k;
        const FpScalar clean = fp_affine_eval(inst.data.mod, inst.truth, inst.data.x(i));
        if (!noisy) CHECK(inst.data.ys[i] == clean);
    }
    CHECK(k == inst.noise_indices.size());

    // determinism
    const ModpInstance again = gen_modp_instance(7, 5, 1000, 0.03, 42);
    CHECK(again.truth == inst.truth);
    CHECK(again.data.xs == inst.data.xs);
    CHECK(again.data.ys == inst.data.ys);
    CHECK(again.noise_indices == inst.noise_indices);

    const ModpInstance other = gen_modp_instance(7, 5, 1000, 0.03, 43);
    CHECK(other.data.ys != inst.data.ys);
}

TEST_CASE("mod-p generator corner rates") {
    CHECK(gen_modp_instance(5, 2, 100, 0.0, 1).noise_indices.empty());
    CHECK(gen_modp_instance(5, 2, 100, 1.0, 1).noise_indices.size() == 100);
    CHECK(gen_modp_instance(5, 2, 3, 0.5, 1).noise_indices.size() == 2);  // round up
}

TEST_CASE("p-adic generator invariants") {
    const std::uint32_t p = 5;
    const unsigned prec = 3;
    const PadicInstance inst = gen_padic_instance(p, 4, prec, 4000, 0.1, 7);
    const mpz_class q = pow_ui(p, prec);
    REQUIRE(inst.data.precision == prec);
    REQUIRE(inst.corruption_levels.size() == 4000);
    for (const auto& v : inst.data.xs) CHECK((v >= 0 && v < q));
    for (const auto& v : inst.truth) CHECK((v >= 0 && v < q));

    std::size_t surviving[4] = {0, 0, 0, 0};
    for (std::size_t i = 0; i < inst.data.size(); ++i) {
        // residual valuation is exactly the recorded corruption level
        std::vector<ZpTrunc> c, x;
        for (const auto& v : inst.truth) c.emplace_back(v, p, prec);
        for (std::size_t d = 0; d < inst.data.dim; ++d)
            x.emplace_back(inst.data.xs[i * inst.data.dim + d], p, prec);
        const ZpTrunc residual = ZpTrunc(inst.data.ys[i], p, prec) - zp_affine_eval(c, x);
        CHECK(residual.valuation() == inst.corruption_levels[i]);
        for (unsigned e = 0; e <= inst.corruption_levels[i] && e <= prec; ++e)
            ++surviving[e];
    }

    // survival process: each level keeps ~(1 - r) of the previous one
    for (unsigned e = 0; e < prec; ++e) {
        const double kept = static_cast<double>(surviving[e + 1]);
        const double pool = static_cast<double>(surviving[e]);
        const double sigma = std::sqrt(pool * 0.1 * 0.9);
        CHECK(std::abs(kept - pool * 0.9) < 4 * sigma + 1);
    }

    // reduction mod p: the level-0 noisy set is exactly {levels == 0}
    const Dataset reduced = reduce_mod_p(inst.data);
    FpVector truth_p;
    for (const auto& v : inst.truth)
        truth_p.push_back(static_cast<FpScalar>(mpz_fdiv_ui(v.get_mpz_t(), p)));
    for (std::size_t i = 0; i < reduced.size(); ++i) {
        const bool clean_mod_p =
            fp_affine_eval(reduced.mod, truth_p, reduced.x(i)) == reduced.ys[i];
        CHECK(clean_mod_p == (inst.corruption_levels[i] >= 1));
    }

    const PadicInstance again = gen_padic_instance(p, 4, prec, 4000, 0.1, 7);
    CHECK(again.data.ys == inst.data.ys);
    CHECK(again.corruption_levels == inst.corruption_levels);
}

TEST_CASE("p-adic generator with zero rate is clean") {
    const PadicInstance inst = gen_padic_instance(3, 2, 3, 50, 0.0, 9);
    for (const auto lvl : inst.corruption_levels) CHECK(lvl == inst.data.precision);
}

TEST_CASE("instance file round trip, mod-p") {
    const ModpInstance inst = gen_modp_instance(7, 3, 25, 0.2, 11);
    const InstanceFile file = make_instance_file(inst, 11);
    std::stringstream buf;
    write_instance(buf, file);

    const InstanceFile back = read_instance(buf);
    CHECK(back.p == 7);
    CHECK(back.dim == 3);
    CHECK(back.precision == 1);
    CHECK(back.n_samples == 25);
    CHECK(back.r == doctest::Approx(0.2));
    CHECK(back.seed == 11);
    CHECK(back.xs == file.xs);
    CHECK(back.ys == file.ys);
    REQUIRE(back.truth.has_value());
    CHECK(*back.truth == *file.truth);

    const Dataset data = back.to_dataset();
    CHECK(data.xs == inst.data.xs);
    CHECK(data.ys == inst.data.ys);

    // serialization is byte-stable
    std::stringstream buf2;
    write_instance(buf2, back);
    std::stringstream buf3;
    write_instance(buf3, file);
    CHECK(buf2.str() == buf3.str());
}

TEST_CASE("instance file round trip, p-adic") {
    const PadicInstance inst = gen_padic_instance(5, 2, 3, 12, 0.1, 3);
    const InstanceFile file = make_instance_file(inst, 3);
    std::stringstream buf;
    write_instance(buf, file);
    const InstanceFile back = read_instance(buf);
    CHECK(back.precision == inst.data.precision);
    CHECK(back.xs == file.xs);
    const PadicDataset data = back.to_padic_dataset();
    CHECK(data.ys == inst.data.ys);
    CHECK(data.ids.size() == 12);
    CHECK_THROWS_AS(back.to_dataset(), Error);  // E > 1 is not a mod-p file
}

TEST_CASE("malformed instance files are rejected") {
    std::stringstream missing_header("{\"x\":[\"1\"],\"y\":\"2\"}\n");
    CHECK_THROWS_AS(read_instance(missing_header), Error);

    std::stringstream composite(
        "{\"p\":4,\"D\":1,\"E\":1,\"N\":0,\"r\":0.0,\"seed\":0}\n");
    CHECK_THROWS_AS(read_instance(composite), NotPrime);

    std::stringstream out_of_range(
        "{\"p\":5,\"D\":1,\"E\":1,\"N\":1,\"r\":0.0,\"seed\":0}\n"
        "{\"x\":[\"7\"],\"y\":\"2\"}\n");
    CHECK_THROWS_AS(read_instance(out_of_range), Error);
}
