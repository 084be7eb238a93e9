#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "plr/modp_regress.hpp"
#include "plr/padic_regress.hpp"
#include "plr/synthgen.hpp"

namespace plr {

// JSON-lines instance file: a header record
//   {"p":..,"D":..,"E":..,"N":..,"r":..,"seed":..,"truth":[..]}
// followed by one record {"x":[..],"y":..} per index. x entries, y, and
// truth entries are decimal strings in [0, p^E); mod-p instances carry E = 1.
struct InstanceFile {
    std::uint32_t p = 2;
    std::size_t dim = 0;
    unsigned precision = 1;
    std::size_t n_samples = 0;
    double r = 0.0;
    std::uint64_t seed = 0;
    std::optional<std::vector<mpz_class>> truth;
    std::vector<mpz_class> xs;  // N * D
    std::vector<mpz_class> ys;  // N

    Dataset to_dataset() const;            // requires precision == 1
    PadicDataset to_padic_dataset() const;
};

InstanceFile make_instance_file(const ModpInstance& inst, std::uint64_t seed);
InstanceFile make_instance_file(const PadicInstance& inst, std::uint64_t seed);

void write_instance(std::ostream& out, const InstanceFile& file);
void write_instance(const std::string& path, const InstanceFile& file);

// Throws plr::Error on malformed input.
InstanceFile read_instance(std::istream& in);
InstanceFile read_instance(const std::string& path);

}  // namespace plr
