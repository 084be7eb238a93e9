#include "plr/io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace plr {

namespace {

using json = nlohmann::ordered_json;

std::string to_dec(const mpz_class& v) { return v.get_str(10); }

mpz_class parse_value(const json& j, const mpz_class& bound, const char* what) {
    if (!j.is_string()) throw Error(std::string("expected a decimal string for ") + what);
    mpz_class v;
    if (mpz_set_str(v.get_mpz_t(), j.get_ref<const std::string&>().c_str(), 10) != 0)
        throw Error(std::string("malformed decimal value for ") + what);
    if (v < 0 || v >= bound) throw Error(std::string("value out of range for ") + what);
    return v;
}

}  // namespace

Dataset InstanceFile::to_dataset() const {
    if (precision != 1) throw PrecisionMismatch("mod-p dataset requires E == 1");
    Dataset out{PrimeModulus(p), dim, {}, {}};
    out.xs.reserve(xs.size());
    out.ys.reserve(ys.size());
    for (const auto& v : xs) out.xs.push_back(static_cast<FpScalar>(v.get_ui()));
    for (const auto& v : ys) out.ys.push_back(static_cast<FpScalar>(v.get_ui()));
    return out;
}

PadicDataset InstanceFile::to_padic_dataset() const {
    PadicDataset out;
    out.p = p;
    out.dim = dim;
    out.precision = precision;
    out.xs = xs;
    out.ys = ys;
    out.ids.resize(n_samples);
    for (std::size_t i = 0; i < n_samples; ++i) out.ids[i] = i;
    return out;
}

InstanceFile make_instance_file(const ModpInstance& inst, std::uint64_t seed) {
    InstanceFile f;
    f.p = inst.data.mod.p();
    f.dim = inst.data.dim;
    f.precision = 1;
    f.n_samples = inst.data.size();
    f.r = inst.r;
    f.seed = seed;
    f.truth = std::vector<mpz_class>(inst.truth.begin(), inst.truth.end());
    f.xs.assign(inst.data.xs.begin(), inst.data.xs.end());
    f.ys.assign(inst.data.ys.begin(), inst.data.ys.end());
    return f;
}

InstanceFile make_instance_file(const PadicInstance& inst, std::uint64_t seed) {
    InstanceFile f;
    f.p = inst.data.p;
    f.dim = inst.data.dim;
    f.precision = inst.data.precision;
    f.n_samples = inst.data.size();
    f.r = inst.r;
    f.seed = seed;
    f.truth = inst.truth;
    f.xs = inst.data.xs;
    f.ys = inst.data.ys;
    return f;
}

void write_instance(std::ostream& out, const InstanceFile& file) {
    json header;
    header["p"] = file.p;
    header["D"] = file.dim;
    header["E"] = file.precision;
    header["N"] = file.n_samples;
    header["r"] = file.r;
    header["seed"] = file.seed;
    if (file.truth) {
        json t = json::array();
        for (const auto& v : *file.truth) t.push_back(to_dec(v));
        header["truth"] = std::move(t);
    }
    out << header.dump() << '\n';
    for (std::size_t i = 0; i < file.n_samples; ++i) {
        json rec;
        json x = json::array();
        for (std::size_t d = 0; d < file.dim; ++d)
            x.push_back(to_dec(file.xs[i * file.dim + d]));
        rec["x"] = std::move(x);
        rec["y"] = to_dec(file.ys[i]);
        out << rec.dump() << '\n';
    }
}

void write_instance(const std::string& path, const InstanceFile& file) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open " + path + " for writing");
    write_instance(out, file);
}

InstanceFile read_instance(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw Error("empty instance file");
    json header = json::parse(line, nullptr, false);
    if (header.is_discarded() || !header.is_object())
        throw Error("malformed instance header");

    InstanceFile f;
    try {
        f.p = header.at("p").get<std::uint32_t>();
        f.dim = header.at("D").get<std::size_t>();
        f.precision = header.value("E", 1u);
        f.n_samples = header.at("N").get<std::size_t>();
        f.r = header.value("r", 0.0);
        f.seed = header.value("seed", std::uint64_t{0});
    } catch (const json::exception& e) {
        throw Error(std::string("malformed instance header: ") + e.what());
    }
    if (!is_prime(f.p)) throw NotPrime("modulus is not prime");
    const mpz_class bound = pow_ui(f.p, f.precision);

    if (header.contains("truth")) {
        std::vector<mpz_class> t;
        for (const auto& j : header.at("truth")) t.push_back(parse_value(j, bound, "truth"));
        if (t.size() != f.dim + 1) throw Error("truth length does not match D + 1");
        f.truth = std::move(t);
    }

    f.xs.reserve(f.n_samples * f.dim);
    f.ys.reserve(f.n_samples);
    for (std::size_t i = 0; i < f.n_samples; ++i) {
        if (!std::getline(in, line)) throw Error("instance file ends early");
        json rec = json::parse(line, nullptr, false);
        if (rec.is_discarded() || !rec.is_object() || !rec.contains("x") || !rec.contains("y"))
            throw Error("malformed sample record");
        const json& x = rec.at("x");
        if (!x.is_array() || x.size() != f.dim)
            throw Error("sample x length does not match D");
        for (const auto& j : x) f.xs.push_back(parse_value(j, bound, "x"));
        f.ys.push_back(parse_value(rec.at("y"), bound, "y"));
    }
    return f;
}

InstanceFile read_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return read_instance(in);
}

}  // namespace plr
