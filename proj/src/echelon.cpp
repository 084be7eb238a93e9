#include "plr/echelon.hpp"

#include <algorithm>

namespace plr {

bool es_contains(const PrimeModulus& m, const EquationSystem& es,
                 std::span<const FpScalar> x, FpScalar y) {
    for (std::size_t j = 0; j < es.count; ++j) {
        if (fp_affine_eval(m, es.row(j), x) != y) return false;
    }
    return true;
}

FpVector EchelonForm::reduce(std::span<const FpScalar> v) const {
    if (v.size() != width())
        throw LengthMismatch("vector width does not match the form");
    FpVector out(v.begin(), v.end());
    for (std::size_t col = 0; col < width(); ++col) {
        const int k = pivot_of_col_[col];
        if (k < 0 || out[col] == 0) continue;
        const FpScalar f = out[col];
        const FpVector& row = rows_[static_cast<std::size_t>(k)];
        for (std::size_t j = col; j < width(); ++j) {
            out[j] = mod_.sub(out[j], mod_.mul(f, row[j]));
        }
    }
    return out;
}

InsertOutcome EchelonForm::insert(std::span<const FpScalar> x, FpScalar y) {
    if (x.size() != dim_)
        throw LengthMismatch("sample dimension does not match the form");
    FpVector v(width());
    std::copy(x.begin(), x.end(), v.begin());
    v[dim_] = 1;
    v[dim_ + 1] = y;
    v = reduce(v);

    const auto lead = std::find_if(v.begin(), v.end(), [](FpScalar a) { return a != 0; });
    if (lead == v.end()) return InsertOutcome::Dependent;
    const auto d = static_cast<std::size_t>(lead - v.begin());
    if (d == dim_ + 1) return InsertOutcome::Inconsistent;

    const FpScalar scale = mod_.inv(v[d]);
    for (auto& a : v) a = mod_.mul(a, scale);
    for (auto& row : rows_) {
        const FpScalar f = row[d];
        if (f == 0) continue;
        for (std::size_t j = d; j < width(); ++j) {
            row[j] = mod_.sub(row[j], mod_.mul(f, v[j]));
        }
    }
    pivot_of_col_[d] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(v));
    return InsertOutcome::Inserted;
}

EquationSystem EchelonForm::equation_system() const {
    if (rows_.empty()) throw EmptyForm{};
    // Each row (a | a_{D+1}) is the equation sum_{d <= D} a_d c_d = a_{D+1}
    // in the unknown coefficient vector c. Free columns get value 0 in the
    // particular solution; each free column contributes one kernel basis
    // vector with a 1 in its own coordinate.
    const std::size_t ncols = dim_ + 1;
    std::vector<std::size_t> free_cols;
    for (std::size_t col = 0; col < ncols; ++col) {
        if (pivot_of_col_[col] < 0) free_cols.push_back(col);
    }

    EquationSystem es;
    es.dim = dim_;
    es.count = 1 + free_cols.size();
    es.coeffs.assign(es.count * ncols, 0);

    FpScalar* particular = es.coeffs.data();
    for (std::size_t col = 0; col < ncols; ++col) {
        const int k = pivot_of_col_[col];
        if (k >= 0) particular[col] = rows_[static_cast<std::size_t>(k)][dim_ + 1];
    }
    for (std::size_t b = 0; b < free_cols.size(); ++b) {
        FpScalar* out = es.coeffs.data() + (b + 1) * ncols;
        const std::size_t f = free_cols[b];
        for (std::size_t col = 0; col < ncols; ++col) {
            const int k = pivot_of_col_[col];
            const FpScalar basis =
                k >= 0 ? mod_.neg(rows_[static_cast<std::size_t>(k)][f]) : (col == f ? 1u : 0u);
            out[col] = mod_.add(particular[col], basis);
        }
    }
    return es;
}

FpVector EchelonForm::coefficient_vector() const {
    if (rows_.size() != dim_ + 1) throw RankDeficient{};
    FpVector c(dim_ + 1);
    for (std::size_t col = 0; col <= dim_; ++col) {
        const int k = pivot_of_col_[col];
        c[col] = rows_[static_cast<std::size_t>(k)][dim_ + 1];
    }
    return c;
}

}  // namespace plr
