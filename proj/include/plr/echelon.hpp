#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "plr/fp.hpp"

namespace plr {

enum class InsertOutcome {
    Inserted,      // row count grew by one
    Dependent,     // vector reduced to zero; state unchanged
    Inconsistent,  // reduced pivot landed in the last column; state unchanged
};

// Reduced coefficient vectors defining the affine hull of the stored points:
// one particular solution followed by particular + kernel basis vectors.
// Each row has length dim + 1; a point (x, y) lies on the hull iff
// y = <c, x> for every row c.
struct EquationSystem {
    std::size_t dim = 0;
    std::size_t count = 0;
    std::vector<FpScalar> coeffs;  // count rows of dim + 1, row-major

    std::span<const FpScalar> row(std::size_t j) const {
        return {coeffs.data() + j * (dim + 1), dim + 1};
    }
};

bool es_contains(const PrimeModulus& m, const EquationSystem& es,
                 std::span<const FpScalar> x, FpScalar y);

// Incremental fully reduced row echelon state over F_p^(D+2), built from
// sample vectors (x, 1 | y). Every row's pivot entry is 1, all other rows
// are 0 in pivot columns, and no pivot ever sits in the last column.
class EchelonForm {
public:
    EchelonForm(PrimeModulus mod, std::size_t dim)
        : mod_(mod), dim_(dim), pivot_of_col_(dim + 2, -1) {}

    const PrimeModulus& modulus() const noexcept { return mod_; }
    std::size_t dim() const noexcept { return dim_; }
    std::size_t width() const noexcept { return dim_ + 2; }
    std::size_t rows() const noexcept { return rows_.size(); }
    std::span<const FpScalar> row(std::size_t k) const { return rows_[k]; }
    int pivot_row_of(std::size_t col) const { return pivot_of_col_[col]; }

    // v minus its components along the stored rows; zero in every pivot column.
    FpVector reduce(std::span<const FpScalar> v) const;

    // Insert the sample vector (x, 1 | y), keeping full reduction.
    InsertOutcome insert(std::span<const FpScalar> x, FpScalar y);

    // Equation system of the affine hull of the stored samples; its size is
    // dim + 2 - rows(). Throws EmptyForm when no row has been inserted.
    EquationSystem equation_system() const;

    // The unique c with y = <c, x> for every stored sample; requires
    // rows() == dim + 1, otherwise throws RankDeficient.
    FpVector coefficient_vector() const;

private:
    PrimeModulus mod_;
    std::size_t dim_;
    std::vector<FpVector> rows_;        // unordered; pivot map gives structure
    std::vector<int> pivot_of_col_;     // column -> row index, -1 when none
};

}  // namespace plr
