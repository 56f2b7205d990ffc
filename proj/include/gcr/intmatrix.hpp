#ifndef GCR_INTMATRIX_HPP
#define GCR_INTMATRIX_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace gcr {

// Dense matrix of exact integers.
class IntMat {
public:
    IntMat() : rows_(0), cols_(0) {}
    IntMat(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, mpz_class(0)) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    mpz_class& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    const mpz_class& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

    static IntMat identity(size_t n);
    IntMat transpose() const;
    IntMat mul(const IntMat& o) const;
    IntMat hstack(const IntMat& o) const;  // [this | o]

    void swap_rows(size_t i, size_t j);
    void swap_cols(size_t i, size_t j);
    void negate_row(size_t i);
    void negate_col(size_t i);
    void add_row_multiple(size_t dst, size_t src, const mpz_class& q);  // row dst += q*row src
    void add_col_multiple(size_t dst, size_t src, const mpz_class& q);

    bool operator==(const IntMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    std::string to_string() const;

private:
    size_t rows_, cols_;
    std::vector<mpz_class> a_;
};

// U * M * V = diag(d1..dr, 0...) with U, V unimodular and d1 | d2 | ... | dr,
// all di >= 1. factors holds exactly the nonzero diagonal entries.
struct SmithResult {
    std::vector<mpz_class> factors;
    std::optional<IntMat> U, V;
    size_t rank() const { return factors.size(); }
};

SmithResult smith_normal_form(const IntMat& M, bool with_transforms = false);

// Columns form a lattice basis of { x : M x = 0 }.
IntMat kernel_basis(const IntMat& M);

// Basis (full column rank) of the lattice spanned by the columns of P.
IntMat column_lattice_basis(const IntMat& P);

// X with B * X = R, when it exists (B need not be square).
std::optional<IntMat> solve_exact(const IntMat& B, const IntMat& R);

size_t rank_mod_p(const IntMat& M, long p);
size_t rank_rational(const IntMat& M);

// Finitely generated abelian group in invariant-factor form.
struct AbGroup {
    long free_rank = 0;
    std::vector<mpz_class> torsion;  // d1 | d2 | ..., each >= 2

    bool operator==(const AbGroup& o) const {
        return free_rank == o.free_rank && torsion == o.torsion;
    }
    bool is_zero() const { return free_rank == 0 && torsion.empty(); }
    std::string to_string() const;
};

// Z^ambient_rank modulo the lattice spanned by the columns of relations.
AbGroup cokernel(size_t ambient_rank, const IntMat& relation_cols);

}  // namespace gcr

#endif
