#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "deltaderive/rational.hpp"

namespace dd {

using QVec = std::vector<Rational>;

struct QMat {
    int rows = 0;
    int cols = 0;
    std::vector<Rational> data;

    QMat() = default;
    QMat(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c, Rational(0)) {}
    static QMat identity(int n);

    Rational& at(int i, int j) { return data[static_cast<size_t>(i) * cols + j]; }
    const Rational& at(int i, int j) const { return data[static_cast<size_t>(i) * cols + j]; }

    QVec row(int i) const;
    QVec apply(const QVec& v) const;  // matrix * vector
    QMat operator*(const QMat& o) const;
    QMat operator+(const QMat& o) const;
    QMat operator-(const QMat& o) const;
    bool operator==(const QMat& o) const { return rows == o.rows && cols == o.cols && data == o.data; }
    bool is_zero() const;
};

QVec operator+(const QVec& a, const QVec& b);
QVec operator-(const QVec& a, const QVec& b);
QVec operator*(const Rational& c, const QVec& v);
Rational dot(const QVec& a, const QVec& b);
bool is_zero(const QVec& v);

// Sparse row: (column, value) pairs sorted by column, values nonzero.
using SparseRow = std::vector<std::pair<int, Rational>>;
SparseRow to_sparse(const QVec& v);
Rational dot(const SparseRow& r, const QVec& v);

// --- canonical row spaces -------------------------------------------------

// A subspace kept as a reduced row echelon basis. Canonical: two equal
// subspaces produce identical bases regardless of insertion order.
class RowSpace {
public:
    explicit RowSpace(int ambient) : ambient_(ambient) {}

    int ambient() const { return ambient_; }
    int dim() const { return static_cast<int>(rows_.size()); }
    const std::vector<QVec>& basis() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    // Returns true when v enlarged the space.
    bool insert(QVec v);
    bool contains(const QVec& v) const;
    // Coordinates of v in the echelon basis; nullopt when v is outside.
    std::optional<QVec> coords(const QVec& v) const;
    // Residual of v after reduction against the basis.
    QVec reduce(QVec v) const;

private:
    int ambient_;
    std::vector<QVec> rows_;
    std::vector<int> pivots_;
};

RowSpace span_of(int ambient, const std::vector<QVec>& vectors);

// --- dense reference kernels ----------------------------------------------

// Fraction-free (Bareiss) forward elimination on the integer-cleared matrix,
// followed by rational back-substitution. Serial reference implementation;
// pivot choice: smallest column, then smallest pivot-entry bit length.
std::vector<QVec> nullspace_dense(const QMat& m);

int rank_dense(const QMat& m);

// Bareiss determinant of a square matrix.
Rational det_dense(QMat m);

// One solution of A x = b, if any.
std::optional<QVec> solve_dense(const QMat& a, const QVec& b);

// --- sparse production kernel ----------------------------------------------

struct KernelOptions {
    bool parallel = true;       // OpenMP batch reduction
    bool verify_shortcut = true;  // eliminate a prefix, dot-check the rest
};

// Kernel {x : R x = 0} of a sparse row system. Deterministic: output does not
// depend on threading. Kernel vectors are normalized with free coordinate 1.
std::vector<QVec> kernel_sparse(const std::vector<SparseRow>& rows, int ncols,
                                const KernelOptions& opt = {});

// One solution of an inhomogeneous sparse system. Each row spans columns
// 0..ncols, with column ncols holding the constant term: the equation is
// sum_j row[j] x_j + row[ncols] = 0. Free unknowns are set to zero.
// Returns nullopt when the system is inconsistent.
std::optional<QVec> solve_augmented_sparse(const std::vector<SparseRow>& rows, int ncols,
                                           const KernelOptions& opt = {});

}  // namespace dd
