#pragma once

#include <optional>
#include <utility>

#include "deltaderive/algebra.hpp"

namespace dd {

// The rationals as a 1-dimensional algebra.
Algebra rational_algebra();

struct AlgebraWithInvolution {
    Algebra algebra;
    Involution involution;
};

// One Cayley-Dickson doubling with parameter gamma, using the convention
// (a,b)(c,d) = (ac + gamma * conj(d) b, da + b conj(c)); the doubled
// conjugation is (a,b) -> (conj(a), -b).
AlgebraWithInvolution cayley_dickson(const Algebra& a, const Involution& conj,
                                     const Rational& gamma);

// Three doublings of Q with gamma = -1: the octonions with their standard
// conjugation. Basis order: 1, e1, ..., e7.
AlgebraWithInvolution octonion_algebra();
AlgebraWithInvolution quaternion_algebra();

struct MatrixAlgebraResult {
    Algebra algebra;
    std::optional<Involution> involution;  // transpose-conjugate, when given one on A
};

// M_n(A), entrywise products through A's (possibly nonassociative) table.
// Basis order: (row, col, A-basis), i.e. index (r*n + s)*dim(A) + p.
MatrixAlgebraResult matrix_algebra(const Algebra& a, int n,
                                   const std::optional<Involution>& conj = std::nullopt);

// Product of two elements of M_n(A) in matrix_algebra coordinates, without
// materializing the n^2 dim(A) sized table.
QVec matrix_algebra_mul(const Algebra& a, int n, const QVec& x, const QVec& y);

// J(V,f) = Q1 + V with x o y = f(x,y) 1. Basis: unit first, then V.
Algebra bilinear_form_jordan(const QMat& gram);

// Hermitian n x n matrices over (A, conj) under the symmetrized matrix
// product. Basis order: diagonal cells (carrying the S+(A) basis) by row,
// then off-diagonal cells i<j each carrying the full A basis.
struct HermitianJordanResult {
    Algebra algebra;
    // basis vectors inside M_n(A) coordinates, in canonical order
    std::vector<QVec> embedding;
    int splus_dim = 0;  // dim S+(A, conj)
};

HermitianJordanResult hermitian_jordan(const Algebra& a, const Involution& conj, int n);

// X -> P X^T P^{-1} on M_n(Q); P = identity gives the transpose.
Involution transpose_involution(int n, const QMat& p);

}  // namespace dd
