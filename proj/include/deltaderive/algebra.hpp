#pragma once

#include <optional>
#include <string>
#include <vector>

#include "deltaderive/linalg.hpp"
#include "deltaderive/rational.hpp"

namespace dd {

// Finite-dimensional algebra over Q given by structure constants:
// e_i * e_j = sum_k table[i][j][k] e_k.
struct Algebra {
    int dim = 0;
    std::vector<Rational> table;  // dim^3, layout (i*dim + j)*dim + k
    std::optional<QVec> unit;
    std::string label;

    Algebra() = default;
    Algebra(int d, std::string name = "");

    const Rational& c(int i, int j, int k) const {
        return table[(static_cast<size_t>(i) * dim + j) * dim + k];
    }
    Rational& c(int i, int j, int k) {
        return table[(static_cast<size_t>(i) * dim + j) * dim + k];
    }

    QVec basis_product(int i, int j) const;
    QVec mul(const QVec& x, const QVec& y) const;

    // L_x: y -> x*y and R_x: y -> y*x as dim x dim matrices.
    QMat left_mult(int i) const;
    QMat left_mult(const QVec& x) const;
    QMat right_mult(const QVec& x) const;

    // Checks unit * e_i = e_i * unit = e_i for all i.
    bool unit_valid() const;
};

struct Element {
    const Algebra* algebra = nullptr;
    QVec coeffs;
};

Element multiply(const Algebra& a, const Element& x, const Element& y);

struct IdentityFlags {
    bool commutative = false;
    bool associative = false;
    bool unital = false;
    bool linearized_jordan = false;
};

bool is_commutative(const Algebra& a);
// Associativity on all basis triples. Uses a scaled 64-bit kernel when the
// table fits, the exact rational path otherwise.
bool is_associative(const Algebra& a);
// The Jordan identity through its full linearization on basis quadruples
// (equivalent over Q); false for non-commutative tables.
bool is_linearized_jordan(const Algebra& a);
// Two-sided unit, either the stored one (validated) or solved for.
std::optional<QVec> find_unit(const Algebra& a);

IdentityFlags check_identities(const Algebra& a);

// Serial all-rational implementation, kept as the testing reference for the
// fast kernel.
IdentityFlags check_identities_reference(const Algebra& a);

// Antiautomorphism of order 2, given by its matrix on the basis.
struct Involution {
    QMat mat;

    QVec apply(const QVec& x) const { return mat.apply(x); }
};

// matrix^2 = id and sigma(xy) = sigma(y)sigma(x) on all basis pairs.
bool involution_valid(const Algebra& a, const Involution& s);

// x o y = (xy + yx)/2. Requires associativity.
Algebra plus_algebra(const Algebra& a);

Algebra opposite(const Algebra& a);

struct EigenspaceResult {
    std::vector<QVec> basis;          // echelonized, canonical
    std::optional<Algebra> induced;   // for sign=+1: the o-product restricted
};

// Basis of the (+1 or -1)-eigenspace of an involution; for sign=+1 also the
// induced Jordan algebra when the subspace is closed under the o-product.
EigenspaceResult fixed_space(const Algebra& a, const Involution& sigma, int sign,
                             bool induced_product = true);

Algebra direct_sum(const Algebra& a1, const Algebra& a2);

struct SubalgebraResult {
    std::vector<QVec> basis;  // echelonized vectors in the ambient algebra
    Algebra algebra;          // induced structure constants
};

// Smallest subspace containing the generators and closed under multiplication.
SubalgebraResult subalgebra_closure(const Algebra& a, const std::vector<QVec>& gens);

// Basis of span{[L_a, L_b]} over basis pairs; each element verified to be an
// ordinary derivation of the (commutative) algebra.
std::vector<QMat> inner_derivation_space(const Algebra& j);

}  // namespace dd
