#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "deltaderive/bimodule.hpp"

namespace dd {

// A scalar multiple of a basis monomial u_{i1} ... u_{ik}, i1 < ... < ik,
// stored as the bitmask {i1-1, ..., ik-1}. The empty mask is the unit.
struct Blade {
    std::uint32_t mask = 0;
    Rational coeff = Rational(0);
};

// C(V,f) on an orthogonal basis with f(u_i,u_i) = f_diag[i-1].
class CliffordAlgebra {
public:
    explicit CliffordAlgebra(std::vector<Rational> f_diag);

    int n() const { return n_; }
    const std::vector<Rational>& f_diag() const { return f_diag_; }
    std::shared_ptr<const Algebra> algebra() const { return alg_; }

    // index of a blade in the underlying 2^n-dimensional algebra
    static int blade_index(std::uint32_t mask) { return static_cast<int>(mask); }
    // a degree-1 vector (coords in u_1..u_n) as an algebra element
    QVec embed_vector(const QVec& v) const;
    Rational form(const QVec& x, const QVec& y) const;

private:
    int n_;
    std::vector<Rational> f_diag_;
    std::shared_ptr<Algebra> alg_;
};

// u_S u_T: index set S triangle T, coefficient = transposition sign times
// prod_{i in S cap T} f(u_i,u_i).
Blade blade_product(const CliffordAlgebra& c, std::uint32_t s, std::uint32_t t);

// Checks y_1...y_k x = (-1)^k x y_1...y_k
//                      + 2 sum_i (-1)^{k+i} f(x,y_i) y_1...^y_i...y_k
// with both sides expanded through the algebra table.
bool verify_product_lemma(const CliffordAlgebra& c, const QVec& x, const std::vector<QVec>& ys);

// u_i (u_1...u_k) u_i, i is 1-based; computed with blade_product and verified
// against the closed form (-1)^{k+1} f_i u_1...u_k for i <= k and
// (-1)^k f_i u_1...u_k otherwise.
Blade sandwich_sign(const CliffordAlgebra& c, int i, int k);

struct JvfPiece {
    std::string label;
    std::vector<QVec> basis;  // inside C(V^ev), echelonized
    Bimodule module;          // restricted action of J(V,f)
};

struct JvfCatalog {
    std::shared_ptr<CliffordAlgebra> clifford;  // on V^ev
    Bimodule ambient;                           // all of C(V^ev) as a J(V,f)-module
    std::vector<JvfPiece> pieces;
};

// The invariant subspaces of C(V^ev,f) under x.c = (xc+cx)/2, x in
// J(V,f) = K1 + V. gram holds the diagonal values f(u_i,u_i); for odd d the
// extra generator u gets f(u,u) = 1. The two half-spin constituents are found
// by the generic module splitter and checked for dimension binom(2m,m)/2.
JvfCatalog jvf_clifford_module_catalog(int d, const std::vector<Rational>& gram);

// Identity for even d; alternating signs for odd d, where a definite form
// leaves the half-spin pieces conjugate over a quadratic extension instead of
// rational.
std::vector<Rational> default_jvf_gram(int d);

}  // namespace dd
