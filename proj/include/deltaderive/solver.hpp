#pragma once

#include <optional>
#include <string>
#include <vector>

#include "deltaderive/bimodule.hpp"
#include "deltaderive/delta_poly.hpp"

namespace dd {

// Basis of {D : J -> M linear, D(x o y) = delta (D(x).y + x.D(y))}.
// Basis matrices are dim M x dim J; column i is D(e_i).
struct DerivationSpace {
    Bimodule module;
    Rational delta;
    std::vector<QMat> basis;

    int dimension() const { return static_cast<int>(basis.size()); }
};

struct SolveOptions {
    // the row set uses unordered basis pairs i <= j; safe only for
    // commutative algebras
    bool unordered_pairs = true;
    KernelOptions kernel;
};

// True when D satisfies the defining identity on every basis pair.
bool verify_delta_derivation(const Bimodule& m, const Rational& delta, const QMat& d);

DerivationSpace derivations_at(const Bimodule& m, const Rational& delta,
                               const SolveOptions& opt = {});

// The same linear system with delta kept symbolic; entries have degree <= 1.
struct Pencil {
    int nrows = 0;
    int ncols = 0;  // = dim M * dim J, unknown D[w][i] at column w*dimJ + i
    std::vector<std::vector<DeltaPoly>> rows;
};

Pencil build_pencil(const Bimodule& m, bool unordered_pairs = true);

// Kernel dimension of the pencil at a fixed value (reference path sharing no
// code with derivations_at).
int pencil_dimension_at(const Pencil& p, const Rational& delta);

struct SweepReport {
    int generic_dim = 0;
    std::vector<std::pair<Rational, int>> exceptional;  // (delta, kernel dim)
    std::vector<DeltaPoly> leftover_factors;            // unresolved pivot factors
};

// Fraction-free elimination over Q[delta]; rational roots of the pivots are
// the only values where the rank can drop, and each candidate is confirmed by
// an exact fixed-delta solve. Factors whose roots cannot be certified rational
// are reported, never dropped.
SweepReport exceptional_deltas(const Bimodule& m, const SolveOptions& opt = {});

struct HalfFormReport {
    bool delta_identity = true;   // every basis D satisfies the defining identity
    bool d_of_x_is_x_m = true;    // D(x) = x . D(1)
    bool envelope_applicable = false;
    bool twisted = false;
    std::optional<bool> eq2, eq_xmx, eq_comm;  // plain envelope action
    std::optional<bool> eqK, eqK2;             // twisted envelope action

    bool pass() const {
        auto ok = [](const std::optional<bool>& b) { return !b || *b; };
        return delta_identity && d_of_x_is_x_m && ok(eq2) && ok(eq_xmx) && ok(eq_comm) &&
               ok(eqK) && ok(eqK2);
    }
};

// Structural identities every 1/2-derivation must satisfy; diagnostic, never
// throws. Requires s.delta = 1/2 and a unital algebra.
HalfFormReport check_half_form(const DerivationSpace& s);

struct SplitReport {
    Rational delta;
    int total_dim = 0;
    std::vector<int> part_dims;
};

// dim Der_delta(J, sum parts) = sum dim Der_delta(J, part); both sides
// computed independently; a mismatch throws (the lemma is unconditional).
SplitReport split_by_module_decomposition(const std::vector<const Bimodule*>& parts,
                                          const Rational& delta);

// J = ideal direct sum with the given block dimensions; the space of tuples
// (D_1,...,D_n) of per-ideal delta-derivations subject to
// D_i(x) . y + x . D_j(y) = 0 for x, y in different ideals. Verified to agree
// with the direct solve on the sum. delta = 0 is rejected.
DerivationSpace direct_sum_algebra_derivations(const std::vector<int>& block_dims,
                                               const Bimodule& m, const Rational& delta);

}  // namespace dd
