#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "deltaderive/algebra.hpp"

namespace dd {

// Unital symmetric Jordan bimodule over J, as an action tensor:
// e_i . m_v = sum_w action[i][v][w] m_w.
struct Bimodule {
    std::shared_ptr<const Algebra> j;
    int dim = 0;
    std::vector<Rational> action;  // (i*dim + v)*dim + w, i over J, v/w over M
    std::string label;
    bool regular = false;

    // Associative envelope context, kept when the module was realized inside
    // an associative algebra; enables the delta = 1/2 structural identities.
    struct Envelope {
        std::shared_ptr<const Algebra> u;
        std::optional<Involution> twist;       // K of the (ab + b a^K)/2 action
        std::vector<QVec> j_embedding;         // J basis as elements of U
        std::vector<QVec> module_embedding;    // module basis as elements of U
    };
    std::optional<Envelope> envelope;

    Bimodule() = default;
    Bimodule(std::shared_ptr<const Algebra> alg, int m_dim, std::string name = "");

    const Rational& a(int i, int v, int w) const {
        return action[(static_cast<size_t>(i) * dim + v) * dim + w];
    }
    Rational& a(int i, int v, int w) {
        return action[(static_cast<size_t>(i) * dim + v) * dim + w];
    }

    QVec act_basis(int i, const QVec& m) const;      // e_i . m
    QVec act(const QVec& x, const QVec& m) const;    // x . m
    QMat action_matrix(int i) const;
    bool unit_acts_as_identity() const;
};

struct Submodule {
    std::vector<QVec> basis;  // echelonized, in the parent module's coordinates
    int dim() const { return static_cast<int>(basis.size()); }
};

// J acting on itself; requires a unit.
Bimodule regular_bimodule(std::shared_ptr<const Algebra> j);

enum class EnvelopeAction { plain, twisted };

// Restriction to J = span(emb) of the regular bimodule of U^(+) (plain,
// a.b = (ab+ba)/2), or the twisted bimodule a.b = (ab + b a^K)/2. The module
// space is all of U; emb must span a o-closed subspace containing the unit.
Bimodule envelope_bimodule(std::shared_ptr<const Algebra> u, const std::vector<QVec>& emb,
                           EnvelopeAction kind,
                           const std::optional<Involution>& twist = std::nullopt);

// The induced module on an invariant subspace; throws when the subspace is
// not invariant.
Bimodule restrict_bimodule(const Bimodule& m, const std::vector<QVec>& basis,
                           const std::string& label = "");

// Split-null-extension criterion: J + M with (x,u)(y,v) = (x o y, x.v + y.u)
// satisfies the linearized Jordan identity iff M is a Jordan bimodule.
// Evaluated blockwise; requires that J itself passes linearized_jordan.
// Fails immediately when the unit does not act as the identity.
bool verify_jordan_bimodule(const Bimodule& m);

// Explicit split null extension (testing reference for the blockwise check).
Algebra split_null_extension(const Bimodule& m);

// Smallest invariant subspace containing the seeds.
Submodule submodule_spin(const Bimodule& m, const std::vector<QVec>& seeds);

// Spin exhaustion over the standard basis plus dim M pseudo-random vectors.
bool is_irreducible(const Bimodule& m);

// Dimension of {X : X commutes with every action matrix}; 1 certifies
// irreducibility.
int commutant_dimension(const Bimodule& m);

// Invariant W' with M = W + W' (direct), via an action-commuting projection
// onto W. Throws when no such projection exists.
Submodule invariant_complement(const Bimodule& m, const Submodule& w);

// Full decomposition into irreducible invariant subspaces ("MeatAxe-lite"):
// spin basis vectors, take a minimal proper invariant subspace, complement,
// recurse; falls back to seeded random spins, then to the commutant-rank
// certificate. Deterministic for a fixed seed.
std::vector<Submodule> decompose(const Bimodule& m, std::uint64_t seed = default_seed());

// Block-diagonal direct sum of modules over the same algebra.
Bimodule direct_sum_modules(const std::vector<const Bimodule*>& parts);

}  // namespace dd
