#pragma once

#include <string>
#include <vector>

#include "deltaderive/constructions.hpp"
#include "deltaderive/solver.hpp"

namespace dd {

// The regular bimodule of a commutative unital algebra, restricted to the
// subalgebra spanned by jbasis (ambient coordinates). No envelope metadata:
// the ambient need not be associative.
Bimodule restriction_of_regular(const Algebra& ambient, const std::vector<QVec>& jbasis);

struct HermitianDecomposition {
    Algebra ambient;                 // S+(M_n(O), J), dimension n + 4n(n-1)
    std::vector<QVec> embedding;     // ambient basis inside M_n(O)
    std::vector<QVec> mnplus_basis;  // the copy of M_n^+(Q), ambient coordinates
    Bimodule ambient_module;         // ambient as an M_n^+(Q)-bimodule
    Submodule jordan_part;           // regular piece, dim n(n+1)/2
    std::vector<Submodule> octonion_parts;  // 7 copies of M_n^-(Q) indexed by e_1..e_7
};

// S+(M_n(O)) = M_n^+(K) + M_n^-(K) (x) O^-: the closed-form invariant pieces
// under the M_n^+(Q)-action, each verified invariant and irreducible.
// Works for every n >= 2, including n >= 4 where the ambient algebra is not
// Jordan.
HermitianDecomposition hermitian_decomposition(int n);

struct ChallengeReport {
    bool pass = false;
    int pieces = 0;
    int regular_pieces = 0;         // pieces isomorphic to the regular J-module
    int regular_half_dim = 0;       // dim Der_{1/2}(J, J), expected 1
    std::vector<std::pair<std::string, int>> piece_half_dims;
    std::string conclusion;
};

// The restriction argument: decompose ambient as a module over the subalgebra
// J = span(jbasis); certify that the only piece with nonzero Der_{1/2} is the
// embedded copy of J itself (with the identity map as basis). A nonzero
// Der_{1/2} on any other piece fails the certificate.
ChallengeReport delta_challenged_certificate(const Algebra& ambient,
                                             const std::vector<QVec>& jbasis);

}  // namespace dd
