#include "deltaderive/hermitian.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dd {

Bimodule restriction_of_regular(const Algebra& ambient, const std::vector<QVec>& jbasis) {
    if (!is_commutative(ambient)) throw std::invalid_argument("ambient must be commutative");
    RowSpace span = span_of(ambient.dim, jbasis);
    const int dj = span.dim();
    auto jalg = std::make_shared<Algebra>(dj, ambient.label + "|sub");
    for (int s = 0; s < dj; ++s)
        for (int t = 0; t < dj; ++t) {
            auto coords = span.coords(ambient.mul(span.basis()[s], span.basis()[t]));
            if (!coords) throw std::domain_error("jbasis does not span a subalgebra");
            for (int k = 0; k < dj; ++k) jalg->c(s, t, k) = (*coords)[k];
        }
    auto u = find_unit(*jalg);
    if (!u) throw std::domain_error("subalgebra has no unit");
    jalg->unit = *u;

    Bimodule m(jalg, ambient.dim, ambient.label + "/J-restriction");
    QVec ev(ambient.dim, Rational(0));
    for (int i = 0; i < dj; ++i)
        for (int v = 0; v < ambient.dim; ++v) {
            ev[v] = 1;
            QVec img = ambient.mul(span.basis()[i], ev);
            ev[v] = 0;
            for (int w = 0; w < ambient.dim; ++w) m.a(i, v, w) = img[w];
        }
    return m;
}

HermitianDecomposition hermitian_decomposition(int n) {
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    AlgebraWithInvolution oct = octonion_algebra();
    HermitianJordanResult h = hermitian_jordan(oct.algebra, oct.involution, n);
    if (h.splus_dim != 1) throw std::logic_error("unexpected S+(O) dimension");
    const int npairs = n * (n - 1) / 2;
    const int dim = h.algebra.dim;
    if (dim != n + 4 * n * (n - 1)) throw std::logic_error("unexpected Hermitian dimension");

    HermitianDecomposition out;
    out.ambient = h.algebra;
    out.embedding = h.embedding;

    // index layout of h: n diagonal cells, then for each pair (i<j) the 8
    // octonion coordinates
    auto unit_vec = [&](int idx) {
        QVec v(dim, Rational(0));
        v[idx] = 1;
        return v;
    };
    // M_n^+(Q): diagonal cells plus the off-diagonal e_0-components
    for (int i = 0; i < n; ++i) out.mnplus_basis.push_back(unit_vec(i));
    for (int q = 0; q < npairs; ++q) out.mnplus_basis.push_back(unit_vec(n + q * 8));

    out.ambient_module = restriction_of_regular(out.ambient, out.mnplus_basis);
    out.jordan_part =
        Submodule{span_of(dim, out.mnplus_basis).basis()};
    for (int p = 1; p <= 7; ++p) {
        std::vector<QVec> basis;
        for (int q = 0; q < npairs; ++q) basis.push_back(unit_vec(n + q * 8 + p));
        out.octonion_parts.push_back(Submodule{span_of(dim, basis).basis()});
    }

    // invariance (restrict_bimodule throws otherwise) and irreducibility
    auto check = [&](const Submodule& s, const char* what, int expect) {
        if (s.dim() != expect) throw std::logic_error(std::string(what) + ": wrong dimension");
        Bimodule piece = restrict_bimodule(out.ambient_module, s.basis, what);
        if (!is_irreducible(piece)) throw std::logic_error(std::string(what) + ": reducible");
    };
    check(out.jordan_part, "Mn+ piece", n * (n + 1) / 2);
    for (int p = 1; p <= 7; ++p)
        check(out.octonion_parts[p - 1], ("Mn- x e" + std::to_string(p)).c_str(), npairs);
    return out;
}

ChallengeReport delta_challenged_certificate(const Algebra& ambient,
                                             const std::vector<QVec>& jbasis) {
    SubalgebraResult closure = subalgebra_closure(ambient, jbasis);
    Bimodule full = restriction_of_regular(ambient, closure.basis);
    RowSpace jspan = span_of(ambient.dim, closure.basis);

    ChallengeReport rep;
    auto pieces = decompose(full);
    rep.pieces = static_cast<int>(pieces.size());
    for (size_t k = 0; k < pieces.size(); ++k) {
        std::string label = "piece#" + std::to_string(k) + " dim " +
                            std::to_string(pieces[k].dim());
        Bimodule sub = restrict_bimodule(full, pieces[k].basis, label);
        DerivationSpace half_space = derivations_at(sub, half());
        int d = half_space.dimension();
        rep.piece_half_dims.emplace_back(label, d);

        bool is_j_copy =
            pieces[k].dim() == jspan.dim() &&
            std::all_of(pieces[k].basis.begin(), pieces[k].basis.end(),
                        [&](const QVec& v) { return jspan.contains(v); });
        if (is_j_copy) {
            rep.regular_half_dim = d;
            ++rep.regular_pieces;
            // the space must be spanned by a scalar multiple of the identity
            if (d == 1) {
                const QMat& b = half_space.basis.front();
                Rational lambda = b.at(0, 0);
                if (lambda == 0 || b != [&] {
                        QMat s = QMat::identity(sub.dim);
                        for (auto& x : s.data) x *= lambda;
                        return s;
                    }()) {
                    rep.conclusion = "FAIL: Der_{1/2}(J, J) not spanned by the identity";
                    return rep;
                }
            }
        } else if (d != 0) {
            rep.conclusion = "FAIL: nonzero Der_{1/2} on a non-regular piece";
            return rep;
        }
    }
    if (rep.regular_pieces == 1 && rep.regular_half_dim == 1) {
        rep.pass = true;
        rep.conclusion =
            "any 1/2-derivation of the ambient algebra restricts to a scalar on the "
            "subalgebra; by D(x) = x D(1) it is a scalar multiple of the identity; "
            "dim Der_{1/2}(ambient, regular) = 1";
    } else {
        rep.conclusion = "FAIL: regular piece not uniquely certified";
    }
    return rep;
}

}  // namespace dd
