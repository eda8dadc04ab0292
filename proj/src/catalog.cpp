#include "deltaderive/catalog.hpp"

#include <stdexcept>

#include "deltaderive/clifford.hpp"
#include "deltaderive/constructions.hpp"
#include "deltaderive/hermitian.hpp"

namespace dd {

namespace {

bool matches(const CatalogEntry& e, const std::string& filter) {
    if (filter.empty()) return true;
    return e.name().find(filter) != std::string::npos ||
           e.family.find(filter) != std::string::npos;
}

std::vector<QVec> eigenbasis(int dim, const Involution& k, int sign) {
    RowSpace s(dim);
    QVec e(dim, Rational(0));
    for (int i = 0; i < dim; ++i) {
        e[i] = 1;
        QVec img = k.apply(e);
        e[i] = 0;
        QVec v(dim, Rational(0));
        v[i] = 1;
        s.insert(half() * (v + Rational(sign) * img));
    }
    return s.basis();
}

std::vector<QVec> full_basis(int dim) {
    std::vector<QVec> b;
    QVec e(dim, Rational(0));
    for (int i = 0; i < dim; ++i) {
        e[i] = 1;
        b.push_back(e);
        e[i] = 0;
    }
    return b;
}

void add(std::vector<CatalogEntry>& out, const std::string& filter, CatalogEntry e) {
    if (matches(e, filter)) out.push_back(std::move(e));
}

}  // namespace

const char* case_v_note() {
    return "classification case (v), second-kind involutions over a quadratic extension of "
           "the center, is out of scope: over an extension of the ground field these "
           "algebras and bimodules are isomorphic to those of the full-matrix case.";
}

std::vector<Rational> probe_deltas() {
    RationalStream rng(0xC0FFEEull);
    std::vector<Rational> out;
    while (out.size() < 5) {
        Rational d = rng.next_rational();
        if (d == 0 || d == 1 || d == half()) continue;
        out.push_back(d);
    }
    return out;
}

std::vector<CatalogEntry> catalog_entries(const std::string& filter) {
    std::vector<CatalogEntry> out;

    // (i) the ground field
    {
        auto q = std::make_shared<Algebra>(rational_algebra());
        add(out, filter,
            CatalogEntry{"q", "regular", "rationals", regular_bimodule(q), true, false, 1, ""});
    }

    // (ii) J(V,f), identity gram, every piece of the Clifford catalog
    for (int d = 2; d <= 5; ++d) {
        JvfCatalog cat = jvf_clifford_module_catalog(d, default_jvf_gram(d));
        for (auto& piece : cat.pieces) {
            bool reg = piece.module.regular;
            add(out, filter,
                CatalogEntry{"jvf" + std::to_string(d), piece.label, "jvf",
                             std::move(piece.module), reg, false, reg ? 1 : 0, ""});
        }
    }

    // (iii) full matrix algebras M_n(Q)^(+)
    for (int n = 2; n <= 3; ++n) {
        const std::string an = "m" + std::to_string(n) + "full";
        MatrixAlgebraResult mm = matrix_algebra(rational_algebra(), n,
                                                Involution{QMat::identity(1)});
        auto u = std::make_shared<Algebra>(mm.algebra);
        const Involution& tr = *mm.involution;
        auto basis = full_basis(u->dim);

        Bimodule plain = envelope_bimodule(u, basis, EnvelopeAction::plain);
        plain.regular = true;
        add(out, filter, CatalogEntry{an, "regular", "full-matrix", std::move(plain), true,
                                      false, 1, ""});

        Bimodule b1 = envelope_bimodule(u, basis, EnvelopeAction::twisted, tr);
        auto uop = std::make_shared<Algebra>(opposite(*u));
        Bimodule b2 = envelope_bimodule(uop, basis, EnvelopeAction::twisted, tr);
        for (int sign : {+1, -1}) {
            auto eig = eigenbasis(u->dim, tr, sign);
            const std::string s = sign > 0 ? "S+" : "S-";
            add(out, filter,
                CatalogEntry{an, s + "b1", "full-matrix",
                             restrict_bimodule(b1, eig, s + "(b1)"), false, false, 0,
                             "action (ab + b a^K)/2 on " + s});
            add(out, filter,
                CatalogEntry{an, s + "b2", "full-matrix",
                             restrict_bimodule(b2, eig, s + "(b2)"), false, false, 0,
                             "action (a^K b + ba)/2 via the opposite algebra"});
        }
    }

    // (iv) symmetric matrices M_n^+(Q)
    for (int n = 2; n <= 4; ++n) {
        const std::string an = "m" + std::to_string(n) + "plus";
        MatrixAlgebraResult mm = matrix_algebra(rational_algebra(), n,
                                                Involution{QMat::identity(1)});
        auto u = std::make_shared<Algebra>(mm.algebra);
        const Involution& tr = *mm.involution;
        Bimodule amb = envelope_bimodule(u, eigenbasis(u->dim, tr, +1), EnvelopeAction::plain);
        Bimodule reg = restrict_bimodule(amb, eigenbasis(u->dim, tr, +1), "S+");
        reg.regular = true;
        add(out, filter,
            CatalogEntry{an, "regular", "symmetric", std::move(reg), true, false, 1, ""});
        add(out, filter,
            CatalogEntry{an, "S-", "symmetric",
                         restrict_bimodule(amb, eigenbasis(u->dim, tr, -1), "S-"), false,
                         false, 0, ""});
    }

    // (iv) the symplectic-involution algebra inside M_4(Q), dim 6
    {
        MatrixAlgebraResult mm = matrix_algebra(rational_algebra(), 4,
                                                Involution{QMat::identity(1)});
        auto u = std::make_shared<Algebra>(mm.algebra);
        QMat p(4, 4);
        p.at(0, 2) = 1;
        p.at(1, 3) = 1;
        p.at(2, 0) = -1;
        p.at(3, 1) = -1;
        Involution symp = transpose_involution(4, p);
        auto splus = eigenbasis(u->dim, symp, +1);
        if (static_cast<int>(splus.size()) != 6)
            throw std::logic_error("symplectic S+ must have dimension 6");
        Bimodule amb = envelope_bimodule(u, splus, EnvelopeAction::plain);
        Bimodule reg = restrict_bimodule(amb, splus, "S+symp");
        reg.regular = true;
        add(out, filter,
            CatalogEntry{"symp6", "regular", "symplectic", std::move(reg), true, false, 1, ""});
        add(out, filter,
            CatalogEntry{"symp6", "S-", "symplectic",
                         restrict_bimodule(amb, eigenbasis(u->dim, symp, -1), "S-symp"),
                         false, false, 0, ""});
    }

    // (vi) the Albert algebra, regular bimodule only
    if (matches(CatalogEntry{"albert", "regular", "albert"}, filter)) {
        AlgebraWithInvolution oct = octonion_algebra();
        HermitianJordanResult h = hermitian_jordan(oct.algebra, oct.involution, 3);
        auto j = std::make_shared<Algebra>(std::move(h.algebra));
        add(out, filter,
            CatalogEntry{"albert", "regular", "albert", regular_bimodule(j), true, true, 1,
                         "the only unital irreducible bimodule is the regular one"});
    }

    return out;
}

namespace {

bool is_identity_basis(const DerivationSpace& s) {
    return s.dimension() == 1 && s.module.dim == s.module.j->dim &&
           s.basis.front() == QMat::identity(s.module.dim);
}

void composite_check(WhiteheadReport& rep) {
    MatrixAlgebraResult mm = matrix_algebra(rational_algebra(), 2,
                                            Involution{QMat::identity(1)});
    Involution tr = *mm.involution;
    EigenspaceResult sym = fixed_space(mm.algebra, tr, +1);
    if (!sym.induced) throw std::logic_error("M2+ not closed");
    auto j = std::make_shared<Algebra>(direct_sum(*sym.induced, rational_algebra()));
    Bimodule reg = regular_bimodule(j);

    for (const Rational& d : {Rational(1), half()}) {
        // ideal-sum lemma path (internally compared against the direct solve)
        DerivationSpace tuple = direct_sum_algebra_derivations({sym.induced->dim, 1}, reg, d);
        // module-sum lemma path over the splitter's decomposition
        auto pieces = decompose(reg);
        std::vector<Bimodule> restricted;
        for (size_t k = 0; k < pieces.size(); ++k)
            restricted.push_back(restrict_bimodule(reg, pieces[k].basis,
                                                   "part#" + std::to_string(k)));
        std::vector<const Bimodule*> parts;
        for (const auto& r : restricted) parts.push_back(&r);
        SplitReport split = split_by_module_decomposition(parts, d);
        bool ok = split.total_dim == tuple.dimension();
        rep.rows.push_back(WhiteheadRow{"composite m2plus(+)q/regular", d, split.total_dim, ok,
                                        "both direct-sum lemma paths"});
        if (!ok) {
            rep.pass = false;
            if (rep.failure.empty())
                rep.failure = "composite semisimple example disagrees between lemma paths";
        }
    }
}

}  // namespace

WhiteheadReport whitehead_report(const std::vector<CatalogEntry>& entries, bool run_composite) {
    WhiteheadReport rep;
    auto fail = [&](const std::string& why) {
        rep.pass = false;
        if (rep.failure.empty()) rep.failure = why;
    };
    std::vector<Rational> probes = probe_deltas();

    for (const auto& e : entries) {
        // delta = 1/2: dimension 1 with identity basis on the regular module
        DerivationSpace s_half = derivations_at(e.module, half());
        bool ok_half = e.regular ? is_identity_basis(s_half) : s_half.dimension() == 0;
        rep.rows.push_back(WhiteheadRow{e.name(), half(), s_half.dimension(), ok_half,
                                        e.regular ? "regular: identity map" : ""});
        if (!ok_half) fail(e.name() + " at delta=1/2");

        HalfFormReport hf = check_half_form(s_half);
        if (!hf.pass()) fail(e.name() + ": half-form identities");

        // delta = 1: must match the inner-derivation span on regular modules
        DerivationSpace s_one = derivations_at(e.module, Rational(1));
        bool ok_one = true;
        std::string note;
        if (e.regular) {
            int inner = static_cast<int>(inner_derivation_space(*e.module.j).size());
            ok_one = s_one.dimension() == inner;
            note = "inner-derivation dim " + std::to_string(inner);
        }
        rep.rows.push_back(WhiteheadRow{e.name(), Rational(1), s_one.dimension(), ok_one, note});
        if (!ok_one) fail(e.name() + " at delta=1");

        // probe deltas: always zero
        for (const Rational& d : probes) {
            int dim = derivations_at(e.module, d).dimension();
            rep.rows.push_back(WhiteheadRow{e.name(), d, dim, dim == 0, "probe"});
            if (dim != 0) fail(e.name() + " at probe delta");
        }
    }

    if (run_composite) composite_check(rep);
    return rep;
}

}  // namespace dd
