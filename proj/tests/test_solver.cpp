#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "deltaderive/catalog.hpp"
#include "deltaderive/constructions.hpp"
#include "deltaderive/solver.hpp"

using namespace dd;

namespace {

std::shared_ptr<Algebra> sym_algebra(int n) {
    Algebra mn = matrix_algebra(rational_algebra(), n).algebra;
    Involution t = transpose_involution(n, QMat::identity(n));
    return std::make_shared<Algebra>(*fixed_space(mn, t, +1).induced);
}

// antisymmetric n x n matrices as a module over the symmetric ones, with the
// symmetrized matrix product as the action
Bimodule antisym_module(int n) {
    auto mn = std::make_shared<Algebra>(matrix_algebra(rational_algebra(), n).algebra);
    Involution t = transpose_involution(n, QMat::identity(n));
    EigenspaceResult sym = fixed_space(*mn, t, +1);
    Bimodule whole = envelope_bimodule(mn, sym.basis, EnvelopeAction::plain);
    EigenspaceResult anti = fixed_space(*mn, t, -1, false);
    return restrict_bimodule(whole, anti.basis, "antisym");
}

bool is_scalar_identity(const QMat& d) {
    if (d.rows != d.cols) return false;
    Rational lambda = d.at(0, 0);
    for (int i = 0; i < d.rows; ++i)
        for (int j = 0; j < d.cols; ++j)
            if (d.at(i, j) != (i == j ? lambda : Rational(0))) return false;
    return lambda != 0;
}

}  // namespace

TEST_CASE("the rationals: half-derivations are scalars, nothing else survives") {
    auto q = std::make_shared<Algebra>(rational_algebra());
    Bimodule reg = regular_bimodule(q);
    CHECK(derivations_at(reg, half()).dimension() == 1);
    CHECK(derivations_at(reg, rat(1)).dimension() == 0);
    CHECK(derivations_at(reg, rat(-3)).dimension() == 0);
    CHECK(derivations_at(reg, rat(2, 7)).dimension() == 0);

    SweepReport sweep = exceptional_deltas(reg);
    CHECK(sweep.generic_dim == 0);
    REQUIRE(sweep.exceptional.size() == 1);
    CHECK(sweep.exceptional[0].first == half());
    CHECK(sweep.exceptional[0].second == 1);
    CHECK(sweep.leftover_factors.empty());
}

TEST_CASE("symmetric 3x3 matrices: regular module") {
    auto j = sym_algebra(3);
    Bimodule reg = regular_bimodule(j);

    DerivationSpace at_half = derivations_at(reg, half());
    REQUIRE(at_half.dimension() == 1);
    CHECK(is_scalar_identity(at_half.basis[0]));

    DerivationSpace at_one = derivations_at(reg, rat(1));
    CHECK(at_one.dimension() == 3);  // inner derivations, so(3)
    CHECK(at_one.dimension() == static_cast<int>(inner_derivation_space(*j).size()));
    for (const QMat& d : at_one.basis) CHECK(verify_delta_derivation(reg, rat(1), d));

    CHECK(derivations_at(reg, rat(3, 5)).dimension() == 0);
}

TEST_CASE("symmetric 3x3 matrices: antisymmetric module has no half-derivations") {
    auto j = sym_algebra(3);
    Bimodule anti = antisym_module(3);
    REQUIRE(anti.dim == 3);
    CHECK(verify_jordan_bimodule(anti));
    CHECK(derivations_at(anti, half()).dimension() == 0);
    CHECK(derivations_at(anti, rat(-6)).dimension() == 0);
}

TEST_CASE("solver re-verifies its kernel and rejects perturbed matrices") {
    auto j = sym_algebra(2);
    Bimodule reg = regular_bimodule(j);
    DerivationSpace s = derivations_at(reg, half());
    REQUIRE(s.dimension() == 1);
    QMat d = s.basis[0];
    CHECK(verify_delta_derivation(reg, half(), d));
    QMat bad = d;
    bad.at(0, 1) += 1;
    CHECK_FALSE(verify_delta_derivation(reg, half(), bad));
    CHECK_FALSE(verify_delta_derivation(reg, rat(1), d));
}

TEST_CASE("ordered and unordered pair systems agree on commutative algebras") {
    auto j = sym_algebra(2);
    Bimodule reg = regular_bimodule(j);
    SolveOptions ordered;
    ordered.unordered_pairs = false;
    for (const Rational& d : {half(), rat(1), rat(-2), rat(1, 3)})
        CHECK(derivations_at(reg, d).dimension() ==
              derivations_at(reg, d, ordered).dimension());
}

TEST_CASE("pencil evaluation agrees with the fixed-delta solver") {
    auto j = sym_algebra(2);
    Bimodule reg = regular_bimodule(j);
    Bimodule anti = antisym_module(3);
    for (const Bimodule* m : {&reg, &anti}) {
        Pencil p = build_pencil(*m);
        CHECK(p.ncols == m->dim * m->j->dim);
        for (const Rational& d : {half(), rat(1), rat(0), rat(-6), rat(17, 6)})
            CHECK(pencil_dimension_at(p, d) == derivations_at(*m, d).dimension());
    }
}

TEST_CASE("exceptional delta sweep on the regular module of sym(3)") {
    auto j = sym_algebra(3);
    SweepReport sweep = exceptional_deltas(regular_bimodule(j));
    CHECK(sweep.generic_dim == 0);
    REQUIRE(sweep.exceptional.size() == 2);
    CHECK(sweep.exceptional[0].first == half());
    CHECK(sweep.exceptional[0].second == 1);
    CHECK(sweep.exceptional[1].first == rat(1));
    CHECK(sweep.exceptional[1].second == 3);
    CHECK(sweep.leftover_factors.empty());
}

TEST_CASE("exceptional delta sweep finds a delta = 1 only module") {
    // J(V,f) with dim V = 2 acting on the one-dimensional top constituent of
    // its Clifford algebra: V acts as zero, so only the unit equation
    // constrains D and the rank drops exactly at delta = 1.
    auto j = std::make_shared<Algebra>(bilinear_form_jordan(QMat::identity(2)));
    Bimodule triv(j, 1);
    triv.a(0, 0, 0) = 1;
    REQUIRE(verify_jordan_bimodule(triv));
    CHECK(derivations_at(triv, rat(1)).dimension() == 2);
    SweepReport sweep = exceptional_deltas(triv);
    CHECK(sweep.generic_dim == 0);
    REQUIRE(sweep.exceptional.size() == 1);
    CHECK(sweep.exceptional[0].first == rat(1));
    CHECK(sweep.exceptional[0].second == 2);
}

TEST_CASE("half-derivations satisfy the structural identities") {
    // plain envelope: the full matrix algebra M_2(Q) as a Jordan algebra
    auto m2 = std::make_shared<Algebra>(matrix_algebra(rational_algebra(), 2).algebra);
    std::vector<QVec> full;
    for (int i = 0; i < 4; ++i) {
        QVec v(4, Rational(0));
        v[i] = 1;
        full.push_back(v);
    }
    Bimodule plain = envelope_bimodule(m2, full, EnvelopeAction::plain);
    DerivationSpace s = derivations_at(plain, half());
    REQUIRE(s.dimension() == 1);
    HalfFormReport rep = check_half_form(s);
    CHECK(rep.pass());
    CHECK(rep.envelope_applicable);
    CHECK_FALSE(rep.twisted);
    REQUIRE(rep.eq2.has_value());
    CHECK(*rep.eq2);
    REQUIRE(rep.eq_xmx.has_value());
    CHECK(*rep.eq_xmx);
    REQUIRE(rep.eq_comm.has_value());
    CHECK(*rep.eq_comm);

    // twisted envelope: the same algebra with the transpose twist
    Involution t = transpose_involution(2, QMat::identity(2));
    Bimodule twisted = envelope_bimodule(m2, full, EnvelopeAction::twisted, t);
    DerivationSpace st = derivations_at(twisted, half());
    HalfFormReport rept = check_half_form(st);
    CHECK(rept.pass());
    CHECK(rept.twisted);
    if (st.dimension() > 0) {
        REQUIRE(rept.eqK.has_value());
        CHECK(*rept.eqK);
        REQUIRE(rept.eqK2.has_value());
        CHECK(*rept.eqK2);
    }
}

TEST_CASE("half-form report flags a forged derivation basis") {
    auto j = sym_algebra(2);
    Bimodule reg = regular_bimodule(j);
    DerivationSpace s = derivations_at(reg, half());
    REQUIRE(s.dimension() == 1);
    s.basis[0].at(1, 2) += 1;
    HalfFormReport rep = check_half_form(s);
    CHECK_FALSE(rep.delta_identity);
    CHECK_FALSE(rep.pass());
}

TEST_CASE("derivations distribute over module direct sums") {
    auto j = sym_algebra(3);
    Bimodule reg = regular_bimodule(j);
    Bimodule anti = antisym_module(3);
    for (const Rational& d : {half(), rat(1), rat(-5, 2)}) {
        SplitReport rep = split_by_module_decomposition({&reg, &anti}, d);
        REQUIRE(rep.part_dims.size() == 2);
        CHECK(rep.total_dim == rep.part_dims[0] + rep.part_dims[1]);
        CHECK(rep.part_dims[0] == derivations_at(reg, d).dimension());
        CHECK(rep.part_dims[1] == derivations_at(anti, d).dimension());
    }
}

TEST_CASE("derivations of an algebra direct sum assemble from the ideals") {
    auto a = std::make_shared<Algebra>(direct_sum(*sym_algebra(2), rational_algebra()));
    Bimodule reg = regular_bimodule(a);
    DerivationSpace at_half = direct_sum_algebra_derivations({3, 1}, reg, half());
    CHECK(at_half.dimension() == 2);  // one scalar per ideal
    CHECK(at_half.dimension() == derivations_at(reg, half()).dimension());

    DerivationSpace at_one = direct_sum_algebra_derivations({3, 1}, reg, rat(1));
    CHECK(at_one.dimension() == 1);  // so(2) on the symmetric block
    CHECK(at_one.dimension() == derivations_at(reg, rat(1)).dimension());

    CHECK(direct_sum_algebra_derivations({3, 1}, reg, rat(3)).dimension() ==
          derivations_at(reg, rat(3)).dimension());

    CHECK_THROWS_AS(direct_sum_algebra_derivations({3, 1}, reg, rat(0)),
                    std::invalid_argument);
}

TEST_CASE("whitehead report passes on a catalog slice and localizes sabotage") {
    auto entries = catalog_entries("m2plus/");
    REQUIRE(entries.size() == 2);
    WhiteheadReport good = whitehead_report(entries, false);
    CHECK(good.pass);
    CHECK(good.failure.empty());

    // corrupt one action entry of the regular module: the identity map stops
    // being a half-derivation, and the report must name that entry only
    for (auto& e : entries)
        if (e.regular) e.module.a(1, 0, e.module.dim - 1) += 1;
    WhiteheadReport bad = whitehead_report(entries, false);
    CHECK_FALSE(bad.pass);
    CHECK(bad.failure.find("m2plus/regular") != std::string::npos);
    CHECK(bad.failure.find("S-") == std::string::npos);
}
