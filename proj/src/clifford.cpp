#include "deltaderive/clifford.hpp"

#include <bit>
#include <stdexcept>

namespace dd {

namespace {

Rational blade_sign_and_scale(const std::vector<Rational>& f_diag, std::uint32_t s,
                              std::uint32_t t) {
    Rational coeff(1);
    std::uint32_t cur = s;
    for (std::uint32_t rest = t; rest != 0; rest &= rest - 1) {
        int bit = std::countr_zero(rest);
        int transpositions = std::popcount(cur >> (bit + 1));
        if (transpositions & 1) coeff = -coeff;
        if (cur & (1u << bit)) {
            coeff *= f_diag[bit];
            cur &= ~(1u << bit);
        } else {
            cur |= 1u << bit;
        }
    }
    return coeff;
}

}  // namespace

CliffordAlgebra::CliffordAlgebra(std::vector<Rational> f_diag)
    : n_(static_cast<int>(f_diag.size())), f_diag_(std::move(f_diag)) {
    if (n_ < 1 || n_ > 20) throw std::invalid_argument("clifford rank out of range");
    for (const auto& f : f_diag_)
        if (f == 0) throw std::invalid_argument("degenerate diagonal form");
    const int dim = 1 << n_;
    alg_ = std::make_shared<Algebra>(dim, "C" + std::to_string(n_));
    for (std::uint32_t s = 0; s < static_cast<std::uint32_t>(dim); ++s)
        for (std::uint32_t t = 0; t < static_cast<std::uint32_t>(dim); ++t) {
            Rational c = blade_sign_and_scale(f_diag_, s, t);
            alg_->c(static_cast<int>(s), static_cast<int>(t), static_cast<int>(s ^ t)) = c;
        }
    QVec unit(dim, Rational(0));
    unit[0] = 1;
    alg_->unit = std::move(unit);
}

QVec CliffordAlgebra::embed_vector(const QVec& v) const {
    QVec out(static_cast<size_t>(1) << n_, Rational(0));
    for (int i = 0; i < n_; ++i) out[1u << i] = v[i];
    return out;
}

Rational CliffordAlgebra::form(const QVec& x, const QVec& y) const {
    Rational s(0);
    for (int i = 0; i < n_; ++i) s += x[i] * y[i] * f_diag_[i];
    return s;
}

Blade blade_product(const CliffordAlgebra& c, std::uint32_t s, std::uint32_t t) {
    if ((s | t) >> c.n()) throw std::invalid_argument("blade index out of range");
    return Blade{s ^ t, blade_sign_and_scale(c.f_diag(), s, t)};
}

bool verify_product_lemma(const CliffordAlgebra& c, const QVec& x, const std::vector<QVec>& ys) {
    const auto& alg = *c.algebra();
    auto prod_omitting = [&](int omit) {
        QVec p = *alg.unit;
        for (size_t i = 0; i < ys.size(); ++i)
            if (static_cast<int>(i) != omit) p = alg.mul(p, c.embed_vector(ys[i]));
        return p;
    };
    const int k = static_cast<int>(ys.size());
    QVec xe = c.embed_vector(x);
    QVec lhs = alg.mul(prod_omitting(-1), xe);
    QVec rhs = alg.mul(xe, prod_omitting(-1));
    if (k & 1) rhs = Rational(-1) * rhs;
    for (int i = 0; i < k; ++i) {
        Rational scale = Rational(2) * c.form(x, ys[i]);
        if ((k + i + 1) & 1) scale = -scale;  // (-1)^{k+(i+1)}, i here is 0-based
        if (scale != 0) rhs = rhs + scale * prod_omitting(i);
    }
    return lhs == rhs;
}

Blade sandwich_sign(const CliffordAlgebra& c, int i, int k) {
    if (i < 1 || i > c.n() || k < 0 || k > c.n())
        throw std::invalid_argument("sandwich_sign index out of range");
    const std::uint32_t kmask = (k == 0) ? 0u : ((1u << k) - 1u);
    const std::uint32_t imask = 1u << (i - 1);
    Blade inner = blade_product(c, imask, kmask);
    Blade full = blade_product(c, inner.mask, imask);
    full.coeff *= inner.coeff;

    Rational expect = c.f_diag()[i - 1];
    if (((i <= k) ? (k + 1) : k) & 1) expect = -expect;
    if (full.mask != kmask || full.coeff != expect)
        throw std::logic_error("sandwich closed form mismatch");
    return full;
}

namespace {

std::vector<std::uint32_t> grade_masks(int nbits, int k) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t m = 0; m < (1u << nbits); ++m)
        if (std::popcount(m) == k) out.push_back(m);
    return out;
}

long binom(int n, int k) {
    long b = 1;
    for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
}

}  // namespace

std::vector<Rational> default_jvf_gram(int d) {
    std::vector<Rational> g(d, Rational(1));
    if (d & 1)
        for (int i = 1; i < d; i += 2) g[i] = -1;
    return g;
}

JvfCatalog jvf_clifford_module_catalog(int d, const std::vector<Rational>& gram) {
    if (d < 2) throw std::invalid_argument("dim V must be >= 2");
    if (static_cast<int>(gram.size()) != d) throw std::invalid_argument("gram size != d");
    std::vector<Rational> f = gram;
    const bool odd = d & 1;
    if (odd) f.push_back(Rational(1));  // the extra generator u
    const int nev = static_cast<int>(f.size());

    JvfCatalog cat{std::make_shared<CliffordAlgebra>(f), Bimodule{}, {}};
    const auto& ca = *cat.clifford;
    const int cdim = 1 << nev;

    // J(V,f) = K1 + V sits inside C(V^ev)^(+) as the unit and degree-1 blades
    std::vector<QVec> emb;
    QVec e(cdim, Rational(0));
    e[0] = 1;
    emb.push_back(e);
    e[0] = 0;
    for (int i = 0; i < d; ++i) {
        e[1u << i] = 1;
        emb.push_back(e);
        e[1u << i] = 0;
    }
    cat.ambient = envelope_bimodule(ca.algebra(), emb, EnvelopeAction::plain);
    cat.ambient.label = "C(Vev)/J(V,f) d=" + std::to_string(d);

    auto basis_of = [&](const std::vector<std::uint32_t>& masks) {
        std::vector<QVec> b;
        for (auto m : masks) {
            QVec v(cdim, Rational(0));
            v[m] = 1;
            b.push_back(std::move(v));
        }
        return b;
    };
    auto add_piece = [&](const std::string& label, std::vector<QVec> basis) {
        Bimodule sub = restrict_bimodule(cat.ambient, basis, label);
        cat.pieces.push_back(JvfPiece{label, span_of(cdim, basis).basis(), std::move(sub)});
    };
    auto grades = [&](std::initializer_list<int> ks, bool with_u) {
        std::vector<std::uint32_t> masks;
        for (int k : ks)
            for (auto m : grade_masks(d, k)) masks.push_back(with_u ? (m | (1u << d)) : m);
        return masks;
    };
    auto pair_label = [](int k, bool with_u) {
        std::string u = with_u ? "u" : "";
        return "C" + std::to_string(k) + u + "+C" + std::to_string(k + 1) + u;
    };

    if (!odd) {
        const int m = d / 2;
        for (int k = 0; k + 1 <= 2 * m - 1; k += 2)
            add_piece(pair_label(k, false), basis_of(grades({k, k + 1}, false)));
        add_piece("C" + std::to_string(2 * m), basis_of(grades({2 * m}, false)));
    } else {
        const int m = (d + 1) / 2;
        if (m % 2 == 0) {
            // (b1): pairs C^0+C^1 .. C^{m-2}+C^{m-1}; C^0 u;
            // C^1 u + C^2 u .. C^{m-3} u + C^{m-2} u; split of C^{m-1}u + C^m u
            for (int k = 0; k + 1 <= m - 1; k += 2)
                add_piece(pair_label(k, false), basis_of(grades({k, k + 1}, false)));
            add_piece("C0u", basis_of(grades({0}, true)));
            for (int k = 1; k + 1 <= m - 2; k += 2)
                add_piece(pair_label(k, true), basis_of(grades({k, k + 1}, true)));
            auto split_basis = basis_of(grades({m - 1, m}, true));
            Bimodule big = restrict_bimodule(cat.ambient, split_basis, "Cu-split");
            auto halves = decompose(big);
            if (halves.size() != 2 || halves[0].dim() != binom(2 * m, m) / 2 ||
                halves[1].dim() != binom(2 * m, m) / 2)
                throw std::logic_error("half-spin split failed");
            for (size_t h = 0; h < 2; ++h) {
                // lift from big's coordinates (= split_basis order) to C(V^ev)
                std::vector<QVec> lifted;
                for (const auto& v : halves[h].basis) {
                    QVec amb(cdim, Rational(0));
                    for (size_t i = 0; i < split_basis.size(); ++i)
                        if (v[i] != 0) amb = amb + v[i] * split_basis[i];
                    lifted.push_back(std::move(amb));
                }
                add_piece("half(C" + std::to_string(m - 1) + "u+C" + std::to_string(m) +
                              "u)#" + std::to_string(h + 1),
                          std::move(lifted));
            }
        } else {
            // (b2): pairs C^0+C^1 .. C^{m-3}+C^{m-2}; C^0 u;
            // C^1 u + C^2 u .. C^{m-2} u + C^{m-1} u; split of C^{m-1} + C^m
            for (int k = 0; k + 1 <= m - 2; k += 2)
                add_piece(pair_label(k, false), basis_of(grades({k, k + 1}, false)));
            add_piece("C0u", basis_of(grades({0}, true)));
            for (int k = 1; k + 1 <= m - 1; k += 2)
                add_piece(pair_label(k, true), basis_of(grades({k, k + 1}, true)));
            auto split_basis = basis_of(grades({m - 1, m}, false));
            Bimodule big = restrict_bimodule(cat.ambient, split_basis, "C-split");
            auto halves = decompose(big);
            if (halves.size() != 2 || halves[0].dim() != binom(2 * m, m) / 2 ||
                halves[1].dim() != binom(2 * m, m) / 2)
                throw std::logic_error("half-spin split failed");
            for (size_t h = 0; h < 2; ++h) {
                std::vector<QVec> lifted;
                for (const auto& v : halves[h].basis) {
                    QVec amb(cdim, Rational(0));
                    for (size_t i = 0; i < split_basis.size(); ++i)
                        if (v[i] != 0) amb = amb + v[i] * split_basis[i];
                    lifted.push_back(std::move(amb));
                }
                add_piece("half(C" + std::to_string(m - 1) + "+C" + std::to_string(m) + ")#" +
                              std::to_string(h + 1),
                          std::move(lifted));
            }
        }
    }

    // the first piece (C^0 + C^1) is the embedded copy of J(V,f) itself
    if (cat.pieces.front().module.action == cat.pieces.front().module.j->table)
        cat.pieces.front().module.regular = true;
    return cat;
}

}  // namespace dd
