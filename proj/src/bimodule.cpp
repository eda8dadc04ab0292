#include "deltaderive/bimodule.hpp"

#include <algorithm>
#include <stdexcept>

#include "deltaderive/delta_poly.hpp"

namespace dd {

Bimodule::Bimodule(std::shared_ptr<const Algebra> alg, int m_dim, std::string name)
    : j(std::move(alg)),
      dim(m_dim),
      action(static_cast<size_t>(j->dim) * m_dim * m_dim, Rational(0)),
      label(std::move(name)) {}

QVec Bimodule::act_basis(int i, const QVec& m) const {
    QVec out(dim, Rational(0));
    for (int v = 0; v < dim; ++v) {
        if (m[v] == 0) continue;
        for (int w = 0; w < dim; ++w)
            if (a(i, v, w) != 0) out[w] += m[v] * a(i, v, w);
    }
    return out;
}

QVec Bimodule::act(const QVec& x, const QVec& m) const {
    QVec out(dim, Rational(0));
    for (int i = 0; i < j->dim; ++i) {
        if (x[i] == 0) continue;
        for (int v = 0; v < dim; ++v) {
            if (m[v] == 0) continue;
            for (int w = 0; w < dim; ++w)
                if (a(i, v, w) != 0) out[w] += x[i] * m[v] * a(i, v, w);
        }
    }
    return out;
}

QMat Bimodule::action_matrix(int i) const {
    QMat mat(dim, dim);
    for (int v = 0; v < dim; ++v)
        for (int w = 0; w < dim; ++w) mat.at(w, v) = a(i, v, w);
    return mat;
}

bool Bimodule::unit_acts_as_identity() const {
    if (!j->unit) return false;
    QVec mv(dim, Rational(0));
    for (int v = 0; v < dim; ++v) {
        mv[v] = 1;
        if (act(*j->unit, mv) != mv) return false;
        mv[v] = 0;
    }
    return true;
}

Bimodule regular_bimodule(std::shared_ptr<const Algebra> j) {
    if (!j->unit) throw std::domain_error("regular bimodule requires a unital algebra");
    Bimodule m(j, j->dim, j->label + "/regular");
    m.action = j->table;
    m.regular = true;
    return m;
}

Bimodule envelope_bimodule(std::shared_ptr<const Algebra> u, const std::vector<QVec>& emb,
                           EnvelopeAction kind, const std::optional<Involution>& twist) {
    if (kind == EnvelopeAction::twisted && !twist)
        throw std::invalid_argument("twisted envelope action needs an involution");
    if (!u->unit) throw std::domain_error("envelope algebra must be unital");

    RowSpace span = span_of(u->dim, emb);
    if (!span.contains(*u->unit))
        throw std::domain_error("embedded subspace must contain the unit");

    // induced Jordan algebra on the embedded span
    const int dj = span.dim();
    auto jalg = std::make_shared<Algebra>(dj, "J<" + u->label + ">");
    for (int s = 0; s < dj; ++s)
        for (int t = 0; t < dj; ++t) {
            QVec prod = half() * (u->mul(span.basis()[s], span.basis()[t]) +
                                  u->mul(span.basis()[t], span.basis()[s]));
            auto coords = span.coords(prod);
            if (!coords) throw std::domain_error("embedded subspace is not o-closed");
            for (int k = 0; k < dj; ++k) jalg->c(s, t, k) = (*coords)[k];
        }
    jalg->unit = *span.coords(*u->unit);

    Bimodule m(jalg, u->dim,
               u->label + (kind == EnvelopeAction::plain ? "/plain" : "/twisted"));
    QVec ev(u->dim, Rational(0));
    for (int i = 0; i < dj; ++i) {
        const QVec& x = span.basis()[i];
        QVec xt = (kind == EnvelopeAction::twisted) ? twist->apply(x) : x;
        for (int v = 0; v < u->dim; ++v) {
            ev[v] = 1;
            QVec img = half() * (u->mul(x, ev) + u->mul(ev, xt));
            ev[v] = 0;
            for (int w = 0; w < u->dim; ++w) m.a(i, v, w) = img[w];
        }
    }

    Bimodule::Envelope env;
    env.u = u;
    if (kind == EnvelopeAction::twisted) env.twist = twist;
    env.j_embedding = span.basis();
    QVec e(u->dim, Rational(0));
    for (int v = 0; v < u->dim; ++v) {
        e[v] = 1;
        env.module_embedding.push_back(e);
        e[v] = 0;
    }
    m.envelope = std::move(env);
    return m;
}

Bimodule restrict_bimodule(const Bimodule& m, const std::vector<QVec>& basis,
                           const std::string& label) {
    RowSpace span = span_of(m.dim, basis);
    const int n = span.dim();
    Bimodule out(m.j, n, label.empty() ? m.label + "|sub" : label);
    for (int i = 0; i < m.j->dim; ++i)
        for (int v = 0; v < n; ++v) {
            QVec img = m.act_basis(i, span.basis()[v]);
            auto coords = span.coords(img);
            if (!coords) throw std::domain_error("subspace is not invariant");
            for (int w = 0; w < n; ++w) out.a(i, v, w) = (*coords)[w];
        }
    if (m.envelope) {
        Bimodule::Envelope env;
        env.u = m.envelope->u;
        env.twist = m.envelope->twist;
        env.j_embedding = m.envelope->j_embedding;
        for (const auto& b : span.basis()) {
            QVec in_u(env.u->dim, Rational(0));
            for (int v = 0; v < m.dim; ++v)
                if (b[v] != 0) in_u = in_u + b[v] * m.envelope->module_embedding[v];
            env.module_embedding.push_back(std::move(in_u));
        }
        out.envelope = std::move(env);
    }
    return out;
}

Algebra split_null_extension(const Bimodule& m) {
    const int dj = m.j->dim;
    const int dm = m.dim;
    Algebra e(dj + dm, m.j->label + "|*|" + m.label);
    for (int i = 0; i < dj; ++i)
        for (int jj = 0; jj < dj; ++jj)
            for (int k = 0; k < dj; ++k) e.c(i, jj, k) = m.j->c(i, jj, k);
    for (int i = 0; i < dj; ++i)
        for (int v = 0; v < dm; ++v)
            for (int w = 0; w < dm; ++w) {
                e.c(i, dj + v, dj + w) = m.a(i, v, w);
                e.c(dj + v, i, dj + w) = m.a(i, v, w);
            }
    if (m.j->unit) {
        QVec u(dj + dm, Rational(0));
        for (int i = 0; i < dj; ++i) u[i] = (*m.j->unit)[i];
        e.unit = std::move(u);
    }
    return e;
}

bool verify_jordan_bimodule(const Bimodule& m) {
    if (!m.unit_acts_as_identity()) return false;
    const int dj = m.j->dim;
    const int dm = m.dim;
    std::vector<QMat> lj(dj), rho(dj);
    for (int i = 0; i < dj; ++i) {
        lj[i] = m.j->left_mult(i);
        rho[i] = m.action_matrix(i);
    }
    auto rho_of = [&](const QVec& x) {
        QMat out(dm, dm);
        for (int i = 0; i < dj; ++i)
            if (x[i] != 0)
                for (size_t q = 0; q < out.data.size(); ++q) out.data[q] += x[i] * rho[i].data[q];
        return out;
    };
    // rho'(w): J -> M, column i = e_i . w
    auto rho_prime = [&](const QVec& w) {
        QMat out(dm, dj);
        for (int i = 0; i < dj; ++i) {
            QVec col = m.act_basis(i, w);
            for (int r = 0; r < dm; ++r) out.at(r, i) = col[r];
        }
        return out;
    };

    // Mixed (J, J, M) block of the linearized Jordan identity on J + M:
    //   rho'(u) L_{ab} - rho_{ab} rho'(u)
    // + rho_a rho'(b.u) - rho'(b.u) L_a
    // + rho_b rho'(a.u) - rho'(a.u) L_b  =  0.
    // Triples with two or more module entries vanish structurally.
    QVec mu(dm, Rational(0));
    for (int a = 0; a < dj; ++a)
        for (int b = a; b < dj; ++b) {
            QVec cab = m.j->basis_product(a, b);
            QMat l_ab = m.j->left_mult(cab);
            QMat rho_ab = rho_of(cab);
            for (int u = 0; u < dm; ++u) {
                mu[u] = 1;
                QMat rpu = rho_prime(mu);
                QMat rbu = rho_prime(m.act_basis(b, mu));
                QMat rau = rho_prime(m.act_basis(a, mu));
                mu[u] = 0;
                QMat tot = (rpu * l_ab - rho_ab * rpu) + (rho[a] * rbu - rbu * lj[a]) +
                           (rho[b] * rau - rau * lj[b]);
                if (!tot.is_zero()) return false;
            }
        }
    return true;
}

Submodule submodule_spin(const Bimodule& m, const std::vector<QVec>& seeds) {
    RowSpace space(m.dim);
    for (const auto& s : seeds) space.insert(s);
    bool grew = true;
    while (grew) {
        grew = false;
        const auto snapshot = space.basis();
        for (const auto& v : snapshot)
            for (int i = 0; i < m.j->dim; ++i)
                if (space.insert(m.act_basis(i, v))) grew = true;
    }
    return Submodule{space.basis()};
}

bool is_irreducible(const Bimodule& m) {
    if (m.dim < 1) throw std::invalid_argument("is_irreducible needs dim >= 1");
    if (m.dim == 1) return true;
    QVec e(m.dim, Rational(0));
    for (int v = 0; v < m.dim; ++v) {
        e[v] = 1;
        if (submodule_spin(m, {e}).dim() != m.dim) return false;
        e[v] = 0;
    }
    RationalStream rng(default_seed());
    for (int t = 0; t < m.dim; ++t) {
        QVec v(m.dim);
        for (auto& x : v) x = rng.next_rational(5, 3);
        if (submodule_spin(m, {v}).dim() != m.dim) return false;
    }
    // spins can fill the module even when it is a sum of non-isomorphic
    // pieces; the trivial commutant settles it
    return commutant_dimension(m) == 1;
}

namespace {

// {X : X rho_i = rho_i X for all i}, flattened row-major, index r*dm + c
std::vector<QVec> commutant_space(const Bimodule& m) {
    const int dm = m.dim;
    std::vector<SparseRow> rows;
    for (int i = 0; i < m.j->dim; ++i) {
        QMat rho = m.action_matrix(i);
        for (int r = 0; r < dm; ++r)
            for (int c = 0; c < dm; ++c) {
                QVec coeff(static_cast<size_t>(dm) * dm, Rational(0));
                for (int k = 0; k < dm; ++k) {
                    if (rho.at(k, c) != 0) coeff[r * dm + k] += rho.at(k, c);
                    if (rho.at(r, k) != 0) coeff[k * dm + c] -= rho.at(r, k);
                }
                SparseRow sr = to_sparse(coeff);
                if (!sr.empty()) rows.push_back(std::move(sr));
            }
    }
    return kernel_sparse(rows, dm * dm);
}

}  // namespace

int commutant_dimension(const Bimodule& m) {
    return static_cast<int>(commutant_space(m).size());
}

Submodule invariant_complement(const Bimodule& m, const Submodule& w) {
    const int dm = m.dim;
    const int ncols = dm * dm;  // unknown projection P, row-major
    RowSpace wspace = span_of(dm, w.basis);
    std::vector<SparseRow> rows;
    auto push = [&rows](QVec coeff, const Rational& rhs, int ncols_) {
        SparseRow sr = to_sparse(coeff);
        if (rhs != 0) sr.emplace_back(ncols_, -rhs);
        if (!sr.empty()) rows.push_back(std::move(sr));
    };
    // commutation with every generator
    for (int i = 0; i < m.j->dim; ++i) {
        QMat rho = m.action_matrix(i);
        for (int r = 0; r < dm; ++r)
            for (int c = 0; c < dm; ++c) {
                QVec coeff(ncols, Rational(0));
                for (int k = 0; k < dm; ++k) {
                    if (rho.at(k, c) != 0) coeff[r * dm + k] += rho.at(k, c);
                    if (rho.at(r, k) != 0) coeff[k * dm + c] -= rho.at(r, k);
                }
                push(std::move(coeff), Rational(0), ncols);
            }
    }
    // P w = w on the subspace basis
    for (const auto& wv : wspace.basis())
        for (int r = 0; r < dm; ++r) {
            QVec coeff(ncols, Rational(0));
            for (int c = 0; c < dm; ++c)
                if (wv[c] != 0) coeff[r * dm + c] = wv[c];
            push(std::move(coeff), wv[r], ncols);
        }
    // image inside W: residual of each column of P against W vanishes
    // residual(v) = v - sum_i v[piv_i] basis_i
    const auto& wb = wspace.basis();
    const auto& wp = wspace.pivots();
    for (int c = 0; c < dm; ++c)
        for (int r = 0; r < dm; ++r) {
            QVec coeff(ncols, Rational(0));
            coeff[r * dm + c] += 1;
            for (size_t i = 0; i < wb.size(); ++i)
                if (wb[i][r] != 0) coeff[wp[i] * dm + c] -= wb[i][r];
            push(std::move(coeff), Rational(0), ncols);
        }

    auto sol = solve_augmented_sparse(rows, ncols);
    if (!sol) throw std::domain_error("module is not completely reducible over W");
    QMat p(dm, dm);
    p.data.assign(sol->begin(), sol->end());
    RowSpace comp(dm);
    QVec e(dm, Rational(0));
    for (int v = 0; v < dm; ++v) {
        e[v] = 1;
        comp.insert(e - p.apply(e));
        e[v] = 0;
    }
    if (comp.dim() + wspace.dim() != dm)
        throw std::logic_error("complement dimension mismatch");
    return Submodule{comp.basis()};
}

namespace {

bool basis_less(const std::vector<QVec>& a, const std::vector<QVec>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t k = 0; k < a[i].size(); ++k) {
            if (a[i][k] != b[i][k]) return a[i][k] < b[i][k];
        }
    return false;
}

// monic minimal polynomial, through the first linear dependency among powers
DeltaPoly minimal_polynomial(const QMat& x) {
    const int n = x.rows;
    std::vector<QVec> pows;
    RowSpace seen(n * n);
    QMat p = QMat::identity(n);
    while (true) {
        if (seen.contains(p.data)) {
            QMat a(n * n, static_cast<int>(pows.size()));
            for (size_t k = 0; k < pows.size(); ++k)
                for (int r = 0; r < n * n; ++r) a.at(r, static_cast<int>(k)) = pows[k][r];
            auto c = solve_dense(a, p.data);
            if (!c) throw std::logic_error("minimal polynomial solve failed");
            std::vector<Rational> coeffs(pows.size() + 1);
            for (size_t k = 0; k < pows.size(); ++k) coeffs[k] = -(*c)[k];
            coeffs.back() = 1;
            return DeltaPoly(std::move(coeffs));
        }
        seen.insert(p.data);
        pows.push_back(p.data);
        p = p * x;
    }
}

bool is_scalar_matrix(const QMat& x) {
    for (int r = 0; r < x.rows; ++r)
        for (int c = 0; c < x.cols; ++c)
            if (x.at(r, c) != (r == c ? x.at(0, 0) : Rational(0))) return false;
    return true;
}

// Proper invariant subspace, or nullopt when the module is certified
// irreducible (trivial commutant). First spins basis and random vectors;
// when the summands are non-isomorphic that can fail for every vector, so
// the fallback splits along a rational eigenspace of a non-scalar commutant
// element. Throws when the commutant is non-trivial but no splitting element
// with a rational eigenvalue turns up.
std::optional<Submodule> find_proper_submodule(const Bimodule& m, std::uint64_t seed) {
    if (m.dim == 1) return std::nullopt;
    std::optional<Submodule> best;
    auto consider = [&](Submodule s) {
        if (s.dim() == 0 || s.dim() == m.dim) return;
        if (!best || s.dim() < best->dim() ||
            (s.dim() == best->dim() && basis_less(s.basis, best->basis)))
            best = std::move(s);
    };
    QVec e(m.dim, Rational(0));
    for (int v = 0; v < m.dim; ++v) {
        e[v] = 1;
        consider(submodule_spin(m, {e}));
        e[v] = 0;
    }
    if (best) return best;
    RationalStream rng(seed);
    for (int t = 0; t < 50 && !best; ++t) {
        QVec v(m.dim);
        for (auto& x : v) x = rng.next_rational(5, 3);
        consider(submodule_spin(m, {v}));
    }
    if (best) return best;

    std::vector<QVec> comm = commutant_space(m);
    if (comm.size() <= 1) return std::nullopt;

    auto try_split = [&](const QVec& flat) -> std::optional<Submodule> {
        QMat x(m.dim, m.dim);
        x.data = flat;
        if (is_scalar_matrix(x)) return std::nullopt;
        RootReport rr = rational_roots(minimal_polynomial(x));
        for (const Rational& lambda : rr.roots) {
            QMat shifted = x - [&] {
                QMat s = QMat::identity(m.dim);
                for (auto& y : s.data) y *= lambda;
                return s;
            }();
            auto ker = nullspace_dense(shifted);
            if (!ker.empty() && static_cast<int>(ker.size()) < m.dim)
                return Submodule{span_of(m.dim, ker).basis()};
        }
        return std::nullopt;
    };
    for (const auto& flat : comm) {
        auto s = try_split(flat);
        if (s) consider(std::move(*s));
    }
    for (int t = 0; t < 30 && !best; ++t) {
        QVec flat(static_cast<size_t>(m.dim) * m.dim, Rational(0));
        for (const auto& b : comm) flat = flat + rng.next_rational(5, 3) * b;
        auto s = try_split(flat);
        if (s) consider(std::move(*s));
    }
    if (best) return best;
    throw std::domain_error("splitter stagnation on " + m.label +
                            ": commutant rank " + std::to_string(comm.size()) +
                            " but no rational eigenspace splitting found");
}

void decompose_into(const Bimodule& m, std::uint64_t seed,
                    const std::vector<QVec>& ambient_basis, std::vector<Submodule>& out) {
    if (m.dim == 0) return;
    const int top = static_cast<int>(ambient_basis.front().size());
    // coordinate change only; canonical echelon form is applied at the leaves
    auto lift = [&](const std::vector<QVec>& local) {
        std::vector<QVec> lifted;
        for (const auto& v : local) {
            QVec amb(top, Rational(0));
            for (int i = 0; i < m.dim; ++i)
                if (v[i] != 0) amb = amb + v[i] * ambient_basis[i];
            lifted.push_back(std::move(amb));
        }
        return lifted;
    };
    auto proper = find_proper_submodule(m, seed);
    if (!proper) {
        out.push_back(Submodule{span_of(top, ambient_basis).basis()});
        return;
    }
    Submodule comp = invariant_complement(m, *proper);
    decompose_into(restrict_bimodule(m, proper->basis), seed, lift(proper->basis), out);
    decompose_into(restrict_bimodule(m, comp.basis), seed, lift(comp.basis), out);
}

}  // namespace

std::vector<Submodule> decompose(const Bimodule& m, std::uint64_t seed) {
    std::vector<QVec> id;
    QVec e(m.dim, Rational(0));
    for (int v = 0; v < m.dim; ++v) {
        e[v] = 1;
        id.push_back(e);
        e[v] = 0;
    }
    std::vector<Submodule> out;
    decompose_into(m, seed, id, out);
    return out;
}

Bimodule direct_sum_modules(const std::vector<const Bimodule*>& parts) {
    if (parts.empty()) throw std::invalid_argument("empty module sum");
    int dim = 0;
    for (const auto* p : parts) dim += p->dim;
    Bimodule out(parts.front()->j, dim, "sum");
    int off = 0;
    std::string lbl;
    for (const auto* p : parts) {
        if (p->j->dim != out.j->dim) throw std::invalid_argument("modules over different algebras");
        for (int i = 0; i < out.j->dim; ++i)
            for (int v = 0; v < p->dim; ++v)
                for (int w = 0; w < p->dim; ++w) out.a(i, off + v, off + w) = p->a(i, v, w);
        off += p->dim;
        lbl += (lbl.empty() ? "" : "+") + p->label;
    }
    out.label = lbl;
    return out;
}

}  // namespace dd
