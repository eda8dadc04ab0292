#include "deltaderive/solver.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace dd {

namespace {

// one equation per (pair, module coordinate):
//   sum_l c(i,j,l) D[t][l] - delta sum_w a(i,w,t) D[w][j]
//                          - delta sum_w a(j,w,t) D[w][i] = 0
// unknown D[w][i] lives at column w*dimJ + i.
template <typename Emit>
void for_each_equation(const Bimodule& m, bool unordered, Emit&& emit) {
    const int dj = m.j->dim;
    for (int i = 0; i < dj; ++i)
        for (int j = unordered ? i : 0; j < dj; ++j) {
            QVec cij = m.j->basis_product(i, j);
            for (int t = 0; t < m.dim; ++t) emit(i, j, t, cij);
        }
}

}  // namespace

bool verify_delta_derivation(const Bimodule& m, const Rational& delta, const QMat& d) {
    const int dj = m.j->dim;
    for (int i = 0; i < dj; ++i) {
        QVec di(m.dim);
        for (int r = 0; r < m.dim; ++r) di[r] = d.at(r, i);
        for (int j = i; j < dj; ++j) {
            QVec dj_col(m.dim);
            for (int r = 0; r < m.dim; ++r) dj_col[r] = d.at(r, j);
            QVec lhs = d.apply(m.j->basis_product(i, j));
            QVec rhs = delta * (m.act_basis(i, dj_col) + m.act_basis(j, di));
            if (lhs != rhs) return false;
        }
    }
    return true;
}

DerivationSpace derivations_at(const Bimodule& m, const Rational& delta,
                               const SolveOptions& opt) {
    const int dj = m.j->dim;
    const int ncols = m.dim * dj;
    std::vector<SparseRow> rows;
    for_each_equation(m, opt.unordered_pairs, [&](int i, int j, int t, const QVec& cij) {
        QVec coeff(ncols, Rational(0));
        for (int l = 0; l < dj; ++l)
            if (cij[l] != 0) coeff[t * dj + l] += cij[l];
        for (int w = 0; w < m.dim; ++w) {
            if (m.a(i, w, t) != 0) coeff[w * dj + j] -= delta * m.a(i, w, t);
            if (m.a(j, w, t) != 0) coeff[w * dj + i] -= delta * m.a(j, w, t);
        }
        SparseRow sr = to_sparse(coeff);
        if (!sr.empty()) rows.push_back(std::move(sr));
    });

    DerivationSpace out{m, delta, {}};
    for (const auto& v : kernel_sparse(rows, ncols, opt.kernel)) {
        QMat d(m.dim, dj);
        d.data.assign(v.begin(), v.end());
        if (!verify_delta_derivation(m, delta, d))
            throw std::logic_error("kernel vector fails the defining identity");
        out.basis.push_back(std::move(d));
    }
    return out;
}

Pencil build_pencil(const Bimodule& m, bool unordered_pairs) {
    const int dj = m.j->dim;
    Pencil p;
    p.ncols = m.dim * dj;
    for_each_equation(m, unordered_pairs, [&](int i, int j, int t, const QVec& cij) {
        std::vector<DeltaPoly> row(p.ncols);
        auto add = [&](int col, const Rational& c0, const Rational& c1) {
            row[col] = row[col] + DeltaPoly({c0, c1});
        };
        for (int l = 0; l < dj; ++l)
            if (cij[l] != 0) add(t * dj + l, cij[l], Rational(0));
        for (int w = 0; w < m.dim; ++w) {
            if (m.a(i, w, t) != 0) add(w * dj + j, Rational(0), -m.a(i, w, t));
            if (m.a(j, w, t) != 0) add(w * dj + i, Rational(0), -m.a(j, w, t));
        }
        if (std::any_of(row.begin(), row.end(), [](const DeltaPoly& q) { return !q.is_zero(); }))
            p.rows.push_back(std::move(row));
    });
    p.nrows = static_cast<int>(p.rows.size());
    return p;
}

int pencil_dimension_at(const Pencil& p, const Rational& delta) {
    QMat m(p.nrows, p.ncols);
    for (int i = 0; i < p.nrows; ++i)
        for (int j = 0; j < p.ncols; ++j) m.at(i, j) = p.rows[i][j].eval(delta);
    return p.ncols - rank_dense(m);
}

namespace {

size_t poly_bits(const DeltaPoly& q) {
    size_t bits = 0;
    for (int k = 0; k <= q.degree(); ++k) {
        const Rational& c = q.coeff(k);
        bits = std::max(bits, mpz_sizeinbase(c.get_num().get_mpz_t(), 2) +
                                  mpz_sizeinbase(c.get_den().get_mpz_t(), 2));
    }
    return bits;
}

}  // namespace

SweepReport exceptional_deltas(const Bimodule& m, const SolveOptions& opt) {
    Pencil p = build_pencil(m, opt.unordered_pairs);
    // Bareiss over Q[delta]: exact divisions by the previous pivot
    auto rows = p.rows;
    std::vector<DeltaPoly> pivots;
    DeltaPoly prev = DeltaPoly::constant(Rational(1));
    size_t step = 0;
    for (int col = 0; col < p.ncols && step < rows.size(); ++col) {
        int best = -1;
        for (size_t i = step; i < rows.size(); ++i) {
            if (rows[i][col].is_zero()) continue;
            if (best < 0 || rows[i][col].degree() < rows[best][col].degree() ||
                (rows[i][col].degree() == rows[best][col].degree() &&
                 poly_bits(rows[i][col]) < poly_bits(rows[best][col])))
                best = static_cast<int>(i);
        }
        if (best < 0) continue;
        std::swap(rows[step], rows[best]);
        const DeltaPoly piv = rows[step][col];
        for (size_t i = step + 1; i < rows.size(); ++i) {
            const DeltaPoly f = rows[i][col];
            for (int j = col + 1; j < p.ncols; ++j) {
                DeltaPoly num = piv * rows[i][j] - f * rows[step][j];
                rows[i][j] = num.is_zero() ? num : num.exact_div(prev);
            }
            rows[i][col] = DeltaPoly{};
        }
        prev = piv;
        pivots.push_back(piv.primitive());
        ++step;
    }

    SweepReport rep;
    rep.generic_dim = p.ncols - static_cast<int>(pivots.size());

    // rank drop at delta0 forces the final pivot (a maximal minor up to a
    // unit) to vanish; roots of the earlier pivots are checked too, which is
    // harmless
    std::set<Rational> candidates;
    for (const auto& q : pivots) {
        if (q.degree() < 1) continue;
        RootReport rr = rational_roots(q);
        for (const auto& r : rr.roots) candidates.insert(r);
        if (&q == &pivots.back())
            for (auto& f : rr.leftover) rep.leftover_factors.push_back(std::move(f));
    }
    for (const auto& d0 : candidates) {
        int dim = derivations_at(m, d0, opt).dimension();
        if (dim > rep.generic_dim) rep.exceptional.emplace_back(d0, dim);
    }
    return rep;
}

HalfFormReport check_half_form(const DerivationSpace& s) {
    HalfFormReport rep;
    const Bimodule& m = s.module;
    if (!m.j->unit) throw std::invalid_argument("check_half_form needs a unital algebra");
    if (s.delta != half()) throw std::invalid_argument("check_half_form needs delta = 1/2");

    for (const auto& d : s.basis)
        if (!verify_delta_derivation(m, s.delta, d)) rep.delta_identity = false;

    std::vector<QVec> m_elts;  // D(1) for each basis D, in module coordinates
    for (const auto& d : s.basis) {
        QVec m1 = d.apply(*m.j->unit);
        for (int i = 0; i < m.j->dim; ++i) {
            QVec di(m.dim);
            for (int r = 0; r < m.dim; ++r) di[r] = d.at(r, i);
            if (di != m.act_basis(i, m1)) rep.d_of_x_is_x_m = false;
        }
        m_elts.push_back(std::move(m1));
    }

    if (!m.envelope) return rep;
    rep.envelope_applicable = true;
    rep.twisted = m.envelope->twist.has_value();
    const Algebra& u = *m.envelope->u;
    auto in_u = [&](const QVec& mod_coords) {
        QVec x(u.dim, Rational(0));
        for (int v = 0; v < m.dim; ++v)
            if (mod_coords[v] != 0) x = x + mod_coords[v] * m.envelope->module_embedding[v];
        return x;
    };
    const auto& jb = m.envelope->j_embedding;

    if (!rep.twisted) {
        bool e2 = true, exmx = true, ecomm = true;
        for (const auto& d1 : m_elts) {
            QVec me = in_u(d1);
            for (size_t i = 0; i < jb.size(); ++i) {
                const QVec& x = jb[i];
                for (size_t j = i; j < jb.size(); ++j) {
                    const QVec& y = jb[j];
                    // xym + yxm + mxy + myx - 2xmy - 2ymx
                    QVec v = u.mul(u.mul(x, y), me) + u.mul(u.mul(y, x), me) +
                             u.mul(me, u.mul(x, y)) + u.mul(me, u.mul(y, x)) -
                             Rational(2) * u.mul(u.mul(x, me), y) -
                             Rational(2) * u.mul(u.mul(y, me), x);
                    if (!is_zero(v)) e2 = false;
                }
                QVec x2 = u.mul(x, x);
                QVec xmx = u.mul(u.mul(x, me), x);
                if (!is_zero(u.mul(x2, me) + u.mul(me, x2) - Rational(2) * xmx)) exmx = false;
                QVec c1 = u.mul(me, x) - u.mul(x, me);
                if (!is_zero(u.mul(c1, x) - u.mul(x, c1))) ecomm = false;
            }
        }
        rep.eq2 = e2;
        rep.eq_xmx = exmx;
        rep.eq_comm = ecomm;
    } else {
        const Involution& k = *m.envelope->twist;
        bool eK = true, eK2 = true;
        for (const auto& d1 : m_elts) {
            QVec me = in_u(d1);
            for (size_t i = 0; i < jb.size(); ++i) {
                const QVec& x = jb[i];
                QVec xk = k.apply(x);
                for (size_t j = i; j < jb.size(); ++j) {
                    const QVec& y = jb[j];
                    QVec yk = k.apply(y);
                    // xym + yxm + m x^K y^K + m y^K x^K - 2 x m y^K - 2 y m x^K
                    QVec v = u.mul(u.mul(x, y), me) + u.mul(u.mul(y, x), me) +
                             u.mul(me, u.mul(xk, yk)) + u.mul(me, u.mul(yk, xk)) -
                             Rational(2) * u.mul(u.mul(x, me), yk) -
                             Rational(2) * u.mul(u.mul(y, me), xk);
                    if (!is_zero(v)) eK = false;
                }
                QVec x2 = u.mul(x, x);
                QVec v2 = u.mul(x2, me) + u.mul(me, k.apply(x2)) -
                          Rational(2) * u.mul(u.mul(x, me), xk);
                if (!is_zero(v2)) eK2 = false;
            }
        }
        rep.eqK = eK;
        rep.eqK2 = eK2;
    }
    return rep;
}

SplitReport split_by_module_decomposition(const std::vector<const Bimodule*>& parts,
                                          const Rational& delta) {
    Bimodule sum = direct_sum_modules(parts);
    SplitReport rep;
    rep.delta = delta;
    rep.total_dim = derivations_at(sum, delta).dimension();
    int acc = 0;
    for (const auto* p : parts) {
        int d = derivations_at(*p, delta).dimension();
        rep.part_dims.push_back(d);
        acc += d;
    }
    if (acc != rep.total_dim)
        throw std::logic_error("module-sum lemma violated: " + std::to_string(rep.total_dim) +
                               " != " + std::to_string(acc));
    return rep;
}

DerivationSpace direct_sum_algebra_derivations(const std::vector<int>& block_dims,
                                               const Bimodule& m, const Rational& delta) {
    if (delta == 0) throw std::invalid_argument("the ideal-sum lemma requires delta != 0");
    const int dj = m.j->dim;
    int total = 0;
    for (int b : block_dims) total += b;
    if (total != dj) throw std::invalid_argument("block dims do not add up");

    const int ncols = m.dim * dj;
    std::vector<SparseRow> rows;
    auto push = [&](QVec coeff) {
        SparseRow sr = to_sparse(coeff);
        if (!sr.empty()) rows.push_back(std::move(sr));
    };
    // per-ideal defining identity, pairs within one block
    int off = 0;
    for (int b : block_dims) {
        for (int i = off; i < off + b; ++i)
            for (int j = i; j < off + b; ++j) {
                QVec cij = m.j->basis_product(i, j);
                for (int t = 0; t < m.dim; ++t) {
                    QVec coeff(ncols, Rational(0));
                    for (int l = 0; l < dj; ++l)
                        if (cij[l] != 0) coeff[t * dj + l] += cij[l];
                    for (int w = 0; w < m.dim; ++w) {
                        if (m.a(i, w, t) != 0) coeff[w * dj + j] -= delta * m.a(i, w, t);
                        if (m.a(j, w, t) != 0) coeff[w * dj + i] -= delta * m.a(j, w, t);
                    }
                    push(std::move(coeff));
                }
            }
        off += b;
    }
    // cross condition D_i(x) . y + x . D_j(y) = 0 for basis x, y in distinct
    // blocks
    int off_a = 0;
    for (size_t a = 0; a < block_dims.size(); ++a) {
        int off_b = off_a + block_dims[a];
        for (size_t b = a + 1; b < block_dims.size(); ++b) {
            for (int i = off_a; i < off_a + block_dims[a]; ++i)
                for (int j = off_b; j < off_b + block_dims[b]; ++j)
                    for (int t = 0; t < m.dim; ++t) {
                        QVec coeff(ncols, Rational(0));
                        for (int w = 0; w < m.dim; ++w) {
                            if (m.a(j, w, t) != 0) coeff[w * dj + i] += m.a(j, w, t);
                            if (m.a(i, w, t) != 0) coeff[w * dj + j] += m.a(i, w, t);
                        }
                        push(std::move(coeff));
                    }
            off_b += block_dims[b];
        }
        off_a += block_dims[a];
    }

    DerivationSpace out{m, delta, {}};
    RowSpace constrained(ncols);
    for (const auto& v : kernel_sparse(rows, ncols)) {
        QMat d(m.dim, dj);
        d.data.assign(v.begin(), v.end());
        constrained.insert(v);
        out.basis.push_back(std::move(d));
    }

    DerivationSpace direct = derivations_at(m, delta);
    RowSpace direct_space(ncols);
    for (const auto& d : direct.basis) direct_space.insert(d.data);
    if (constrained.dim() != direct_space.dim() ||
        constrained.basis() != direct_space.basis())
        throw std::logic_error("ideal-sum lemma violated");
    return out;
}

}  // namespace dd
