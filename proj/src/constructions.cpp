#include "deltaderive/constructions.hpp"

#include <stdexcept>

namespace dd {

Algebra rational_algebra() {
    Algebra q(1, "Q");
    q.c(0, 0, 0) = 1;
    q.unit = QVec{Rational(1)};
    return q;
}

AlgebraWithInvolution cayley_dickson(const Algebra& a, const Involution& conj,
                                     const Rational& gamma) {
    if (!a.unit) throw std::domain_error("cayley_dickson requires a unital algebra");
    if (conj.apply(*a.unit) != *a.unit)
        throw std::domain_error("cayley_dickson conjugation must fix the unit");
    const int d = a.dim;
    Algebra out(2 * d, a.label.empty() ? "CD" : "CD(" + a.label + ")");
    QVec ei(d, Rational(0));
    std::vector<QVec> conj_basis(d);
    for (int i = 0; i < d; ++i) {
        ei[i] = 1;
        conj_basis[i] = conj.apply(ei);
        ei[i] = 0;
    }
    auto set_first = [&](int i, int j, const QVec& v) {
        for (int k = 0; k < d; ++k) out.c(i, j, k) = v[k];
    };
    auto set_second = [&](int i, int j, const QVec& v) {
        for (int k = 0; k < d; ++k) out.c(i, j, d + k) = v[k];
    };
    QVec ej(d, Rational(0));
    for (int i = 0; i < d; ++i) {
        ei[i] = 1;
        for (int j = 0; j < d; ++j) {
            ej[j] = 1;
            // (e_i, 0)(e_j, 0) = (e_i e_j, 0)
            set_first(i, j, a.mul(ei, ej));
            // (e_i, 0)(0, e_j) = (0, e_j e_i)
            set_second(i, d + j, a.mul(ej, ei));
            // (0, e_i)(e_j, 0) = (0, e_i conj(e_j))
            set_second(d + i, j, a.mul(ei, conj_basis[j]));
            // (0, e_i)(0, e_j) = (gamma conj(e_j) e_i, 0)
            set_first(d + i, d + j, gamma * a.mul(conj_basis[j], ei));
            ej[j] = 0;
        }
        ei[i] = 0;
    }
    QVec u(2 * d, Rational(0));
    for (int k = 0; k < d; ++k) u[k] = (*a.unit)[k];
    out.unit = std::move(u);

    Involution dbl{QMat(2 * d, 2 * d)};
    for (int i = 0; i < d; ++i) {
        for (int k = 0; k < d; ++k) dbl.mat.at(k, i) = conj.mat.at(k, i);
        dbl.mat.at(d + i, d + i) = -1;
    }
    return {std::move(out), std::move(dbl)};
}

AlgebraWithInvolution quaternion_algebra() {
    Algebra q = rational_algebra();
    Involution id{QMat::identity(1)};
    auto c = cayley_dickson(q, id, rat(-1));
    auto h = cayley_dickson(c.algebra, c.involution, rat(-1));
    h.algebra.label = "H";
    return h;
}

AlgebraWithInvolution octonion_algebra() {
    auto h = quaternion_algebra();
    auto o = cayley_dickson(h.algebra, h.involution, rat(-1));
    o.algebra.label = "O";
    return o;
}

QVec matrix_algebra_mul(const Algebra& a, int n, const QVec& x, const QVec& y) {
    const int da = a.dim;
    QVec out(static_cast<size_t>(n) * n * da, Rational(0));
    auto cell = [&](const QVec& v, int r, int s) {
        return QVec(v.begin() + static_cast<size_t>(r * n + s) * da,
                    v.begin() + static_cast<size_t>(r * n + s + 1) * da);
    };
    for (int r = 0; r < n; ++r)
        for (int u = 0; u < n; ++u)
            for (int s = 0; s < n; ++s) {
                QVec xc = cell(x, r, s);
                if (is_zero(xc)) continue;
                QVec yc = cell(y, s, u);
                if (is_zero(yc)) continue;
                QVec p = a.mul(xc, yc);
                for (int q = 0; q < da; ++q) out[static_cast<size_t>(r * n + u) * da + q] += p[q];
            }
    return out;
}

MatrixAlgebraResult matrix_algebra(const Algebra& a, int n,
                                   const std::optional<Involution>& conj) {
    const int da = a.dim;
    const int dim = n * n * da;
    Algebra out(dim, "M" + std::to_string(n) + "(" + a.label + ")");
    for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s)
            for (int u = 0; u < n; ++u)
                for (int p = 0; p < da; ++p)
                    for (int q = 0; q < da; ++q) {
                        // (E_rs a_p)(E_su a_q) = E_ru a_p a_q
                        int i = (r * n + s) * da + p;
                        int j = (s * n + u) * da + q;
                        for (int k = 0; k < da; ++k)
                            if (a.c(p, q, k) != 0) out.c(i, j, (r * n + u) * da + k) = a.c(p, q, k);
                    }
    if (a.unit) {
        QVec unit(dim, Rational(0));
        for (int r = 0; r < n; ++r)
            for (int p = 0; p < da; ++p) unit[(r * n + r) * da + p] = (*a.unit)[p];
        out.unit = std::move(unit);
    }
    MatrixAlgebraResult res{std::move(out), std::nullopt};
    if (conj) {
        Involution inv{QMat(dim, dim)};
        for (int r = 0; r < n; ++r)
            for (int s = 0; s < n; ++s)
                for (int p = 0; p < da; ++p)
                    for (int k = 0; k < da; ++k)
                        if (conj->mat.at(k, p) != 0)
                            inv.mat.at((s * n + r) * da + k, (r * n + s) * da + p) =
                                conj->mat.at(k, p);
        res.involution = std::move(inv);
    }
    return res;
}

Algebra bilinear_form_jordan(const QMat& gram) {
    const int d = gram.rows;
    if (gram.cols != d || d < 2) throw std::invalid_argument("gram must be square, dim V >= 2");
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            if (gram.at(i, j) != gram.at(j, i)) throw std::invalid_argument("gram must be symmetric");
    if (det_dense(gram) == 0) throw std::invalid_argument("gram must be nondegenerate");
    Algebra out(d + 1, "J(V,f) d=" + std::to_string(d));
    QVec u(d + 1, Rational(0));
    u[0] = 1;
    for (int k = 0; k <= d; ++k) {
        out.c(0, k, k) = 1;
        out.c(k, 0, k) = 1;
    }
    out.c(0, 0, 0) = 1;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) out.c(1 + i, 1 + j, 0) = gram.at(i, j);
    out.unit = std::move(u);
    return out;
}

HermitianJordanResult hermitian_jordan(const Algebra& a, const Involution& conj, int n) {
    if (!a.unit) throw std::domain_error("hermitian_jordan requires a unital coefficient algebra");
    const int da = a.dim;
    auto splus = fixed_space(a, conj, +1, /*induced_product=*/false);
    RowSpace splus_space = span_of(da, splus.basis);

    const int ambient = n * n * da;
    std::vector<QVec> basis;
    // diagonal cells first
    for (int i = 0; i < n; ++i)
        for (const auto& s : splus.basis) {
            QVec v(ambient, Rational(0));
            for (int p = 0; p < da; ++p) v[(i * n + i) * da + p] = s[p];
            basis.push_back(std::move(v));
        }
    // off-diagonal cells i<j, full copy of A
    QVec ep(da, Rational(0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int p = 0; p < da; ++p) {
                ep[p] = 1;
                QVec cp = conj.apply(ep);
                ep[p] = 0;
                QVec v(ambient, Rational(0));
                v[(i * n + j) * da + p] = 1;
                for (int k = 0; k < da; ++k) v[(j * n + i) * da + k] = cp[k];
                basis.push_back(std::move(v));
            }
    const int dim = static_cast<int>(basis.size());

    // coordinates are read off cell by cell
    auto coords = [&](const QVec& v) {
        QVec t(dim, Rational(0));
        int idx = 0;
        for (int i = 0; i < n; ++i) {
            QVec cell(v.begin() + static_cast<size_t>(i * n + i) * da,
                      v.begin() + static_cast<size_t>(i * n + i + 1) * da);
            auto cc = splus_space.coords(cell);
            if (!cc) throw std::domain_error("product left the Hermitian subspace");
            for (size_t s = 0; s < cc->size(); ++s) t[idx + s] = (*cc)[s];
            idx += splus_space.dim();
        }
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                for (int p = 0; p < da; ++p) t[idx + p] = v[(i * n + j) * da + p];
                idx += da;
            }
        return t;
    };

    Algebra out(dim, "S+(M" + std::to_string(n) + "(" + a.label + "))");
    for (int s = 0; s < dim; ++s)
        for (int t = s; t < dim; ++t) {
            QVec prod = half() * (matrix_algebra_mul(a, n, basis[s], basis[t]) +
                                  matrix_algebra_mul(a, n, basis[t], basis[s]));
            QVec tc = coords(prod);
            for (int k = 0; k < dim; ++k) {
                out.c(s, t, k) = tc[k];
                out.c(t, s, k) = tc[k];
            }
        }
    QVec idmat(ambient, Rational(0));
    for (int i = 0; i < n; ++i)
        for (int p = 0; p < da; ++p) idmat[(i * n + i) * da + p] = (*a.unit)[p];
    out.unit = coords(idmat);

    return {std::move(out), std::move(basis), splus_space.dim()};
}

Involution transpose_involution(int n, const QMat& p) {
    // inverse of p by column solves
    QMat pinv(n, n);
    for (int j = 0; j < n; ++j) {
        QVec e(n, Rational(0));
        e[j] = 1;
        auto col = solve_dense(p, e);
        if (!col) throw std::invalid_argument("singular matrix in transpose_involution");
        for (int i = 0; i < n; ++i) pinv.at(i, j) = (*col)[i];
    }
    Involution inv{QMat(n * n, n * n)};
    // E_rs -> P E_sr P^{-1}; (P E_sr P^{-1})_{uv} = P_{us} (P^{-1})_{rv}
    for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s)
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v) {
                    Rational e = p.at(u, s) * pinv.at(r, v);
                    if (e != 0) inv.mat.at(u * n + v, r * n + s) = e;
                }
    return inv;
}

}  // namespace dd
