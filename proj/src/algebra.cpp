#include "deltaderive/algebra.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dd {

Algebra::Algebra(int d, std::string name)
    : dim(d), table(static_cast<size_t>(d) * d * d, Rational(0)), label(std::move(name)) {}

QVec Algebra::basis_product(int i, int j) const {
    QVec out(dim);
    for (int k = 0; k < dim; ++k) out[k] = c(i, j, k);
    return out;
}

QVec Algebra::mul(const QVec& x, const QVec& y) const {
    if (static_cast<int>(x.size()) != dim || static_cast<int>(y.size()) != dim)
        throw std::invalid_argument("element dimension mismatch");
    QVec out(dim, Rational(0));
    for (int i = 0; i < dim; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < dim; ++j) {
            if (y[j] == 0) continue;
            const Rational f = x[i] * y[j];
            for (int k = 0; k < dim; ++k)
                if (c(i, j, k) != 0) out[k] += f * c(i, j, k);
        }
    }
    return out;
}

QMat Algebra::left_mult(int i) const {
    QMat m(dim, dim);
    for (int j = 0; j < dim; ++j)
        for (int k = 0; k < dim; ++k) m.at(k, j) = c(i, j, k);
    return m;
}

QMat Algebra::left_mult(const QVec& x) const {
    QMat m(dim, dim);
    for (int i = 0; i < dim; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k)
                if (c(i, j, k) != 0) m.at(k, j) += x[i] * c(i, j, k);
    }
    return m;
}

QMat Algebra::right_mult(const QVec& x) const {
    QMat m(dim, dim);
    for (int j = 0; j < dim; ++j) {
        if (x[j] == 0) continue;
        for (int i = 0; i < dim; ++i)
            for (int k = 0; k < dim; ++k)
                if (c(i, j, k) != 0) m.at(k, i) += x[j] * c(i, j, k);
    }
    return m;
}

bool Algebra::unit_valid() const {
    if (!unit) return false;
    QVec e(dim, Rational(0));
    for (int i = 0; i < dim; ++i) {
        e[i] = 1;
        if (mul(*unit, e) != e || mul(e, *unit) != e) return false;
        e[i] = 0;
    }
    return true;
}

Element multiply(const Algebra& a, const Element& x, const Element& y) {
    if (x.algebra != &a || y.algebra != &a ||
        static_cast<int>(x.coeffs.size()) != a.dim || static_cast<int>(y.coeffs.size()) != a.dim)
        throw std::invalid_argument("elements do not belong to the algebra");
    return Element{&a, a.mul(x.coeffs, y.coeffs)};
}

bool is_commutative(const Algebra& a) {
    for (int i = 0; i < a.dim; ++i)
        for (int j = i + 1; j < a.dim; ++j)
            for (int k = 0; k < a.dim; ++k)
                if (a.c(i, j, k) != a.c(j, i, k)) return false;
    return true;
}

std::optional<QVec> find_unit(const Algebra& a) {
    if (a.unit && a.unit_valid()) return a.unit;
    // solve L_u = id and R_u = id for the coefficients of u
    QMat sys(2 * a.dim * a.dim, a.dim);
    QVec rhs(2 * a.dim * a.dim, Rational(0));
    int r = 0;
    for (int j = 0; j < a.dim; ++j)
        for (int k = 0; k < a.dim; ++k) {
            for (int i = 0; i < a.dim; ++i) {
                sys.at(r, i) = a.c(i, j, k);
                sys.at(r + 1, i) = a.c(j, i, k);
            }
            rhs[r] = rhs[r + 1] = (j == k) ? 1 : 0;
            r += 2;
        }
    return solve_dense(sys, rhs);
}

// --- scaled 64-bit kernel ----------------------------------------------------

namespace {

struct ScaledTable {
    int d = 0;
    std::vector<std::int64_t> s;  // table * lcm(denominators)
    std::int64_t maxabs = 0;
    bool ok = false;
};

ScaledTable scale_table(const Algebra& a) {
    ScaledTable t;
    t.d = a.dim;
    Integer lcm(1);
    for (const auto& x : a.table) {
        Integer d = x.get_den();
        Integer g;
        mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
        lcm = lcm / g * d;
        if (lcm > 1048576) return t;
    }
    t.s.resize(a.table.size());
    for (size_t i = 0; i < a.table.size(); ++i) {
        Rational v = a.table[i] * Rational(lcm);
        Integer n = v.get_num();
        if (!n.fits_slong_p()) return t;
        t.s[i] = n.get_si();
        t.maxabs = std::max(t.maxabs, std::abs(t.s[i]));
    }
    // bound for the Jordan scan: commutator entries stay within
    // 2 * d^2 * maxabs^3
    __int128 bound = (__int128)2 * t.d * t.d;
    bound *= t.maxabs > 0 ? t.maxabs : 1;
    bound *= t.maxabs > 0 ? t.maxabs : 1;
    bound *= t.maxabs > 0 ? t.maxabs : 1;
    if (bound >= ((__int128)1 << 62)) return t;
    t.ok = true;
    return t;
}

inline std::int64_t sc(const ScaledTable& t, int i, int j, int k) {
    return t.s[(static_cast<size_t>(i) * t.d + j) * t.d + k];
}

bool assoc_fast(const ScaledTable& t) {
    const int d = t.d;
    std::vector<std::int64_t> lhs(d), rhs(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                std::fill(lhs.begin(), lhs.end(), 0);
                std::fill(rhs.begin(), rhs.end(), 0);
                for (int l = 0; l < d; ++l) {
                    const std::int64_t u = sc(t, i, j, l);
                    if (u)
                        for (int m = 0; m < d; ++m) lhs[m] += u * sc(t, l, k, m);
                    const std::int64_t v = sc(t, j, k, l);
                    if (v)
                        for (int m = 0; m < d; ++m) rhs[m] += v * sc(t, i, l, m);
                }
                if (lhs != rhs) return false;
            }
    return true;
}

bool assoc_reference(const Algebra& a) {
    QVec ei(a.dim, Rational(0)), ek(a.dim, Rational(0));
    for (int i = 0; i < a.dim; ++i) {
        ei[i] = 1;
        for (int j = 0; j < a.dim; ++j) {
            QVec cij = a.basis_product(i, j);
            for (int k = 0; k < a.dim; ++k) {
                ek[k] = 1;
                if (a.mul(cij, ek) != a.mul(ei, a.basis_product(j, k))) return false;
                ek[k] = 0;
            }
        }
        ei[i] = 0;
    }
    return true;
}

// Left multiplication matrices, flattened row-major (row = output coord).
std::vector<std::vector<std::int64_t>> left_mults_fast(const ScaledTable& t) {
    const int d = t.d;
    std::vector<std::vector<std::int64_t>> ls(d, std::vector<std::int64_t>(d * d, 0));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) ls[i][static_cast<size_t>(k) * d + j] = sc(t, i, j, k);
    return ls;
}

inline size_t pair_index(int i, int j, int d) {
    // i <= j
    return static_cast<size_t>(i) * d - static_cast<size_t>(i) * (i + 1) / 2 + j;
}

// The quadruple linearization of the Jordan identity, in operator form: for
// every basis triple (i <= j <= k),
//   [L_k, L_{e_i e_j}] + [L_j, L_{e_i e_k}] + [L_i, L_{e_j e_k}] = 0.
// Applying this to every basis vector y runs exactly over all basis
// quadruples of the linearized identity.
bool jordan_fast(const ScaledTable& t) {
    const int d = t.d;
    const auto ls = left_mults_fast(t);
    // L_{e_i e_j} for every unordered pair
    std::vector<std::vector<std::int64_t>> pm(pair_index(d - 1, d - 1, d) + 1);
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) {
            auto& m = pm[pair_index(i, j, d)];
            m.assign(static_cast<size_t>(d) * d, 0);
            for (int p = 0; p < d; ++p) {
                const std::int64_t cp = sc(t, i, j, p);
                if (!cp) continue;
                const auto& lp = ls[p];
                for (size_t q = 0; q < m.size(); ++q) m[q] += cp * lp[q];
            }
        }

    auto matvec = [d](const std::vector<std::int64_t>& m, const std::int64_t* v,
                      std::int64_t* out) {
        for (int r = 0; r < d; ++r) {
            std::int64_t s = 0;
            const std::int64_t* row = m.data() + static_cast<size_t>(r) * d;
            for (int c = 0; c < d; ++c) s += row[c] * v[c];
            out[r] = s;
        }
    };

    // commutator applied to basis vector y, accumulated into acc
    auto add_comm_y = [&](const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b,
                          int y, std::vector<std::int64_t>& acc, std::vector<std::int64_t>& col,
                          std::vector<std::int64_t>& tmp) {
        for (int r = 0; r < d; ++r) col[r] = b[static_cast<size_t>(r) * d + y];
        matvec(a, col.data(), tmp.data());
        for (int r = 0; r < d; ++r) acc[r] += tmp[r];
        for (int r = 0; r < d; ++r) col[r] = a[static_cast<size_t>(r) * d + y];
        matvec(b, col.data(), tmp.data());
        for (int r = 0; r < d; ++r) acc[r] -= tmp[r];
    };

    auto check_quadruple = [&](int i, int j, int k, int y, std::vector<std::int64_t>& acc,
                               std::vector<std::int64_t>& col, std::vector<std::int64_t>& tmp) {
        std::fill(acc.begin(), acc.end(), 0);
        add_comm_y(ls[k], pm[pair_index(i, j, d)], y, acc, col, tmp);
        add_comm_y(ls[j], pm[pair_index(i, k, d)], y, acc, col, tmp);
        add_comm_y(ls[i], pm[pair_index(j, k, d)], y, acc, col, tmp);
        return std::all_of(acc.begin(), acc.end(), [](std::int64_t v) { return v == 0; });
    };

    if (d >= 24) {
        // look for a cheap counterexample before committing to the full scan
        RationalStream rng(0xC0FFEE);
        std::vector<std::int64_t> acc(d), col(d), tmp(d);
        for (int n = 0; n < 20000; ++n) {
            int i = static_cast<int>(rng.next_u64() % d);
            int j = static_cast<int>(rng.next_u64() % d);
            int k = static_cast<int>(rng.next_u64() % d);
            int y = static_cast<int>(rng.next_u64() % d);
            if (i > j) std::swap(i, j);
            if (j > k) std::swap(j, k);
            if (i > j) std::swap(i, j);
            if (!check_quadruple(i, j, k, y, acc, col, tmp)) return false;
        }
    }

    std::vector<std::array<int, 3>> triples;
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j)
            for (int k = j; k < d; ++k) triples.push_back({i, j, k});

    std::atomic<bool> violated{false};
#ifdef _OPENMP
#pragma omp parallel
#endif
    {
        std::vector<std::int64_t> acc(d), col(d), tmp(d);
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 16)
#endif
        for (long n = 0; n < static_cast<long>(triples.size()); ++n) {
            if (violated) continue;
            const auto [i, j, k] = triples[n];
            for (int y = 0; y < d; ++y)
                if (!check_quadruple(i, j, k, y, acc, col, tmp)) {
                    violated = true;
                    break;
                }
        }
    }
    return !violated;
}

bool jordan_reference(const Algebra& a) {
    const int d = a.dim;
    std::vector<QMat> ls(d);
    for (int i = 0; i < d; ++i) ls[i] = a.left_mult(i);
    auto lprod = [&](int i, int j) { return a.left_mult(a.basis_product(i, j)); };
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) {
            QMat mij = lprod(i, j);
            for (int k = j; k < d; ++k) {
                QMat e = (ls[k] * mij - mij * ls[k]) + (ls[j] * lprod(i, k) - lprod(i, k) * ls[j]) +
                         (ls[i] * lprod(j, k) - lprod(j, k) * ls[i]);
                if (!e.is_zero()) return false;
            }
        }
    return true;
}

}  // namespace

bool is_associative(const Algebra& a) {
    ScaledTable t = scale_table(a);
    if (t.ok) return assoc_fast(t);
    return assoc_reference(a);
}

bool is_linearized_jordan(const Algebra& a) {
    if (!is_commutative(a)) return false;
    ScaledTable t = scale_table(a);
    if (t.ok) return jordan_fast(t);
    return jordan_reference(a);
}

IdentityFlags check_identities(const Algebra& a) {
    IdentityFlags f;
    f.commutative = is_commutative(a);
    f.unital = find_unit(a).has_value();
    f.associative = is_associative(a);
    f.linearized_jordan = is_linearized_jordan(a);
    return f;
}

IdentityFlags check_identities_reference(const Algebra& a) {
    IdentityFlags f;
    f.commutative = is_commutative(a);
    f.unital = find_unit(a).has_value();
    f.associative = assoc_reference(a);
    f.linearized_jordan = f.commutative && jordan_reference(a);
    return f;
}

bool involution_valid(const Algebra& a, const Involution& s) {
    if (s.mat.rows != a.dim || s.mat.cols != a.dim) return false;
    if (!(s.mat * s.mat == QMat::identity(a.dim))) return false;
    QVec ei(a.dim, Rational(0));
    std::vector<QVec> im(a.dim);
    for (int i = 0; i < a.dim; ++i) {
        ei[i] = 1;
        im[i] = s.apply(ei);
        ei[i] = 0;
    }
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j)
            if (s.apply(a.basis_product(i, j)) != a.mul(im[j], im[i])) return false;
    return true;
}

Algebra plus_algebra(const Algebra& a) {
    if (!is_associative(a))
        throw std::domain_error("plus_algebra requires an associative input");
    Algebra out(a.dim, a.label.empty() ? "plus" : a.label + "+");
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j)
            for (int k = 0; k < a.dim; ++k)
                out.c(i, j, k) = (a.c(i, j, k) + a.c(j, i, k)) * half();
    out.unit = a.unit;
    return out;
}

Algebra opposite(const Algebra& a) {
    Algebra out(a.dim, a.label.empty() ? "op" : a.label + "^op");
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j)
            for (int k = 0; k < a.dim; ++k) out.c(i, j, k) = a.c(j, i, k);
    out.unit = a.unit;
    return out;
}

namespace {

// Induced structure constants on an echelonized subspace basis; throws when a
// basis product leaves the span.
Algebra induced_algebra(const Algebra& a, const RowSpace& space, const std::string& label,
                        bool symmetrized) {
    const int n = space.dim();
    Algebra out(n, label);
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
            QVec prod = a.mul(space.basis()[s], space.basis()[t]);
            if (symmetrized)
                prod = half() * (prod + a.mul(space.basis()[t], space.basis()[s]));
            auto coords = space.coords(prod);
            if (!coords) throw std::domain_error("subspace not closed under the product");
            for (int k = 0; k < n; ++k) out.c(s, t, k) = (*coords)[k];
        }
    if (a.unit) {
        if (auto u = space.coords(*a.unit)) out.unit = *u;
    }
    if (!out.unit) {
        if (auto u = find_unit(out)) out.unit = *u;
    }
    return out;
}

}  // namespace

EigenspaceResult fixed_space(const Algebra& a, const Involution& sigma, int sign,
                             bool induced_product) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    RowSpace space(a.dim);
    QVec ei(a.dim, Rational(0));
    for (int i = 0; i < a.dim; ++i) {
        ei[i] = 1;
        QVec proj = half() * (ei + Rational(sign) * sigma.apply(ei));
        space.insert(std::move(proj));
        ei[i] = 0;
    }
    EigenspaceResult out;
    out.basis = space.basis();
    if (sign == 1 && induced_product)
        out.induced = induced_algebra(a, space, "S+(" + a.label + ")", /*symmetrized=*/true);
    return out;
}

Algebra direct_sum(const Algebra& a1, const Algebra& a2) {
    Algebra out(a1.dim + a2.dim, a1.label + "(+)" + a2.label);
    for (int i = 0; i < a1.dim; ++i)
        for (int j = 0; j < a1.dim; ++j)
            for (int k = 0; k < a1.dim; ++k) out.c(i, j, k) = a1.c(i, j, k);
    for (int i = 0; i < a2.dim; ++i)
        for (int j = 0; j < a2.dim; ++j)
            for (int k = 0; k < a2.dim; ++k)
                out.c(a1.dim + i, a1.dim + j, a1.dim + k) = a2.c(i, j, k);
    if (a1.unit && a2.unit) {
        QVec u(out.dim, Rational(0));
        for (int i = 0; i < a1.dim; ++i) u[i] = (*a1.unit)[i];
        for (int i = 0; i < a2.dim; ++i) u[a1.dim + i] = (*a2.unit)[i];
        out.unit = std::move(u);
    }
    return out;
}

SubalgebraResult subalgebra_closure(const Algebra& a, const std::vector<QVec>& gens) {
    RowSpace space(a.dim);
    for (const auto& g : gens) space.insert(g);
    bool grew = true;
    while (grew) {
        grew = false;
        const auto snapshot = space.basis();
        for (const auto& x : snapshot)
            for (const auto& y : snapshot) {
                if (space.insert(a.mul(x, y))) grew = true;
                if (space.insert(a.mul(y, x))) grew = true;
            }
    }
    SubalgebraResult out{space.basis(),
                         induced_algebra(a, space, a.label + "|sub", /*symmetrized=*/false)};
    return out;
}

std::vector<QMat> inner_derivation_space(const Algebra& j) {
    if (!is_commutative(j)) throw std::domain_error("inner derivations need a commutative algebra");
    const int d = j.dim;
    std::vector<QMat> ls(d);
    for (int i = 0; i < d; ++i) ls[i] = j.left_mult(i);
    RowSpace span(d * d);
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b) {
            QMat comm = ls[a] * ls[b] - ls[b] * ls[a];
            span.insert(comm.data);
        }
    std::vector<QMat> out;
    for (const auto& row : span.basis()) {
        QMat m(d, d);
        m.data = row;
        out.push_back(std::move(m));
    }
    // every element must be an ordinary derivation
    for (const auto& der : out) {
        std::vector<QVec> dImg(d);
        for (int i = 0; i < d; ++i) {
            QVec col(d);
            for (int r = 0; r < d; ++r) col[r] = der.at(r, i);
            dImg[i] = std::move(col);
        }
        QVec ei(d, Rational(0)), ej(d, Rational(0));
        for (int i = 0; i < d; ++i) {
            ei[i] = 1;
            for (int jj = i; jj < d; ++jj) {
                ej[jj] = 1;
                if (der.apply(j.basis_product(i, jj)) != j.mul(dImg[i], ej) + j.mul(ei, dImg[jj]))
                    throw std::logic_error("inner span element fails the derivation identity");
                ej[jj] = 0;
            }
            ei[i] = 0;
        }
    }
    return out;
}

}  // namespace dd
