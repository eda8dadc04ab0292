#include "deltaderive/linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dd {

QMat QMat::identity(int n) {
    QMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QVec QMat::row(int i) const {
    return QVec(data.begin() + static_cast<size_t>(i) * cols,
                data.begin() + static_cast<size_t>(i + 1) * cols);
}

QVec QMat::apply(const QVec& v) const {
    if (static_cast<int>(v.size()) != cols) throw std::invalid_argument("dimension mismatch");
    QVec out(rows, Rational(0));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (at(i, j) != 0 && v[j] != 0) out[i] += at(i, j) * v[j];
    return out;
}

QMat QMat::operator*(const QMat& o) const {
    if (cols != o.rows) throw std::invalid_argument("dimension mismatch");
    QMat out(rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            const Rational& c = at(i, k);
            if (c == 0) continue;
            for (int j = 0; j < o.cols; ++j)
                if (o.at(k, j) != 0) out.at(i, j) += c * o.at(k, j);
        }
    return out;
}

QMat QMat::operator+(const QMat& o) const {
    QMat out = *this;
    for (size_t i = 0; i < data.size(); ++i) out.data[i] += o.data[i];
    return out;
}

QMat QMat::operator-(const QMat& o) const {
    QMat out = *this;
    for (size_t i = 0; i < data.size(); ++i) out.data[i] -= o.data[i];
    return out;
}

bool QMat::is_zero() const {
    return std::all_of(data.begin(), data.end(), [](const Rational& x) { return x == 0; });
}

QVec operator+(const QVec& a, const QVec& b) {
    QVec out(a);
    for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

QVec operator-(const QVec& a, const QVec& b) {
    QVec out(a);
    for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    return out;
}

QVec operator*(const Rational& c, const QVec& v) {
    QVec out(v);
    for (auto& x : out) x *= c;
    return out;
}

Rational dot(const QVec& a, const QVec& b) {
    Rational s(0);
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
    return s;
}

bool is_zero(const QVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

SparseRow to_sparse(const QVec& v) {
    SparseRow r;
    for (size_t j = 0; j < v.size(); ++j)
        if (v[j] != 0) r.emplace_back(static_cast<int>(j), v[j]);
    return r;
}

Rational dot(const SparseRow& r, const QVec& v) {
    Rational s(0);
    for (const auto& [c, x] : r)
        if (v[c] != 0) s += x * v[c];
    return s;
}

// --- RowSpace ----------------------------------------------------------------

bool RowSpace::insert(QVec v) {
    // eliminate against existing pivots
    for (size_t i = 0; i < rows_.size(); ++i) {
        const Rational& c = v[pivots_[i]];
        if (c != 0) {
            Rational f = c;  // rows are normalized with pivot entry 1
            for (int j = 0; j < ambient_; ++j)
                if (rows_[i][j] != 0) v[j] -= f * rows_[i][j];
        }
    }
    int piv = -1;
    for (int j = 0; j < ambient_; ++j)
        if (v[j] != 0) {
            piv = j;
            break;
        }
    if (piv < 0) return false;
    Rational lead = v[piv];
    for (auto& x : v) x /= lead;
    // clear the new pivot column in the old rows
    for (auto& r : rows_) {
        const Rational c = r[piv];
        if (c != 0)
            for (int j = 0; j < ambient_; ++j)
                if (v[j] != 0) r[j] -= c * v[j];
    }
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
    size_t idx = static_cast<size_t>(it - pivots_.begin());
    pivots_.insert(it, piv);
    rows_.insert(rows_.begin() + idx, std::move(v));
    return true;
}

QVec RowSpace::reduce(QVec v) const {
    for (size_t i = 0; i < rows_.size(); ++i) {
        const Rational c = v[pivots_[i]];
        if (c != 0)
            for (int j = 0; j < ambient_; ++j)
                if (rows_[i][j] != 0) v[j] -= c * rows_[i][j];
    }
    return v;
}

bool RowSpace::contains(const QVec& v) const { return is_zero(reduce(v)); }

std::optional<QVec> RowSpace::coords(const QVec& v) const {
    if (!contains(v)) return std::nullopt;
    QVec t(rows_.size());
    for (size_t i = 0; i < rows_.size(); ++i) t[i] = v[pivots_[i]];
    return t;
}

RowSpace span_of(int ambient, const std::vector<QVec>& vectors) {
    RowSpace s(ambient);
    for (const auto& v : vectors) s.insert(v);
    return s;
}

// --- dense Bareiss -------------------------------------------------------

namespace {

struct IntEchelon {
    std::vector<std::vector<Integer>> m;
    std::vector<std::pair<int, int>> pivots;  // (row, col) in elimination order
    int cols = 0;
};

std::vector<Integer> clear_row(const QVec& row) {
    Integer l(1);
    for (const auto& x : row) {
        Integer d = x.get_den();
        Integer g;
        mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        l = l / g * d;
    }
    std::vector<Integer> out(row.size());
    for (size_t j = 0; j < row.size(); ++j) {
        Rational v = row[j] * Rational(l);
        out[j] = v.get_num();
    }
    return out;
}

// Fraction-free forward elimination. Pivot: smallest column first, then the
// candidate entry with the fewest bits, then the lowest row index.
IntEchelon bareiss_forward(const QMat& q) {
    IntEchelon e;
    e.cols = q.cols;
    e.m.reserve(q.rows);
    for (int i = 0; i < q.rows; ++i) e.m.push_back(clear_row(q.row(i)));

    Integer prev(1);
    int step = 0;
    for (int col = 0; col < q.cols && step < q.rows; ++col) {
        int best = -1;
        size_t best_bits = 0;
        for (int i = step; i < q.rows; ++i) {
            if (e.m[i][col] == 0) continue;
            size_t bits = mpz_sizeinbase(e.m[i][col].get_mpz_t(), 2);
            if (best < 0 || bits < best_bits) {
                best = i;
                best_bits = bits;
            }
        }
        if (best < 0) continue;
        std::swap(e.m[step], e.m[best]);
        const Integer piv = e.m[step][col];
        for (int i = step + 1; i < q.rows; ++i) {
            if (e.m[i][col] == 0) {
                // still rescale so the Bareiss divisions stay exact
                for (int j = col + 1; j < q.cols; ++j)
                    if (e.m[i][j] != 0) e.m[i][j] = piv * e.m[i][j] / prev;
                continue;
            }
            const Integer f = e.m[i][col];
            for (int j = col + 1; j < q.cols; ++j)
                e.m[i][j] = (piv * e.m[i][j] - f * e.m[step][j]) / prev;
            e.m[i][col] = 0;
        }
        prev = piv;
        e.pivots.emplace_back(step, col);
        ++step;
    }
    return e;
}

std::vector<QVec> back_substitute(const std::vector<std::pair<int, QVec>>& pivot_rows, int ncols) {
    // pivot_rows: (pivot column, row) sorted ascending by pivot column;
    // entries of each row to the left of its pivot are zero.
    std::vector<bool> is_pivot(ncols, false);
    for (const auto& [c, r] : pivot_rows) is_pivot[c] = true;
    std::vector<QVec> kernel;
    for (int f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        QVec x(ncols, Rational(0));
        x[f] = 1;
        for (auto it = pivot_rows.rbegin(); it != pivot_rows.rend(); ++it) {
            const auto& [p, row] = *it;
            if (p > f) continue;
            Rational s(0);
            for (int j = p + 1; j < ncols; ++j)
                if (row[j] != 0 && x[j] != 0) s += row[j] * x[j];
            x[p] = -s / row[p];
        }
        kernel.push_back(std::move(x));
    }
    return kernel;
}

}  // namespace

std::vector<QVec> nullspace_dense(const QMat& m) {
    IntEchelon e = bareiss_forward(m);
    std::vector<std::pair<int, QVec>> pivot_rows;
    for (const auto& [r, c] : e.pivots) {
        QVec row(m.cols);
        for (int j = 0; j < m.cols; ++j) row[j] = Rational(e.m[r][j]);
        pivot_rows.emplace_back(c, std::move(row));
    }
    return back_substitute(pivot_rows, m.cols);
}

int rank_dense(const QMat& m) { return static_cast<int>(bareiss_forward(m).pivots.size()); }

Rational det_dense(QMat m) {
    if (m.rows != m.cols) throw std::invalid_argument("determinant of non-square matrix");
    int n = m.rows;
    QVec scale(n, Rational(1));
    std::vector<std::vector<Integer>> a;
    for (int i = 0; i < n; ++i) {
        QVec r = m.row(i);
        Integer l(1);
        for (const auto& x : r) {
            Integer d = x.get_den();
            Integer g;
            mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
            l = l / g * d;
        }
        scale[i] = Rational(l);
        std::vector<Integer> row(n);
        for (int j = 0; j < n; ++j) row[j] = Rational(r[j] * Rational(l)).get_num();
        a.push_back(std::move(row));
    }
    Integer prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int s = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) {
                    s = i;
                    break;
                }
            if (s < 0) return Rational(0);
            std::swap(a[k], a[s]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    Rational det = Rational(a[n - 1][n - 1]) * Rational(sign);
    for (int i = 0; i < n; ++i) det /= scale[i];
    return det;
}

std::optional<QVec> solve_dense(const QMat& a, const QVec& b) {
    QMat aug(a.rows, a.cols + 1);
    for (int i = 0; i < a.rows; ++i) {
        for (int j = 0; j < a.cols; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols) = b[i];
    }
    RowSpace rs(a.cols + 1);
    for (int i = 0; i < a.rows; ++i) rs.insert(aug.row(i));
    // inconsistent iff some echelon row pivots on the augmented column
    QVec x(a.cols, Rational(0));
    const auto& pivots = rs.pivots();
    for (size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == a.cols) return std::nullopt;
    }
    // rows are in RREF: x[pivot] = rhs entry
    for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = rs.basis()[i][a.cols];
    // RREF leaves non-pivot columns free (set to zero); fix them up exactly
    for (size_t i = 0; i < pivots.size(); ++i) {
        Rational s(0);
        for (int j = 0; j < a.cols; ++j)
            if (j != pivots[i] && rs.basis()[i][j] != 0 && x[j] != 0) s += rs.basis()[i][j] * x[j];
        x[pivots[i]] -= s;
    }
    return x;
}

// --- sparse kernel ---------------------------------------------------------

namespace {

// pivot column -> row whose leading column is the key
using PivotMap = std::map<int, SparseRow>;

SparseRow axpy(const SparseRow& r, const Rational& coef, const SparseRow& p) {
    // r + coef * p, merged
    SparseRow out;
    out.reserve(r.size() + p.size());
    size_t i = 0, j = 0;
    while (i < r.size() || j < p.size()) {
        if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
            out.push_back(r[i++]);
        } else if (i == r.size() || p[j].first < r[i].first) {
            out.emplace_back(p[j].first, coef * p[j].second);
            ++j;
        } else {
            Rational v = r[i].second + coef * p[j].second;
            if (v != 0) out.emplace_back(r[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

SparseRow reduce_row(SparseRow r, const PivotMap& pivots) {
    while (!r.empty()) {
        auto it = pivots.find(r.front().first);
        if (it == pivots.end()) break;
        Rational coef = -r.front().second / it->second.front().second;
        r = axpy(r, coef, it->second);
    }
    return r;
}

std::vector<QVec> kernel_from_pivots(const PivotMap& pivots, int ncols) {
    std::vector<std::pair<int, QVec>> rows;
    for (const auto& [c, r] : pivots) {
        QVec dense(ncols, Rational(0));
        for (const auto& [j, v] : r) dense[j] = v;
        rows.emplace_back(c, std::move(dense));
    }
    return back_substitute(rows, ncols);
}

void eliminate_range(const std::vector<SparseRow>& rows, size_t begin, size_t end,
                     PivotMap& pivots, bool parallel) {
    constexpr size_t kBatch = 64;
    for (size_t b = begin; b < end; b += kBatch) {
        size_t hi = std::min(end, b + kBatch);
        std::vector<SparseRow> tmp(hi - b);
        if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
            for (long k = 0; k < static_cast<long>(hi - b); ++k)
                tmp[k] = reduce_row(rows[b + k], pivots);
        } else {
            for (size_t k = 0; k < hi - b; ++k) tmp[k] = reduce_row(rows[b + k], pivots);
        }
        // serial finish keeps the pivot set deterministic
        for (auto& r : tmp) {
            r = reduce_row(std::move(r), pivots);
            if (!r.empty()) pivots.emplace(r.front().first, std::move(r));
        }
    }
}

}  // namespace

std::vector<QVec> kernel_sparse(const std::vector<SparseRow>& rows, int ncols,
                                const KernelOptions& opt) {
    PivotMap pivots;
    if (!opt.verify_shortcut) {
        eliminate_range(rows, 0, rows.size(), pivots, opt.parallel);
        return kernel_from_pivots(pivots, ncols);
    }
    size_t prefix = std::min(rows.size(), static_cast<size_t>(2 * ncols + 64));
    eliminate_range(rows, 0, prefix, pivots, opt.parallel);
    std::vector<QVec> kernel = kernel_from_pivots(pivots, ncols);
    for (size_t i = prefix; i < rows.size(); ++i) {
        bool annihilated = true;
        for (const auto& v : kernel)
            if (dot(rows[i], v) != 0) {
                annihilated = false;
                break;
            }
        if (!annihilated) {
            SparseRow r = reduce_row(rows[i], pivots);
            if (!r.empty()) pivots.emplace(r.front().first, std::move(r));
            kernel = kernel_from_pivots(pivots, ncols);
        }
    }
    return kernel;
}

std::optional<QVec> solve_augmented_sparse(const std::vector<SparseRow>& rows, int ncols,
                                           const KernelOptions& opt) {
    PivotMap pivots;
    eliminate_range(rows, 0, rows.size(), pivots, opt.parallel);
    if (pivots.count(ncols)) return std::nullopt;  // row of the form 0 = c, c != 0
    QVec x(ncols, Rational(0));
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        const auto& [p, row] = *it;
        Rational s(0);
        for (size_t k = 1; k < row.size(); ++k) {
            int j = row[k].first;
            s += (j == ncols) ? row[k].second : row[k].second * x[j];
        }
        x[p] = -s / row.front().second;
    }
    return x;
}

}  // namespace dd
