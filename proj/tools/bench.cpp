#include <chrono>
#include <iostream>

#include "deltaderive/catalog.hpp"
#include "deltaderive/constructions.hpp"
#include "deltaderive/hermitian.hpp"

namespace {

using namespace dd;
using clock_type = std::chrono::steady_clock;

double ms_since(clock_type::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

std::vector<SparseRow> derivation_rows(const Bimodule& m, const Rational& delta) {
    const int dj = m.j->dim;
    std::vector<SparseRow> rows;
    for (int i = 0; i < dj; ++i)
        for (int j = i; j < dj; ++j) {
            QVec cij = m.j->basis_product(i, j);
            for (int t = 0; t < m.dim; ++t) {
                QVec coeff(static_cast<size_t>(m.dim) * dj, Rational(0));
                for (int l = 0; l < dj; ++l)
                    if (cij[l] != 0) coeff[t * dj + l] += cij[l];
                for (int w = 0; w < m.dim; ++w) {
                    if (m.a(i, w, t) != 0) coeff[w * dj + j] -= delta * m.a(i, w, t);
                    if (m.a(j, w, t) != 0) coeff[w * dj + i] -= delta * m.a(j, w, t);
                }
                SparseRow sr = to_sparse(coeff);
                if (!sr.empty()) rows.push_back(std::move(sr));
            }
        }
    return rows;
}

void bench_kernel(const std::string& name, const Bimodule& m, const Rational& delta) {
    auto rows = derivation_rows(m, delta);
    const int ncols = m.dim * m.j->dim;

    auto t0 = clock_type::now();
    QMat dense(static_cast<int>(rows.size()), ncols);
    for (size_t i = 0; i < rows.size(); ++i)
        for (const auto& [c, v] : rows[i]) dense.at(static_cast<int>(i), c) = v;
    auto serial = nullspace_dense(dense);
    double t_serial = ms_since(t0);

    t0 = clock_type::now();
    KernelOptions par{true, true};
    auto sparse = kernel_sparse(rows, ncols, par);
    double t_parallel = ms_since(t0);

    t0 = clock_type::now();
    KernelOptions seq{false, false};
    auto sparse_seq = kernel_sparse(rows, ncols, seq);
    double t_seq = ms_since(t0);

    RowSpace a(ncols), b(ncols);
    for (const auto& v : serial) a.insert(v);
    for (const auto& v : sparse) b.insert(v);
    bool agree = a.dim() == b.dim() && a.basis() == b.basis() && sparse == sparse_seq;

    std::cout << name << "  rows=" << rows.size() << " cols=" << ncols
              << "  kernel=" << sparse.size() << "\n"
              << "  dense reference   " << t_serial << " ms\n"
              << "  sparse (serial)   " << t_seq << " ms\n"
              << "  sparse (OpenMP)   " << t_parallel << " ms\n"
              << "  agree: " << (agree ? "yes" : "NO") << "\n";
}

void bench_jordan(const std::string& name, const Algebra& a) {
    auto t0 = clock_type::now();
    bool fast = is_linearized_jordan(a);
    double t_fast = ms_since(t0);

    t0 = clock_type::now();
    bool ref = check_identities_reference(a).linearized_jordan;
    double t_ref = ms_since(t0);

    std::cout << name << "  dim=" << a.dim << "  jordan=" << (fast ? "yes" : "no") << "\n"
              << "  rational reference  " << t_ref << " ms\n"
              << "  scaled kernel       " << t_fast << " ms\n"
              << "  agree: " << (fast == ref ? "yes" : "NO") << "\n";
}

}  // namespace

int main() {
    auto entries = catalog_entries("m3full");
    for (const auto& e : entries)
        if (e.module_name == "regular") bench_kernel("Der_1/2(M3(Q)+, regular)", e.module, half());

    auto symp = catalog_entries("symp6");
    for (const auto& e : symp)
        if (e.module_name == "S-") bench_kernel("Der_1(symp6, S-)", e.module, Rational(1));

    AlgebraWithInvolution oct = octonion_algebra();
    HermitianJordanResult albert = hermitian_jordan(oct.algebra, oct.involution, 3);
    bench_jordan("Albert S+(M3(O))", albert.algebra);
    HermitianJordanResult h2 = hermitian_jordan(oct.algebra, oct.involution, 2);
    bench_jordan("S+(M2(O))", h2.algebra);
    return 0;
}
