#include "deltaderive/delta_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace dd {

void DeltaPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

DeltaPoly::DeltaPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

DeltaPoly DeltaPoly::constant(const Rational& c) {
    return DeltaPoly(std::vector<Rational>{c});
}

DeltaPoly DeltaPoly::monomial(const Rational& c, int k) {
    std::vector<Rational> v(k + 1, Rational(0));
    v[k] = c;
    return DeltaPoly(std::move(v));
}

Rational DeltaPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[k];
}

Rational DeltaPoly::leading() const {
    if (is_zero()) return Rational(0);
    return coeffs_.back();
}

Rational DeltaPoly::eval(const Rational& delta) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * delta + *it;
    return acc;
}

DeltaPoly DeltaPoly::operator+(const DeltaPoly& o) const {
    std::vector<Rational> v(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
    return DeltaPoly(std::move(v));
}

DeltaPoly DeltaPoly::operator-() const {
    std::vector<Rational> v = coeffs_;
    for (auto& c : v) c = -c;
    return DeltaPoly(std::move(v));
}

DeltaPoly DeltaPoly::operator-(const DeltaPoly& o) const { return *this + (-o); }

DeltaPoly DeltaPoly::operator*(const DeltaPoly& o) const {
    if (is_zero() || o.is_zero()) return DeltaPoly();
    std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
    return DeltaPoly(std::move(v));
}

std::pair<DeltaPoly, DeltaPoly> DeltaPoly::divmod(const DeltaPoly& q) const {
    if (q.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> rem = coeffs_;
    int dq = q.degree();
    if (degree() < dq) return {DeltaPoly(), *this};
    std::vector<Rational> quot(degree() - dq + 1, Rational(0));
    for (int k = degree() - dq; k >= 0; --k) {
        Rational c = rem[k + dq] / q.coeffs_[dq];
        quot[k] = c;
        if (c != 0)
            for (int i = 0; i <= dq; ++i) rem[k + i] -= c * q.coeffs_[i];
    }
    return {DeltaPoly(std::move(quot)), DeltaPoly(std::move(rem))};
}

DeltaPoly DeltaPoly::exact_div(const DeltaPoly& q) const {
    auto [quot, rem] = divmod(q);
    if (!rem.is_zero())
        throw std::domain_error("inexact polynomial division (elimination inconsistency)");
    return quot;
}

DeltaPoly DeltaPoly::monic() const {
    if (is_zero()) return *this;
    std::vector<Rational> v = coeffs_;
    Rational lead = v.back();
    for (auto& c : v) c /= lead;
    return DeltaPoly(std::move(v));
}

DeltaPoly DeltaPoly::gcd(DeltaPoly a, DeltaPoly b) {
    while (!b.is_zero()) {
        DeltaPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

DeltaPoly DeltaPoly::primitive() const {
    if (is_zero()) return *this;
    Integer den_lcm(1);
    for (const auto& c : coeffs_) {
        Integer d = c.get_den();
        Integer g;
        mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        den_lcm = den_lcm / g * d;
    }
    Integer content(0);
    std::vector<Rational> v = coeffs_;
    for (auto& c : v) {
        c *= Rational(den_lcm);
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_num().get_mpz_t());
    }
    if (coeffs_.back() < 0) content = -content;
    for (auto& c : v) c /= Rational(content);
    return DeltaPoly(std::move(v));
}

DeltaPoly DeltaPoly::derivative() const {
    if (degree() < 1) return DeltaPoly();
    std::vector<Rational> v(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return DeltaPoly(std::move(v));
}

std::string DeltaPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeffs_[k];
        if (c == 0) continue;
        if (!out.empty()) out += (c > 0) ? " + " : " - ";
        else if (c < 0) out += "-";
        Rational a = abs(c);
        if (k == 0 || a != 1) out += to_string(a);
        if (k > 0) {
            if (a != 1) out += "*";
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

namespace {

// Divisors of |n| via trial division. A huge cofactor surviving trial
// division is used as a single factor; fine at the coefficient sizes the
// elimination produces.
std::vector<Integer> divisors(Integer n) {
    n = abs(n);
    std::vector<std::pair<Integer, int>> factors;
    Integer p(2);
    while (p * p <= n && p < 1000000) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            factors.emplace_back(p, e);
        }
        p += (p == 2) ? 1 : 2;
    }
    if (n > 1) factors.emplace_back(n, 1);
    std::vector<Integer> divs{Integer(1)};
    for (auto& [q, e] : factors) {
        size_t sz = divs.size();
        Integer pk(1);
        for (int i = 0; i < e; ++i) {
            pk *= q;
            for (size_t j = 0; j < sz; ++j) divs.push_back(divs[j] * pk);
        }
    }
    return divs;
}

}  // namespace

RootReport rational_roots(const DeltaPoly& p) {
    if (p.is_zero())
        throw std::domain_error("rational_roots of the zero polynomial (identically singular)");
    RootReport report;
    if (p.degree() == 0) return report;

    // Square-free part keeps each root once and the coefficients small.
    DeltaPoly sf = p.exact_div(DeltaPoly::gcd(p, p.derivative())).primitive();

    if (sf.coeff(0) == 0) {
        report.roots.emplace_back(0);
        sf = sf.exact_div(DeltaPoly::monomial(Rational(1), 1)).primitive();
    }
    if (sf.degree() >= 1) {
        auto nums = divisors(sf.coeff(0).get_num());
        auto dens = divisors(sf.leading().get_num());
        for (const auto& num : nums)
            for (const auto& den : dens) {
                Rational cand(num, den);
                cand.canonicalize();
                for (int sign = 0; sign < 2; ++sign) {
                    Rational r = sign ? -cand : cand;
                    if (sf.eval(r) == 0) {
                        report.roots.push_back(r);
                        sf = sf.exact_div(DeltaPoly({-r, Rational(1)})).primitive();
                    }
                }
            }
    }
    if (sf.degree() >= 1) report.leftover.push_back(sf);
    std::sort(report.roots.begin(), report.roots.end());
    report.roots.erase(std::unique(report.roots.begin(), report.roots.end()), report.roots.end());
    return report;
}

}  // namespace dd
