#pragma once

#include <optional>
#include <string>
#include <vector>

#include "deltaderive/rational.hpp"

namespace dd {

// Univariate polynomial in the indeterminate delta over the rationals.
// Coefficients are stored constant term first; the zero polynomial has an
// empty coefficient list, and the leading coefficient is otherwise nonzero.
class DeltaPoly {
public:
    DeltaPoly() = default;
    explicit DeltaPoly(std::vector<Rational> coeffs);
    static DeltaPoly constant(const Rational& c);
    // c * delta^k
    static DeltaPoly monomial(const Rational& c, int k);

    bool is_zero() const { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(int k) const;
    Rational leading() const;

    Rational eval(const Rational& delta) const;

    DeltaPoly operator+(const DeltaPoly& o) const;
    DeltaPoly operator-(const DeltaPoly& o) const;
    DeltaPoly operator*(const DeltaPoly& o) const;
    DeltaPoly operator-() const;
    bool operator==(const DeltaPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const DeltaPoly& o) const { return coeffs_ != o.coeffs_; }

    // Quotient of an exact division; throws std::domain_error when the
    // remainder is nonzero (which would indicate an elimination bug).
    DeltaPoly exact_div(const DeltaPoly& q) const;

    // Division with remainder over Q[delta].
    std::pair<DeltaPoly, DeltaPoly> divmod(const DeltaPoly& q) const;

    // Monic gcd; gcd(0, 0) = 0.
    static DeltaPoly gcd(DeltaPoly a, DeltaPoly b);

    DeltaPoly monic() const;
    // Integer-coefficient multiple with content 1 and positive leading
    // coefficient.
    DeltaPoly primitive() const;
    DeltaPoly derivative() const;

    std::string str(const std::string& var = "d") const;

private:
    std::vector<Rational> coeffs_;
    void trim();
};

struct RootReport {
    std::vector<Rational> roots;           // distinct rational roots
    std::vector<DeltaPoly> leftover;       // nonlinear factors without rational roots
};

// All rational roots of a nonzero polynomial, via the rational-root bound on
// the integer-cleared, square-free part. Whatever remains after splitting off
// the root factors is reported in `leftover` rather than dropped.
// Throws std::domain_error on the zero polynomial.
RootReport rational_roots(const DeltaPoly& p);

}  // namespace dd
