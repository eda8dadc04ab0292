#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dd {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator) as long as they are produced through arithmetic;
// the factory below canonicalizes explicitly constructed values.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p/q" or "p". Throws on malformed input or zero denominator.
Rational parse_rational(const std::string& s);

// Renders as "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

inline Rational half() { return rat(1, 2); }

// Deterministic pseudo-random stream of small rationals (splitmix64 core).
// Used by the module splitter and the root-avoiding delta sampler.
class RationalStream {
public:
    explicit RationalStream(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64();

    // Nonzero rational with numerator in [-max_num, max_num] and
    // denominator in [1, max_den].
    Rational next_rational(long max_num = 20, long max_den = 6);

private:
    std::uint64_t state_;
};

// Splitter seed, overridable through DELTADERIVE_SEED.
std::uint64_t default_seed();

}  // namespace dd
