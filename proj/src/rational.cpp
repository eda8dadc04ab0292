#include "deltaderive/rational.hpp"

#include <cstdlib>

namespace dd {

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Rational r{Integer(s)};
            return r;
        }
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        Rational r(num, den);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational literal: " + s);
    }
}

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::uint64_t RationalStream::next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Rational RationalStream::next_rational(long max_num, long max_den) {
    long num = 0;
    while (num == 0) {
        std::uint64_t u = next_u64();
        num = static_cast<long>(u % (2 * max_num + 1)) - max_num;
    }
    long den = static_cast<long>(next_u64() % max_den) + 1;
    return rat(num, den);
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("DELTADERIVE_SEED")) {
        char* end = nullptr;
        std::uint64_t v = std::strtoull(env, &end, 0);
        if (end && *end == '\0') return v;
    }
    return 0xD317A;
}

}  // namespace dd
