#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace jue {

using Int = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Int(num), Int(den));
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Accepts "p" or "p/q".
inline Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return make_rational(Int(s), Int(1));
    return make_rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

inline std::string rational_to_string(const Rational& q) {
    std::string out = q.get_num().get_str();
    if (q.get_den() != 1) out += "/" + q.get_den().get_str();
    return out;
}

inline Int factorial(unsigned n) {
    Int r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Int r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

}  // namespace jue
