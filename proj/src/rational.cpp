#include "waring/rational.hpp"

#include "waring/errors.hpp"

namespace waring {

Integer binomial(unsigned n, unsigned k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Integer falling_factorial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Integer r = 1;
    for (unsigned i = 0; i < k; ++i) r *= (n - i);
    return r;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw InputError("empty rational literal");
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && i == 0);
        if (!ok) throw InputError("malformed rational literal: " + s);
    }
    Rational q;
    if (q.set_str(s, 10) != 0) throw InputError("malformed rational literal: " + s);
    if (q.get_den() == 0) throw InputError("zero denominator in rational literal: " + s);
    q.canonicalize();
    return q;
}

Rational elementary_symmetric(const std::vector<Rational>& values, std::size_t i) {
    if (i > values.size()) throw InputError("elementary_symmetric: index out of range");
    // e[j] = E_j of the prefix processed so far
    std::vector<Rational> e(i + 1);
    e[0] = 1;
    std::size_t seen = 0;
    for (const Rational& v : values) {
        ++seen;
        for (std::size_t j = std::min(i, seen); j >= 1; --j) e[j] += v * e[j - 1];
    }
    return e[i];
}

}  // namespace waring
