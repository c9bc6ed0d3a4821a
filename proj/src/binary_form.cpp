#include "waring/binary_form.hpp"

#include <sstream>

namespace waring {

BinaryForm expand_power(const LinearForm& L, int d) {
    BinaryForm F(d);
    Rational p0(1);  // c0^{d-j} built from the top down
    std::vector<Rational> pow0(static_cast<std::size_t>(d) + 1);
    for (int j = d; j >= 0; --j) {
        pow0[static_cast<std::size_t>(j)] = p0;
        // fills pow0[j] = c0^{d-j}
        if (j > 0) p0 *= L.c0;
    }
    Rational p1(1);
    for (int j = 0; j <= d; ++j) {
        F.coeff(j) = Rational(binomial(static_cast<unsigned>(d), static_cast<unsigned>(j))) *
                     pow0[static_cast<std::size_t>(j)] * p1;
        p1 *= L.c1;
    }
    return F;
}

BinaryForm substitute(const BinaryForm& F, const Rational& p, const Rational& q, const Rational& r,
                      const Rational& s) {
    int d = F.degree();
    BinaryForm result(d);
    // powers of (p x0 + q x1) and (r x0 + s x1)
    std::vector<BinaryForm> u, v;
    u.reserve(static_cast<std::size_t>(d) + 1);
    v.reserve(static_cast<std::size_t>(d) + 1);
    BinaryForm one(0, {Rational(1)});
    u.push_back(one);
    v.push_back(one);
    BinaryForm lu(1, {p, q});
    BinaryForm lv(1, {r, s});
    for (int k = 1; k <= d; ++k) {
        u.push_back(u.back() * lu);
        v.push_back(v.back() * lv);
    }
    for (int j = 0; j <= d; ++j) {
        if (F.coeff(j) == 0) continue;
        result = result + (u[static_cast<std::size_t>(d - j)] * v[static_cast<std::size_t>(j)]) * F.coeff(j);
    }
    return result;
}

std::string format_bipoly(const std::vector<Rational>& coeffs, const std::string& v0, const std::string& v1) {
    int d = static_cast<int>(coeffs.size()) - 1;
    std::ostringstream os;
    bool first = true;
    for (int j = 0; j <= d; ++j) {
        const Rational& c = coeffs[static_cast<std::size_t>(j)];
        if (c == 0) continue;
        Rational a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        int e0 = d - j, e1 = j;
        bool unit = (a == 1) && (e0 + e1 > 0);
        if (!unit) os << to_string(a);
        if (e0 > 0) {
            if (!unit) os << "*";
            os << v0;
            if (e0 > 1) os << "^" << e0;
        }
        if (e1 > 0) {
            if (e0 > 0 || !unit) os << "*";
            os << v1;
            if (e1 > 1) os << "^" << e1;
        }
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace waring
