#include "waring/unipoly.hpp"

#include <utility>

#include "waring/errors.hpp"

namespace waring {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::from_roots(const std::vector<Rational>& roots) {
    std::vector<Rational> c{Rational(1)};
    for (const Rational& r : roots) {
        // multiply by (x - r)
        c.push_back(0);
        for (std::size_t j = c.size() - 1; j >= 1; --j) c[j] = c[j - 1] - r * c[j];
        c[0] = -r * c[0];
    }
    return UniPoly(std::move(c));
}

Rational UniPoly::coeff(int j) const {
    if (j < 0 || j >= static_cast<int>(c_.size())) return Rational(0);
    return c_[j];
}

const Rational& UniPoly::leading() const {
    if (c_.empty()) throw InputError("leading coefficient of the zero polynomial");
    return c_.back();
}

Rational UniPoly::operator()(const Rational& t) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

UniPoly UniPoly::operator-() const {
    UniPoly r(*this);
    for (Rational& c : r.c_) c = -c;
    return r;
}

UniPoly UniPoly::operator+(const UniPoly& rhs) const {
    std::vector<Rational> c(std::max(c_.size(), rhs.c_.size()));
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = coeff(static_cast<int>(j)) + rhs.coeff(static_cast<int>(j));
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-(const UniPoly& rhs) const { return *this + (-rhs); }

UniPoly UniPoly::operator*(const UniPoly& rhs) const {
    if (is_zero() || rhs.is_zero()) return UniPoly();
    std::vector<Rational> c(c_.size() + rhs.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < rhs.c_.size(); ++j) c[i + j] += c_[i] * rhs.c_[j];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator*(const Rational& s) const {
    UniPoly r(*this);
    for (Rational& c : r.c_) c *= s;
    r.trim();
    return r;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rational> c(c_.size() - 1);
    for (std::size_t j = 1; j < c_.size(); ++j) c[j - 1] = c_[j] * Rational(static_cast<long>(j));
    return UniPoly(std::move(c));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return *this * (Rational(1) / leading());
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& rhs) const {
    if (rhs.is_zero()) throw InputError("division by the zero polynomial");
    UniPoly rem(*this);
    if (degree() < rhs.degree()) return {UniPoly(), rem};
    std::vector<Rational> q(static_cast<std::size_t>(degree() - rhs.degree()) + 1);
    while (!rem.is_zero() && rem.degree() >= rhs.degree()) {
        int k = rem.degree() - rhs.degree();
        Rational f = rem.leading() / rhs.leading();
        q[static_cast<std::size_t>(k)] = f;
        std::vector<Rational> sub(static_cast<std::size_t>(k) + rhs.c_.size());
        for (std::size_t j = 0; j < rhs.c_.size(); ++j) sub[static_cast<std::size_t>(k) + j] = rhs.c_[j] * f;
        rem = rem - UniPoly(std::move(sub));
    }
    return {UniPoly(std::move(q)), rem};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = x.divmod(y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

UniPoly squarefree_part(const UniPoly& p) {
    if (p.is_zero()) throw InputError("squarefree_part of the zero polynomial");
    if (p.degree() == 0) return UniPoly::constant(Rational(1));
    UniPoly g = gcd(p, p.derivative());
    return p.divmod(g).first.monic();
}

bool is_squarefree(const UniPoly& p) {
    if (p.is_zero()) throw InputError("is_squarefree of the zero polynomial");
    if (p.degree() <= 0) return true;
    return gcd(p, p.derivative()).degree() == 0;
}

}  // namespace waring
