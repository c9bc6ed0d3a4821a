#include "waring/form_parser.hpp"

#include <cctype>
#include <map>

namespace waring {

namespace {

struct Term {
    Rational coeff;
    int e0 = 0, e1 = 0;
};

class Scanner {
  public:
    explicit Scanner(const std::string& s) : s_(s) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool consume(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    std::size_t pos() const { return pos_; }

    // unsigned integer literal
    Integer integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError("expected a number", start);
        return Integer(s_.substr(start, pos_ - start));
    }

    Rational rational() {
        Integer num = integer();
        if (consume('/')) {
            Integer den = integer();
            if (den == 0) throw ParseError("zero denominator", pos());
            Rational q(num, den);
            q.canonicalize();
            return q;
        }
        return Rational(num);
    }

    // x0 or x1; -1 if the next token is not a variable
    int variable() {
        skip_ws();
        if (pos_ + 1 < s_.size() && s_[pos_] == 'x' && (s_[pos_ + 1] == '0' || s_[pos_ + 1] == '1')) {
            int v = s_[pos_ + 1] - '0';
            pos_ += 2;
            return v;
        }
        return -1;
    }

  private:
    const std::string& s_;
    std::size_t pos_ = 0;
};

Term parse_term(Scanner& sc) {
    Term t;
    t.coeff = 1;
    bool saw_factor = false;
    while (true) {
        char c = sc.peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            t.coeff *= sc.rational();
            saw_factor = true;
        } else if (c == 'x') {
            std::size_t at = sc.pos();
            int v = sc.variable();
            if (v < 0) throw ParseError("expected x0 or x1", at);
            int e = 1;
            if (sc.consume('^')) {
                Integer p = sc.integer();
                if (p < 0 || p > 1000) throw ParseError("exponent out of range", sc.pos());
                e = static_cast<int>(p.get_si());
            }
            (v == 0 ? t.e0 : t.e1) += e;
            saw_factor = true;
        } else {
            throw ParseError("expected a coefficient or a variable", sc.pos());
        }
        if (!sc.consume('*')) break;
    }
    if (!saw_factor) throw ParseError("empty term", sc.pos());
    return t;
}

}  // namespace

FormExpr parse_form(const std::string& text) {
    Scanner sc(text);
    if (sc.done()) throw ParseError("empty input", 0);

    std::vector<Term> terms;
    bool first = true;
    while (!sc.done()) {
        int sign = 1;
        if (sc.consume('-'))
            sign = -1;
        else if (sc.consume('+')) {
            if (first) throw ParseError("unexpected '+'", sc.pos());
        } else if (!first) {
            throw ParseError("expected '+' or '-'", sc.pos());
        }
        Term t = parse_term(sc);
        t.coeff *= sign;
        terms.push_back(std::move(t));
        first = false;
    }

    int degree = terms.front().e0 + terms.front().e1;
    for (const Term& t : terms)
        if (t.e0 + t.e1 != degree)
            throw InputError("mixed degrees " + std::to_string(degree) + " and " +
                             std::to_string(t.e0 + t.e1) + " in form expression");

    BinaryForm F(degree);
    for (const Term& t : terms) F.coeff(t.e1) += t.coeff;
    return {text, std::move(F)};
}

}  // namespace waring
