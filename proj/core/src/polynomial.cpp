#include "sparsedisc/polynomial.hpp"

#include <algorithm>
#include <ostream>

#include "sparsedisc/errors.hpp"

namespace sparsedisc {

namespace {
const GaussianRational kZero{};
}

Polynomial::Polynomial(std::vector<GaussianRational> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::constant(GaussianRational c) {
    std::vector<GaussianRational> v;
    if (!c.is_zero()) v.push_back(std::move(c));
    return Polynomial(std::move(v));
}

Polynomial Polynomial::monomial(std::size_t degree, GaussianRational coeff) {
    std::vector<GaussianRational> v(degree + 1);
    v[degree] = std::move(coeff);
    return Polynomial(std::move(v));
}

bool Polynomial::is_monic() const {
    return !is_zero() && leading() == GaussianRational(1);
}

const GaussianRational& Polynomial::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : kZero;
}

const GaussianRational& Polynomial::leading() const {
    if (is_zero()) throw ArithmeticError("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Polynomial Polynomial::operator-() const {
    std::vector<GaussianRational> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(-c);
    return Polynomial(std::move(v));
}

Polynomial operator+(const Polynomial& f, const Polynomial& g) {
    std::vector<GaussianRational> v(std::max(f.coeffs_.size(), g.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.coeff(i) + g.coeff(i);
    return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& f, const Polynomial& g) {
    std::vector<GaussianRational> v(std::max(f.coeffs_.size(), g.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.coeff(i) - g.coeff(i);
    return Polynomial(std::move(v));
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() || g.is_zero()) return Polynomial();
    std::vector<GaussianRational> v(f.coeffs_.size() + g.coeffs_.size() - 1);
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
        if (f.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < g.coeffs_.size(); ++j) {
            if (g.coeffs_[j].is_zero()) continue;
            v[i + j] += f.coeffs_[i] * g.coeffs_[j];
        }
    }
    return Polynomial(std::move(v));
}

Polynomial operator*(const GaussianRational& s, const Polynomial& f) {
    if (s.is_zero()) return Polynomial();
    std::vector<GaussianRational> v;
    v.reserve(f.coeffs_.size());
    for (const auto& c : f.coeffs_) v.push_back(s * c);
    return Polynomial(std::move(v));
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial();
    std::vector<GaussianRational> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        v[i - 1] = GaussianRational(BigInt(static_cast<unsigned long>(i))) * coeffs_[i];
    }
    return Polynomial(std::move(v));
}

Polynomial Polynomial::reciprocal() const {
    std::vector<GaussianRational> v(coeffs_.rbegin(), coeffs_.rend());
    return Polynomial(std::move(v));
}

GaussianRational Polynomial::eval(const GaussianRational& x) const {
    GaussianRational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) throw ArithmeticError("divmod: division by the zero polynomial");
    if (f.degree() < g.degree()) return {Polynomial(), f};

    const long dg = g.degree();
    std::vector<GaussianRational> rem = f.coeffs();
    std::vector<GaussianRational> quot(static_cast<std::size_t>(f.degree() - dg) + 1);
    const GaussianRational& lg = g.leading();

    for (long k = f.degree() - dg; k >= 0; --k) {
        const GaussianRational& top = rem[static_cast<std::size_t>(k + dg)];
        if (top.is_zero()) continue;
        GaussianRational q = top / lg;
        for (long j = 0; j <= dg; ++j) {
            rem[static_cast<std::size_t>(k + j)] -= q * g.coeff(static_cast<std::size_t>(j));
        }
        quot[static_cast<std::size_t>(k)] = std::move(q);
    }
    rem.resize(static_cast<std::size_t>(dg) >= 1 ? static_cast<std::size_t>(dg) : 0);
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (long k = degree(); k >= 0; --k) {
        const GaussianRational& c = coeffs_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;

        std::string body;
        bool negative = false;
        if (c.is_real()) {
            GaussianRational mag = c;
            if (mag.re_num() < 0) {
                negative = true;
                mag = -mag;
            }
            if (k == 0) {
                body = mag.to_string();
            } else if (mag == GaussianRational(1)) {
                body = "";
            } else {
                body = mag.to_string() + "*";
            }
        } else {
            body = "(" + c.to_string() + ")";
            if (k > 0) body += "*";
        }
        if (k > 0) {
            body += "x";
            if (k > 1) body += "^" + std::to_string(k);
        }

        if (out.empty()) {
            out = negative ? "-" + body : body;
        } else {
            out += negative ? " - " : " + ";
            out += body;
        }
    }
    return out;
}

namespace {

struct PolyScanner {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return text[pos];
    }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

    std::size_t uint_value() {
        skip_ws();
        if (pos >= text.size() || text[pos] < '0' || text[pos] > '9') fail("expected exponent digits");
        std::size_t v = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            v = v * 10 + static_cast<std::size_t>(text[pos] - '0');
            if (v > 1000000) fail("exponent too large");
            ++pos;
        }
        return v;
    }

    // Unsigned rational "p" or "p/q" as a GaussianRational.
    GaussianRational rational() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (pos == start) fail("expected a number");
        BigInt num{std::string(text.substr(start, pos - start))};
        BigInt den(1);
        if (pos < text.size() && text[pos] == '/') {
            ++pos;
            std::size_t dstart = pos;
            while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
            if (pos == dstart) fail("expected denominator digits");
            den = BigInt{std::string(text.substr(dstart, pos - dstart))};
            if (den == 0) fail("zero denominator");
        }
        return GaussianRational(num, BigInt(0), den);
    }

    // Parenthesized canonical Gaussian rational.
    GaussianRational parenthesized() {
        // caller consumed '('
        std::size_t start = pos;
        while (pos < text.size() && text[pos] != ')') ++pos;
        if (pos >= text.size()) fail("unterminated '('");
        std::string_view inner = text.substr(start, pos - start);
        ++pos;  // ')'
        if (inner.empty()) throw ParseError("empty parentheses", start);
        try {
            return GaussianRational::parse(inner);
        } catch (const ParseError& e) {
            throw ParseError(e.what(), start + e.position());
        }
    }
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text) {
    PolyScanner s{text};
    std::vector<GaussianRational> acc;
    auto add_term = [&acc](std::size_t power, const GaussianRational& c) {
        if (acc.size() <= power) acc.resize(power + 1);
        acc[power] += c;
    };

    if (s.done()) s.fail("empty polynomial");
    bool first = true;
    while (!s.done()) {
        // sign
        GaussianRational sign(1);
        if (s.peek() == '+' || s.peek() == '-') {
            if (s.peek() == '-') sign = GaussianRational(-1);
            ++s.pos;
        } else if (!first) {
            s.fail("expected '+' or '-' between terms");
        }
        if (s.done()) s.fail("expected a term");
        first = false;

        // coefficient (optional when the term is a bare power of x)
        GaussianRational coeff(1);
        bool have_coeff = false;
        char c = s.peek();
        if (c == '(') {
            ++s.pos;
            coeff = s.parenthesized();
            have_coeff = true;
        } else if (c >= '0' && c <= '9') {
            coeff = s.rational();
            have_coeff = true;
        }

        std::size_t power = 0;
        bool have_x = false;
        if (!s.done() && (s.peek() == '*' || s.peek() == 'x')) {
            if (s.peek() == '*') {
                ++s.pos;
                if (s.done() || s.peek() != 'x') s.fail("expected 'x' after '*'");
            }
            ++s.pos;  // 'x'
            have_x = true;
            power = 1;
            if (!s.done() && s.peek() == '^') {
                ++s.pos;
                power = s.uint_value();
            }
        }
        if (!have_coeff && !have_x) s.fail("expected a coefficient or 'x'");
        add_term(power, sign * coeff);
    }
    return Polynomial(std::move(acc));
}

std::ostream& operator<<(std::ostream& os, const Polynomial& f) {
    return os << f.to_string();
}

}  // namespace sparsedisc
