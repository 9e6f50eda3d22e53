#include "pd/poly.hpp"

#include <cctype>

namespace pd {

Poly Poly::constant(BigInt c) {
    Poly p;
    p.add_term(0, c);
    return p;
}

Poly Poly::term(unsigned degree, BigInt coeff) {
    Poly p;
    p.add_term(degree, coeff);
    return p;
}

void Poly::add_term(unsigned degree, const BigInt& coeff) {
    if (coeff == 0) return;
    auto it = c_.find(degree);
    if (it == c_.end()) {
        c_.emplace(degree, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0) c_.erase(it);
}

Poly& Poly::operator+=(const Poly& q) {
    for (const auto& [d, c] : q.c_) add_term(d, c);
    return *this;
}

Poly operator+(const Poly& p, const Poly& q) {
    Poly r = p;
    r += q;
    return r;
}

Poly operator*(const Poly& p, const Poly& q) {
    Poly r;
    for (const auto& [dp, cp] : p.c_)
        for (const auto& [dq, cq] : q.c_)
            r.add_term(dp + dq, cp * cq);
    return r;
}

BigInt Poly::eval(const BigInt& x) const {
    // Horner over the sparse support, highest degree first.
    BigInt acc = 0;
    unsigned last = 0;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        if (first) {
            acc = it->second;
            last = it->first;
            first = false;
            continue;
        }
        for (unsigned k = it->first; k < last; ++k) acc *= x;
        acc += it->second;
        last = it->first;
    }
    if (!first)
        for (unsigned k = 0; k < last; ++k) acc *= x;
    return acc;
}

Poly Poly::halve_exponents() const {
    Poly r;
    for (const auto& [d, c] : c_) {
        if (d % 2 != 0)
            throw OddExponent("cannot halve odd exponent in term z^" + std::to_string(d));
        r.add_term(d / 2, c);
    }
    return r;
}

bool Poly::is_interpolating() const {
    if (c_.empty()) return true;
    unsigned expect = c_.begin()->first;
    for (const auto& [d, c] : c_) {
        if (d != expect) return false;
        ++expect;
    }
    return true;
}

bool Poly::is_singleton_nonconstant() const {
    return c_.size() == 1 && c_.begin()->first >= 1;
}

std::string Poly::str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (const auto& [d, c] : c_) {
        if (!out.empty()) out += " + ";
        if (d == 0) {
            out += c.str();
            continue;
        }
        if (c != 1) out += c.str();
        out += "z";
        if (d > 1) out += "^" + std::to_string(d);
    }
    return out;
}

Poly Poly::parse(const std::string& text) {
    auto fail = [&](const std::string& why) {
        throw MalformedPolynomial(why + " in \"" + text + "\"");
    };
    size_t i = 0;
    const size_t n = text.size();
    auto skip = [&] {
        while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip();
    if (i == n) fail("empty polynomial");
    Poly out;
    while (true) {
        skip();
        BigInt coeff = 1;
        size_t digits_from = i;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        bool saw_digits = i > digits_from;
        if (saw_digits) coeff = BigInt(text.substr(digits_from, i - digits_from));
        unsigned degree = 0;
        if (i < n && text[i] == 'z') {
            ++i;
            degree = 1;
            if (i < n && text[i] == '^') {
                ++i;
                size_t ds = i;
                while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
                if (i == ds) fail("missing or negative exponent");
                if (i - ds > 9) fail("exponent too large");
                degree = static_cast<unsigned>(std::stoul(text.substr(ds, i - ds)));
            }
        } else if (!saw_digits) {
            fail("expected a term");
        }
        out.add_term(degree, coeff);
        skip();
        if (i == n) break;
        if (text[i] != '+') fail(std::string("unexpected character '") + text[i] + "'");
        ++i;
        skip();
        if (i == n) fail("dangling '+'");
    }
    return out;
}

} // namespace pd
