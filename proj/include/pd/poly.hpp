#pragma once

#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "pd/errors.hpp"

namespace pd {

using BigInt = boost::multiprecision::cpp_int;

/// Sparse polynomial in one indeterminate z with nonnegative integer degrees.
/// Zero coefficients are never stored; all arithmetic is exact.
class Poly {
public:
    Poly() = default;

    static Poly constant(BigInt c);
    static Poly term(unsigned degree, BigInt coeff);

    /// Parses "4z^2 + 12z^4" style text (ascending or any order, '+' separated).
    /// Throws MalformedPolynomial on anything else, including negative exponents.
    static Poly parse(const std::string& text);

    void add_term(unsigned degree, const BigInt& coeff);

    const std::map<unsigned, BigInt>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    Poly& operator+=(const Poly& q);
    friend Poly operator+(const Poly& p, const Poly& q);
    friend Poly operator*(const Poly& p, const Poly& q);
    bool operator==(const Poly&) const = default;

    BigInt eval(const BigInt& x) const;

    /// Maps z^{2k} to z^k; throws OddExponent if any stored degree is odd
    /// (which signals a non-orientable input upstream).
    Poly halve_exponents() const;

    /// True iff the support is empty or a gap-free range of degrees.
    bool is_interpolating() const;

    /// True iff there is exactly one stored term and its degree is >= 1.
    bool is_singleton_nonconstant() const;

    /// Ascending-degree rendering: "4z^2 + 12z^4"; constants bare; "0" if zero.
    std::string str() const;

private:
    std::map<unsigned, BigInt> c_;
};

} // namespace pd
