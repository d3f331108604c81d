#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace sgs {

/// Univariate polynomial with arbitrary-precision integer coefficients,
/// stored lowest degree first with no trailing zeros (zero = empty).
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> coeffs);
    IntPolynomial(std::initializer_list<long> coeffs);

    static IntPolynomial monomial(const mpz_class& c, int degree);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Coefficient of x^power; zero beyond the degree.
    mpz_class coeff(int power) const;
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    /// p(-x).
    IntPolynomial reflect() const;

    IntPolynomial& operator+=(const IntPolynomial& rhs);
    IntPolynomial& operator-=(const IntPolynomial& rhs);
    IntPolynomial& operator*=(const mpz_class& c);
    /// Adds c * x^shift * rhs in place.
    void add_scaled(const IntPolynomial& rhs, const mpz_class& c, int shift = 0);

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(IntPolynomial a, const mpz_class& c) { return a *= c; }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(IntPolynomial a) { return a *= -1; }
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

    /// Human-readable form, highest degree first, e.g. "x^3 - 3x - 2".
    std::string to_string() const;
    /// Decimal coefficient strings, lowest degree first.
    std::vector<std::string> coefficient_strings() const;

private:
    void trim();

    std::vector<mpz_class> coeffs_;
};

}  // namespace sgs
