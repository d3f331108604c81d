#include "sgs/int_polynomial.hpp"

#include <algorithm>

namespace sgs {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

IntPolynomial IntPolynomial::monomial(const mpz_class& c, int degree) {
    std::vector<mpz_class> coeffs(static_cast<std::size_t>(degree) + 1);
    coeffs.back() = c;
    return IntPolynomial(std::move(coeffs));
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class IntPolynomial::coeff(int power) const {
    if (power < 0 || power > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(power)];
}

IntPolynomial IntPolynomial::reflect() const {
    IntPolynomial out = *this;
    for (std::size_t i = 1; i < out.coeffs_.size(); i += 2) out.coeffs_[i] = -out.coeffs_[i];
    return out;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
    add_scaled(rhs, 1);
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
    add_scaled(rhs, -1);
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const mpz_class& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& a : coeffs_) a *= c;
    return *this;
}

void IntPolynomial::add_scaled(const IntPolynomial& rhs, const mpz_class& c, int shift) {
    if (rhs.is_zero() || c == 0) return;
    const std::size_t need = rhs.coeffs_.size() + static_cast<std::size_t>(shift);
    if (coeffs_.size() < need) coeffs_.resize(need);
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        mpz_addmul(coeffs_[i + static_cast<std::size_t>(shift)].get_mpz_t(), rhs.coeffs_[i].get_mpz_t(), c.get_mpz_t());
    }
    trim();
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpz_class> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
        }
    }
    return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int p = degree(); p >= 0; --p) {
        const mpz_class& c = coeffs_[static_cast<std::size_t>(p)];
        if (c == 0) continue;
        const mpz_class mag = abs(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (mag != 1 || p == 0) out += mag.get_str();
        if (p >= 1) out += "x";
        if (p >= 2) out += "^" + std::to_string(p);
    }
    return out;
}

std::vector<std::string> IntPolynomial::coefficient_strings() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.get_str());
    return out;
}

}  // namespace sgs
