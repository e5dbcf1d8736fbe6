#pragma once

/**
 * @file qpoly.hpp
 * @brief Exact Laurent polynomials in q with arbitrary-precision coefficients.
 *
 * QPolynomial is the common output type of every Kostka polynomial route
 * (path enumeration, rigged-configuration enumeration, fermionic formula).
 * Coefficients are stored sparsely and never hold a zero.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace rigged {

using BigInt = boost::multiprecision::cpp_int;

class QPolynomial {
public:
    QPolynomial() = default;
    QPolynomial(long long c) {  // NOLINT: implicit constant embedding
        if (c != 0) terms_[0] = c;
    }

    static QPolynomial monomial(int exponent, BigInt coefficient = 1) {
        QPolynomial p;
        if (coefficient != 0) p.terms_[exponent] = std::move(coefficient);
        return p;
    }

    /// Builds from an ascending coefficient list starting at `min_exponent`.
    static QPolynomial from_coefficients(int min_exponent, const std::vector<BigInt>& coeffs) {
        QPolynomial p;
        for (std::size_t k = 0; k < coeffs.size(); ++k)
            if (coeffs[k] != 0) p.terms_[min_exponent + static_cast<int>(k)] = coeffs[k];
        return p;
    }

    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] const std::map<int, BigInt>& terms() const { return terms_; }

    [[nodiscard]] BigInt coefficient(int exponent) const {
        auto it = terms_.find(exponent);
        return it == terms_.end() ? BigInt{0} : it->second;
    }

    [[nodiscard]] int min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
    [[nodiscard]] int max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

    /// Dense ascending list from min_exponent() to max_exponent().
    [[nodiscard]] std::vector<BigInt> coefficients() const {
        std::vector<BigInt> out;
        if (terms_.empty()) return out;
        out.resize(static_cast<std::size_t>(max_exponent() - min_exponent() + 1));
        for (const auto& [e, c] : terms_) out[static_cast<std::size_t>(e - min_exponent())] = c;
        return out;
    }

    [[nodiscard]] BigInt eval_at_one() const {
        BigInt s = 0;
        for (const auto& [e, c] : terms_) s += c;
        return s;
    }

    void add_term(int exponent, const BigInt& coefficient) {
        if (coefficient == 0) return;
        auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
        if (!inserted) {
            it->second += coefficient;
            if (it->second == 0) terms_.erase(it);
        }
    }

    QPolynomial& operator+=(const QPolynomial& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    QPolynomial& operator-=(const QPolynomial& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    QPolynomial& operator*=(const QPolynomial& o) { return *this = *this * o; }

    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
    friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
    friend QPolynomial operator-(QPolynomial a) {
        for (auto& [e, c] : a.terms_) c = -c;
        return a;
    }

    friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
        QPolynomial r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }

    /// Multiplies by q^k.
    [[nodiscard]] QPolynomial shifted(int k) const {
        QPolynomial r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
        return r;
    }

    friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

    /// Canonical text form, ascending powers: "2 + 4*q + q^2".
    [[nodiscard]] std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            BigInt mag = c < 0 ? BigInt(-c) : c;
            if (first) {
                if (c < 0) os << "-";
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            first = false;
            if (e == 0) {
                os << mag;
                continue;
            }
            if (mag != 1) os << mag << "*";
            os << "q";
            if (e != 1) os << "^" << e;
        }
        return os.str();
    }

private:
    std::map<int, BigInt> terms_;
};

inline QPolynomial add(const QPolynomial& p, const QPolynomial& q) { return p + q; }
inline QPolynomial mul(const QPolynomial& p, const QPolynomial& q) { return p * q; }

/**
 * Gaussian binomial [m+p choose m]_q, the generating function of partitions
 * fitting in an m x p box. Built from the Pascal recurrence
 *   [a, b] = [a-1, b] + q^(a-b) [a-1, b-1]
 * so no polynomial division is needed. A negative box width (p < 0) is the
 * empty box and yields zero; m < 0 is rejected.
 */
inline QPolynomial qbinom(int m, int p) {
    if (m < 0) throw std::invalid_argument("qbinom: negative part count");
    if (p < 0) return {};
    const int total = m + p;
    // row[b] holds [a choose b]_q for the current a.
    std::vector<QPolynomial> row(static_cast<std::size_t>(m) + 1);
    row[0] = 1;
    for (int a = 1; a <= total; ++a) {
        for (int b = std::min(a, m); b >= 1; --b) {
            auto& cur = row[static_cast<std::size_t>(b)];
            cur = cur + row[static_cast<std::size_t>(b - 1)].shifted(a - b);
        }
    }
    return row[static_cast<std::size_t>(m)];
}

}  // namespace rigged
