// Copyright 2026 The fibcube Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fibcube/bigint.hpp"

namespace fibcube {

/*
 * Exact polynomial arithmetic over cpp_int. IntPolynomial is dense in one
 * variable x; BiPolynomial is a sparse map in x and q. Both keep a canonical
 * representation (no stored zeros) so operator== is plain memberwise
 * comparison, and both render to a canonical ascending text form used by the
 * CLI and pinned by golden tests.
 */

class IntPolynomial {
public:
    IntPolynomial() = default;
    IntPolynomial(std::initializer_list<Int> ascending) : coeffs_(ascending) { normalize(); }
    explicit IntPolynomial(Int constant) {
        coeffs_.push_back(std::move(constant));
        normalize();
    }
    explicit IntPolynomial(std::vector<Int> ascending) : coeffs_(std::move(ascending)) { normalize(); }

    static IntPolynomial monomial(int degree, Int coefficient = 1) {
        if (degree < 0) throw std::domain_error("IntPolynomial::monomial: negative degree");
        std::vector<Int> c(static_cast<std::size_t>(degree) + 1);
        c.back() = std::move(coefficient);
        return IntPolynomial(std::move(c));
    }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    // Degree of the zero polynomial is below every real degree; -1 stands in
    // for minus infinity.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    Int coefficient(int i) const {
        if (i < 0 || i > degree()) return 0;
        return coeffs_[static_cast<std::size_t>(i)];
    }
    const std::vector<Int>& coefficients() const noexcept { return coeffs_; }

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    IntPolynomial& operator+=(const IntPolynomial& other) {
        if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
        for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
        normalize();
        return *this;
    }
    IntPolynomial& operator-=(const IntPolynomial& other) {
        if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
        for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
        normalize();
        return *this;
    }
    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Int> c(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return IntPolynomial(std::move(c));
    }
    IntPolynomial& operator*=(const IntPolynomial& other) { return *this = *this * other; }

    IntPolynomial& operator*=(const Int& scalar) {
        for (Int& c : coeffs_) c *= scalar;
        normalize();
        return *this;
    }
    friend IntPolynomial operator*(IntPolynomial a, const Int& s) { return a *= s; }
    friend IntPolynomial operator*(const Int& s, IntPolynomial a) { return a *= s; }

    Int evaluate(const Int& x) const {
        Int r = 0;
        for (std::size_t i = coeffs_.size(); i-- > 0;) r = r * x + coeffs_[i];
        return r;
    }

    IntPolynomial derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<Int> c(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * Int(i);
        return IntPolynomial(std::move(c));
    }

    // "c0 + c1*x + c2*x^2" ascending, zero terms omitted, unit coefficients
    // dropped from nonconstant terms; the zero polynomial prints "0".
    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream out;
        bool first = true;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            const Int& c = coeffs_[i];
            if (c == 0) continue;
            Int mag = c < 0 ? Int(-c) : c;
            if (first) {
                if (c < 0) out << '-';
                first = false;
            } else {
                out << (c < 0 ? " - " : " + ");
            }
            if (i == 0) {
                out << mag;
            } else {
                if (mag != 1) out << mag << '*';
                out << 'x';
                if (i > 1) out << '^' << i;
            }
        }
        return out.str();
    }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Int> coeffs_;  // ascending; canonical form has no trailing zeros
};

inline IntPolynomial pow(const IntPolynomial& base, int exponent) {
    if (exponent < 0) throw std::domain_error("pow(IntPolynomial): negative exponent");
    IntPolynomial result{Int(1)};
    IntPolynomial b = base;
    int e = exponent;
    while (e > 0) {
        if (e & 1) result *= b;
        if (e >>= 1) b *= b;
    }
    return result;
}

class BiPolynomial {
public:
    BiPolynomial() = default;
    explicit BiPolynomial(Int constant) {
        if (constant != 0) terms_[{0, 0}] = std::move(constant);
    }

    static BiPolynomial monomial(int x_exp, int q_exp, Int coefficient = 1) {
        if (x_exp < 0 || q_exp < 0)
            throw std::domain_error("BiPolynomial::monomial: negative exponent");
        BiPolynomial r;
        if (coefficient != 0) r.terms_[{x_exp, q_exp}] = std::move(coefficient);
        return r;
    }

    static BiPolynomial from_x(const IntPolynomial& p) {
        BiPolynomial r;
        for (int i = 0; i <= p.degree(); ++i)
            if (p.coefficient(i) != 0) r.terms_[{i, 0}] = p.coefficient(i);
        return r;
    }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == std::pair{0, 0});
    }
    Int to_constant() const {
        if (!is_constant()) throw std::domain_error("BiPolynomial::to_constant: not a constant");
        return terms_.empty() ? Int(0) : terms_.begin()->second;
    }
    bool is_univariate_x() const noexcept {
        for (const auto& [key, c] : terms_)
            if (key.second != 0) return false;
        return true;
    }
    IntPolynomial to_x() const {
        if (!is_univariate_x())
            throw std::domain_error("BiPolynomial::to_x: q appears with positive exponent");
        int deg = terms_.empty() ? -1 : terms_.rbegin()->first.first;
        std::vector<Int> c(static_cast<std::size_t>(deg + 1));
        for (const auto& [key, v] : terms_) c[static_cast<std::size_t>(key.first)] = v;
        return IntPolynomial(std::move(c));
    }

    Int coefficient(int x_exp, int q_exp) const {
        auto it = terms_.find({x_exp, q_exp});
        return it == terms_.end() ? Int(0) : it->second;
    }
    // (x exponent, q exponent) -> coefficient, ordered by exponent pair.
    const std::map<std::pair<int, int>, Int>& terms() const noexcept { return terms_; }

    friend bool operator==(const BiPolynomial&, const BiPolynomial&) = default;

    void add_term(int x_exp, int q_exp, const Int& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace({x_exp, q_exp}, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    BiPolynomial& operator+=(const BiPolynomial& other) {
        for (const auto& [key, c] : other.terms_) add_term(key.first, key.second, c);
        return *this;
    }
    BiPolynomial& operator-=(const BiPolynomial& other) {
        for (const auto& [key, c] : other.terms_) add_term(key.first, key.second, Int(-c));
        return *this;
    }
    friend BiPolynomial operator+(BiPolynomial a, const BiPolynomial& b) { return a += b; }
    friend BiPolynomial operator-(BiPolynomial a, const BiPolynomial& b) { return a -= b; }

    friend BiPolynomial operator*(const BiPolynomial& a, const BiPolynomial& b) {
        BiPolynomial r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
        return r;
    }
    BiPolynomial& operator*=(const BiPolynomial& other) { return *this = *this * other; }

    BiPolynomial& operator*=(const Int& scalar) {
        if (scalar == 0) { terms_.clear(); return *this; }
        for (auto& [key, c] : terms_) c *= scalar;
        return *this;
    }
    friend BiPolynomial operator*(BiPolynomial a, const Int& s) { return a *= s; }

    Int evaluate(const Int& x, const Int& q) const {
        Int r = 0;
        for (const auto& [key, c] : terms_)
            r += c * int_pow(x, key.first) * int_pow(q, key.second);
        return r;
    }

    // Bivariate analogue of IntPolynomial::str: "c*x^i*q^j" terms ordered by
    // the exponent pair (i, j).
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [key, c] : terms_) {
            Int mag = c < 0 ? Int(-c) : c;
            if (first) {
                if (c < 0) out << '-';
                first = false;
            } else {
                out << (c < 0 ? " - " : " + ");
            }
            bool has_var = key.first > 0 || key.second > 0;
            if (mag != 1 || !has_var) out << mag;
            if (key.first > 0) {
                if (mag != 1) out << '*';
                out << 'x';
                if (key.first > 1) out << '^' << key.first;
            }
            if (key.second > 0) {
                if (mag != 1 || key.first > 0) out << '*';
                out << 'q';
                if (key.second > 1) out << '^' << key.second;
            }
            // (mag == 1 && has_var) prints bare variables: "x", "x*q", "q^2"
        }
        return out.str();
    }

private:
    std::map<std::pair<int, int>, Int> terms_;
};

inline BiPolynomial pow(const BiPolynomial& base, int exponent) {
    if (exponent < 0) throw std::domain_error("pow(BiPolynomial): negative exponent");
    BiPolynomial result{Int(1)};
    BiPolynomial b = base;
    int e = exponent;
    while (e > 0) {
        if (e & 1) result *= b;
        if (e >>= 1) b *= b;
    }
    return result;
}

// p(x + c), exact, via Horner in the shifted variable.
inline IntPolynomial substitute_shift(const IntPolynomial& p, const Int& c) {
    IntPolynomial shift{c, Int(1)};  // x + c
    IntPolynomial r;
    for (int i = p.degree(); i >= 0; --i) {
        r *= shift;
        r += IntPolynomial(p.coefficient(i));
    }
    return r;
}

// p(x + q) as a bivariate polynomial, again by Horner.
inline BiPolynomial substitute_xq(const IntPolynomial& p) {
    BiPolynomial shift = BiPolynomial::monomial(1, 0) + BiPolynomial::monomial(0, 1);
    BiPolynomial r;
    for (int i = p.degree(); i >= 0; --i) {
        r *= shift;
        r += BiPolynomial(p.coefficient(i));
    }
    return r;
}

}  // namespace fibcube
