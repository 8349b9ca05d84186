/*
   Copyright 2026 the multcode authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "multcode/field.hpp"

namespace multcode {

/// Exponent vector of a monomial; one entry per variable.
using Exponents = std::vector<std::uint32_t>;

inline std::int64_t degree_of(const Exponents& e) {
    std::int64_t s = 0;
    for (auto x : e) s += x;
    return s;
}

/// Graded lexicographic order: total degree ascending, ties broken
/// lexicographically on the exponent tuple read left to right. This single
/// order is used everywhere monomials are enumerated or serialized.
struct GradedLexLess {
    bool operator()(const Exponents& a, const Exponents& b) const {
        std::int64_t da = degree_of(a), db = degree_of(b);
        if (da != db) return da < db;
        return a < b;
    }
};

using TermMap = std::map<Exponents, FieldElement, GradedLexLess>;

/// All exponent vectors over m variables with total degree < s (the jet
/// support set) or <= d (the message monomial set), in graded-lex order.
std::vector<Exponents> monomials_below(int vars, std::int64_t degree_bound_exclusive);
std::vector<Exponents> monomials_up_to(int vars, std::int64_t degree_bound_inclusive);
std::vector<Exponents> monomials_of_degree(int vars, std::int64_t degree);

/// Truncated polynomial in z-variables: an element of F[z]/<z>^order.
/// One code symbol. Stored sparsely; absent exponents are zero and no zero
/// coefficient is ever kept.
class Jet {
  public:
    Jet(const PrimeField& field, int vars, int order);
    Jet(std::uint64_t modulus, int vars, int order);

    int vars() const { return vars_; }
    int order() const { return order_; }
    std::uint64_t modulus() const { return p_; }

    bool is_zero() const { return terms_.empty(); }

    FieldElement coeff(const Exponents& e) const;
    FieldElement coeff1(std::uint32_t k) const { return coeff(Exponents{k}); }
    void set_coeff(const Exponents& e, const FieldElement& c);

    /// Total degree of the lowest nonzero monomial; -1 for the zero jet.
    std::int64_t lowest_degree() const;

    /// Copy truncated to a (smaller or equal) order.
    Jet truncated(int order) const;

    /// Univariate jets only: value at z = x, i.e. the polynomial evaluated.
    FieldElement eval1(const FieldElement& x) const;

    const TermMap& terms() const { return terms_; }

    bool operator==(const Jet& rhs) const;
    bool operator!=(const Jet& rhs) const { return !(*this == rhs); }

  private:
    friend Jet jet_add(const Jet&, const Jet&);
    friend Jet jet_sub(const Jet&, const Jet&);
    friend Jet jet_truncated_mul(const Jet&, const Jet&);

    std::uint64_t p_;
    int vars_;
    int order_;
    TermMap terms_;
};

Jet jet_add(const Jet& u, const Jet& v);
Jet jet_sub(const Jet& u, const Jet& v);
Jet jet_truncated_mul(const Jet& u, const Jet& v);

class UniPoly;

/// Dense univariate polynomial, coefficients ascending by degree, trailing
/// zeros trimmed (the zero polynomial has no coefficients).
class UniPoly {
  public:
    explicit UniPoly(const PrimeField& field);
    UniPoly(std::uint64_t modulus, std::vector<FieldElement> coeffs);
    static UniPoly from_values(const PrimeField& field, const std::vector<std::uint64_t>& coeffs);

    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return c_.empty(); }
    std::int64_t degree() const { return static_cast<std::int64_t>(c_.size()) - 1; }

    FieldElement coeff(std::int64_t k) const;
    void set_coeff(std::int64_t k, const FieldElement& v);

    FieldElement eval(const FieldElement& x) const;

    UniPoly operator+(const UniPoly& rhs) const;
    UniPoly operator-(const UniPoly& rhs) const;
    UniPoly operator*(const UniPoly& rhs) const;
    UniPoly operator-() const;
    UniPoly scaled(const FieldElement& c) const;

    bool operator==(const UniPoly& rhs) const { return p_ == rhs.p_ && c_ == rhs.c_; }
    bool operator!=(const UniPoly& rhs) const { return !(*this == rhs); }

    const std::vector<FieldElement>& coeffs() const { return c_; }

  private:
    void trim();
    std::uint64_t p_;
    std::vector<FieldElement> c_;
};

/// Sparse multivariate polynomial over GF(p). Canonical form: no stored
/// zero coefficients, so total_degree() is exact (-1 for the zero
/// polynomial).
class MultiPoly {
  public:
    MultiPoly(const PrimeField& field, int vars);
    MultiPoly(std::uint64_t modulus, int vars);

    static MultiPoly from_univariate(const UniPoly& p);

    int vars() const { return vars_; }
    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return terms_.empty(); }
    std::int64_t total_degree() const;

    FieldElement coeff(const Exponents& e) const;
    void set_coeff(const Exponents& e, const FieldElement& c);
    void add_to_coeff(const Exponents& e, const FieldElement& c);

    FieldElement eval(std::span<const FieldElement> point) const;

    MultiPoly operator+(const MultiPoly& rhs) const;
    MultiPoly operator-(const MultiPoly& rhs) const;

    /// This polynomial viewed as univariate; requires vars() == 1.
    UniPoly to_univariate() const;

    const TermMap& terms() const { return terms_; }

    bool operator==(const MultiPoly& rhs) const;
    bool operator!=(const MultiPoly& rhs) const { return !(*this == rhs); }

  private:
    std::uint64_t p_;
    int vars_;
    TermMap terms_;
};

/// The encoding coordinate: P(a + z) truncated at total z-degree < order.
/// Coefficient of z^e is the e-th Hasse derivative of P at a. Computed by
/// iterated substitution x_i <- a_i + z_i with truncated multiplication, so
/// it is exact in any characteristic.
Jet eval_jet(const MultiPoly& p, std::span<const FieldElement> point, int order);

/// Univariate specialization of eval_jet.
Jet taylor_shift_univ(const UniPoly& p, const FieldElement& a, int order);

/// Exact coefficient lookup, zero if absent.
FieldElement coeff_of(const MultiPoly& p, const Exponents& e);

/// Quotient num/den when the division is exact, nullopt otherwise.
/// den must be nonzero.
std::optional<UniPoly> exact_divide(const UniPoly& num, const UniPoly& den);

}  // namespace multcode
