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

#include "multcode/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace multcode {

namespace {

void enumerate_monomials(int vars, std::int64_t remaining, Exponents& prefix,
                         std::vector<Exponents>& out) {
    if (static_cast<int>(prefix.size()) == vars) {
        out.push_back(prefix);
        return;
    }
    for (std::int64_t k = 0; k <= remaining; ++k) {
        prefix.push_back(static_cast<std::uint32_t>(k));
        enumerate_monomials(vars, remaining - k, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Exponents> monomials_up_to(int vars, std::int64_t degree_bound_inclusive) {
    std::vector<Exponents> out;
    if (degree_bound_inclusive < 0) return out;
    Exponents prefix;
    enumerate_monomials(vars, degree_bound_inclusive, prefix, out);
    std::sort(out.begin(), out.end(), GradedLexLess{});
    return out;
}

std::vector<Exponents> monomials_below(int vars, std::int64_t degree_bound_exclusive) {
    return monomials_up_to(vars, degree_bound_exclusive - 1);
}

std::vector<Exponents> monomials_of_degree(int vars, std::int64_t degree) {
    std::vector<Exponents> out;
    for (auto& e : monomials_up_to(vars, degree))
        if (degree_of(e) == degree) out.push_back(std::move(e));
    return out;
}

// ---------------------------------------------------------------------------
// Jet

Jet::Jet(const PrimeField& field, int vars, int order) : Jet(field.modulus(), vars, order) {}

Jet::Jet(std::uint64_t modulus, int vars, int order) : p_(modulus), vars_(vars), order_(order) {
    if (vars < 0 || order < 0) throw std::invalid_argument("jet needs vars >= 0 and order >= 0");
}

FieldElement Jet::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    if (it == terms_.end()) return FieldElement(0, p_);
    return it->second;
}

void Jet::set_coeff(const Exponents& e, const FieldElement& c) {
    if (static_cast<int>(e.size()) != vars_) throw std::invalid_argument("jet exponent arity mismatch");
    if (degree_of(e) >= order_) throw std::invalid_argument("jet exponent beyond truncation order");
    if (c.modulus() != p_) throw std::invalid_argument("jet coefficient from wrong field");
    if (c.is_zero())
        terms_.erase(e);
    else
        terms_[e] = c;
}

std::int64_t Jet::lowest_degree() const {
    if (terms_.empty()) return -1;
    return degree_of(terms_.begin()->first);  // graded-lex map: first key has minimum degree
}

Jet Jet::truncated(int order) const {
    if (order > order_) throw std::invalid_argument("truncation cannot raise jet order");
    Jet out(p_, vars_, order);
    for (const auto& [e, c] : terms_) {
        if (degree_of(e) < order) out.terms_[e] = c;
    }
    return out;
}

FieldElement Jet::eval1(const FieldElement& x) const {
    if (vars_ != 1) throw std::invalid_argument("eval1 requires a univariate jet");
    FieldElement acc(0, p_);
    for (const auto& [e, c] : terms_) {
        FieldElement t = c;
        for (std::uint32_t i = 0; i < e[0]; ++i) t *= x;
        acc += t;
    }
    return acc;
}

bool Jet::operator==(const Jet& rhs) const {
    return p_ == rhs.p_ && vars_ == rhs.vars_ && order_ == rhs.order_ && terms_ == rhs.terms_;
}

namespace {

void check_jet_compat(const Jet& u, const Jet& v) {
    if (u.modulus() != v.modulus()) throw std::invalid_argument("jets over different fields");
    if (u.vars() != v.vars() || u.order() != v.order())
        throw std::invalid_argument("jet arity/order mismatch");
}

}  // namespace

Jet jet_add(const Jet& u, const Jet& v) {
    check_jet_compat(u, v);
    Jet out = u;
    for (const auto& [e, c] : v.terms_) {
        FieldElement s = out.coeff(e) + c;
        if (s.is_zero())
            out.terms_.erase(e);
        else
            out.terms_[e] = s;
    }
    return out;
}

Jet jet_sub(const Jet& u, const Jet& v) {
    check_jet_compat(u, v);
    Jet out = u;
    for (const auto& [e, c] : v.terms_) {
        FieldElement s = out.coeff(e) - c;
        if (s.is_zero())
            out.terms_.erase(e);
        else
            out.terms_[e] = s;
    }
    return out;
}

Jet jet_truncated_mul(const Jet& u, const Jet& v) {
    check_jet_compat(u, v);
    Jet out(u.modulus(), u.vars(), u.order());
    for (const auto& [eu, cu] : u.terms_) {
        std::int64_t du = degree_of(eu);
        for (const auto& [ev, cv] : v.terms_) {
            if (du + degree_of(ev) >= u.order()) continue;
            Exponents e(eu.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = eu[i] + ev[i];
            FieldElement s = out.coeff(e) + cu * cv;
            if (s.is_zero())
                out.terms_.erase(e);
            else
                out.terms_[e] = s;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// UniPoly

UniPoly::UniPoly(const PrimeField& field) : p_(field.modulus()) {}

UniPoly::UniPoly(std::uint64_t modulus, std::vector<FieldElement> coeffs)
    : p_(modulus), c_(std::move(coeffs)) {
    for (const auto& c : c_)
        if (c.modulus() != p_) throw std::invalid_argument("coefficient from wrong field");
    trim();
}

UniPoly UniPoly::from_values(const PrimeField& field, const std::vector<std::uint64_t>& coeffs) {
    std::vector<FieldElement> c;
    c.reserve(coeffs.size());
    for (auto v : coeffs) c.push_back(field.element(v));
    return UniPoly(field.modulus(), std::move(c));
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FieldElement UniPoly::coeff(std::int64_t k) const {
    if (k < 0 || k >= static_cast<std::int64_t>(c_.size())) return FieldElement(0, p_);
    return c_[static_cast<std::size_t>(k)];
}

void UniPoly::set_coeff(std::int64_t k, const FieldElement& v) {
    if (k < 0) throw std::invalid_argument("negative degree");
    if (v.modulus() != p_) throw std::invalid_argument("coefficient from wrong field");
    if (k >= static_cast<std::int64_t>(c_.size())) {
        if (v.is_zero()) return;
        c_.resize(static_cast<std::size_t>(k) + 1, FieldElement(0, p_));
    }
    c_[static_cast<std::size_t>(k)] = v;
    trim();
}

FieldElement UniPoly::eval(const FieldElement& x) const {
    FieldElement acc(0, p_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::operator+(const UniPoly& rhs) const {
    if (p_ != rhs.p_) throw std::invalid_argument("polynomials over different fields");
    std::vector<FieldElement> c(std::max(c_.size(), rhs.c_.size()), FieldElement(0, p_));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(static_cast<std::int64_t>(i)) + rhs.coeff(static_cast<std::int64_t>(i));
    return UniPoly(p_, std::move(c));
}

UniPoly UniPoly::operator-(const UniPoly& rhs) const { return *this + (-rhs); }

UniPoly UniPoly::operator-() const {
    std::vector<FieldElement> c(c_.size(), FieldElement(0, p_));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
    return UniPoly(p_, std::move(c));
}

UniPoly UniPoly::scaled(const FieldElement& s) const {
    std::vector<FieldElement> c(c_.size(), FieldElement(0, p_));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * s;
    return UniPoly(p_, std::move(c));
}

UniPoly UniPoly::operator*(const UniPoly& rhs) const {
    if (p_ != rhs.p_) throw std::invalid_argument("polynomials over different fields");
    if (is_zero() || rhs.is_zero()) return UniPoly(p_, {});
    std::vector<FieldElement> c(c_.size() + rhs.c_.size() - 1, FieldElement(0, p_));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < rhs.c_.size(); ++j) c[i + j] += c_[i] * rhs.c_[j];
    return UniPoly(p_, std::move(c));
}

// ---------------------------------------------------------------------------
// MultiPoly

MultiPoly::MultiPoly(const PrimeField& field, int vars) : MultiPoly(field.modulus(), vars) {}

MultiPoly::MultiPoly(std::uint64_t modulus, int vars) : p_(modulus), vars_(vars) {
    if (vars < 1) throw std::invalid_argument("polynomial needs at least one variable");
}

MultiPoly MultiPoly::from_univariate(const UniPoly& p) {
    MultiPoly out(p.modulus(), 1);
    for (std::int64_t k = 0; k <= p.degree(); ++k)
        out.set_coeff(Exponents{static_cast<std::uint32_t>(k)}, p.coeff(k));
    return out;
}

std::int64_t MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    return degree_of(terms_.rbegin()->first);  // graded-lex map: last key has maximum degree
}

FieldElement MultiPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    if (it == terms_.end()) return FieldElement(0, p_);
    return it->second;
}

void MultiPoly::set_coeff(const Exponents& e, const FieldElement& c) {
    if (static_cast<int>(e.size()) != vars_) throw std::invalid_argument("exponent arity mismatch");
    if (c.modulus() != p_) throw std::invalid_argument("coefficient from wrong field");
    if (c.is_zero())
        terms_.erase(e);
    else
        terms_[e] = c;
}

void MultiPoly::add_to_coeff(const Exponents& e, const FieldElement& c) { set_coeff(e, coeff(e) + c); }

FieldElement MultiPoly::eval(std::span<const FieldElement> point) const {
    if (static_cast<int>(point.size()) != vars_) throw std::invalid_argument("point arity mismatch");
    FieldElement acc(0, p_);
    for (const auto& [e, c] : terms_) {
        FieldElement t = c;
        for (int v = 0; v < vars_; ++v)
            for (std::uint32_t i = 0; i < e[static_cast<std::size_t>(v)]; ++i) t *= point[static_cast<std::size_t>(v)];
        acc += t;
    }
    return acc;
}

MultiPoly MultiPoly::operator+(const MultiPoly& rhs) const {
    if (p_ != rhs.p_ || vars_ != rhs.vars_) throw std::invalid_argument("polynomial shape mismatch");
    MultiPoly out = *this;
    for (const auto& [e, c] : rhs.terms_) out.add_to_coeff(e, c);
    return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& rhs) const {
    if (p_ != rhs.p_ || vars_ != rhs.vars_) throw std::invalid_argument("polynomial shape mismatch");
    MultiPoly out = *this;
    for (const auto& [e, c] : rhs.terms_) out.add_to_coeff(e, -c);
    return out;
}

UniPoly MultiPoly::to_univariate() const {
    if (vars_ != 1) throw std::invalid_argument("not a univariate polynomial");
    UniPoly out(p_, {});
    for (const auto& [e, c] : terms_) out.set_coeff(e[0], c);
    return out;
}

bool MultiPoly::operator==(const MultiPoly& rhs) const {
    return p_ == rhs.p_ && vars_ == rhs.vars_ && terms_ == rhs.terms_;
}

// ---------------------------------------------------------------------------
// Jet evaluation

namespace {

// Multiply a jet by (a + z_v), truncated at the jet's order.
Jet shift_mul(const Jet& j, const FieldElement& a, int v) {
    Jet out(j.modulus(), j.vars(), j.order());
    for (const auto& [e, c] : j.terms()) {
        FieldElement lo = out.coeff(e) + c * a;
        out.set_coeff(e, lo);
        if (degree_of(e) + 1 < j.order()) {
            Exponents up = e;
            up[static_cast<std::size_t>(v)] += 1;
            out.set_coeff(up, out.coeff(up) + c);
        }
    }
    return out;
}

// Substitute x_v <- a_v + z_v for v, v+1, ... by a Horner pass per variable.
// Keys in `terms` must have zero entries below position v (already-consumed
// variables live in the output jet, not here).
Jet substitute_from(const TermMap& terms, std::span<const FieldElement> point, int v, int vars,
                    int order, std::uint64_t p) {
    Jet acc(p, vars, order);
    if (terms.empty()) return acc;
    if (v == vars) {
        // only the constant key can remain
        acc.set_coeff(Exponents(static_cast<std::size_t>(vars), 0), terms.begin()->second);
        return acc;
    }
    std::map<std::uint32_t, TermMap> groups;
    std::uint32_t kmax = 0;
    for (const auto& [e, c] : terms) {
        std::uint32_t k = e[static_cast<std::size_t>(v)];
        Exponents rest = e;
        rest[static_cast<std::size_t>(v)] = 0;
        groups[k][rest] = c;
        kmax = std::max(kmax, k);
    }
    for (std::int64_t k = kmax; k >= 0; --k) {
        acc = shift_mul(acc, point[static_cast<std::size_t>(v)], v);
        auto it = groups.find(static_cast<std::uint32_t>(k));
        if (it != groups.end())
            acc = jet_add(acc, substitute_from(it->second, point, v + 1, vars, order, p));
    }
    return acc;
}

}  // namespace

Jet eval_jet(const MultiPoly& p, std::span<const FieldElement> point, int order) {
    if (static_cast<int>(point.size()) != p.vars()) throw std::invalid_argument("point arity mismatch");
    if (order < 1) throw std::invalid_argument("jet order must be >= 1");
    for (const auto& x : point)
        if (x.modulus() != p.modulus()) throw std::invalid_argument("point from wrong field");
    return substitute_from(p.terms(), point, 0, p.vars(), order, p.modulus());
}

Jet taylor_shift_univ(const UniPoly& p, const FieldElement& a, int order) {
    if (order < 1) throw std::invalid_argument("jet order must be >= 1");
    if (a.modulus() != p.modulus()) throw std::invalid_argument("point from wrong field");
    // Horner: J = (...(c_d (a+z) + c_{d-1})(a+z) + ...) truncated at z^order.
    Jet acc(p.modulus(), 1, order);
    for (std::int64_t k = p.degree(); k >= 0; --k) {
        acc = shift_mul(acc, a, 0);
        FieldElement c = p.coeff(k);
        if (!c.is_zero()) {
            Exponents zero{0};
            acc.set_coeff(zero, acc.coeff(zero) + c);
        }
    }
    return acc;
}

FieldElement coeff_of(const MultiPoly& p, const Exponents& e) { return p.coeff(e); }

std::optional<UniPoly> exact_divide(const UniPoly& num, const UniPoly& den) {
    if (den.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    if (num.modulus() != den.modulus()) throw std::invalid_argument("polynomials over different fields");
    if (num.is_zero()) return UniPoly(num.modulus(), {});
    if (num.degree() < den.degree()) return std::nullopt;
    std::uint64_t p = num.modulus();
    std::vector<FieldElement> rem = num.coeffs();
    std::vector<FieldElement> quot(static_cast<std::size_t>(num.degree() - den.degree()) + 1,
                                   FieldElement(0, p));
    FieldElement lead_inv = den.coeff(den.degree()).inv();
    for (std::int64_t k = num.degree() - den.degree(); k >= 0; --k) {
        FieldElement q = rem[static_cast<std::size_t>(k + den.degree())] * lead_inv;
        quot[static_cast<std::size_t>(k)] = q;
        if (q.is_zero()) continue;
        for (std::int64_t j = 0; j <= den.degree(); ++j)
            rem[static_cast<std::size_t>(k + j)] -= q * den.coeff(j);
    }
    for (const auto& r : rem)
        if (!r.is_zero()) return std::nullopt;
    return UniPoly(p, std::move(quot));
}

}  // namespace multcode
