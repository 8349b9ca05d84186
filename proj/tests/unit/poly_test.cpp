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

#include <doctest.h>

#include "multcode/poly.hpp"
#include "test_util.hpp"

using namespace multcode;
using testutil::Rng;

namespace {

MultiPoly monomial(const PrimeField& field, Exponents e, std::uint64_t c = 1) {
    MultiPoly p(field, static_cast<int>(e.size()));
    p.set_coeff(e, field.element(c));
    return p;
}

}  // namespace

TEST_CASE("jet of x^2 at 1") {
    PrimeField f7(7);
    Jet j = eval_jet(monomial(f7, {2}), std::vector<FieldElement>{f7.element(1)}, 2);
    CHECK(j.coeff1(0) == f7.element(1));
    CHECK(j.coeff1(1) == f7.element(2));  // 1 + 2z
}

TEST_CASE("jet of x^2 at 1 in characteristic 2") {
    PrimeField f2(2);
    Jet j = eval_jet(monomial(f2, {2}), std::vector<FieldElement>{f2.element(1)}, 2);
    CHECK(j.coeff1(0) == f2.element(1));
    CHECK(j.coeff1(1) == f2.element(0));  // the z-coefficient 2x vanishes
}

TEST_CASE("jet of x1 x2 at (1,1)") {
    PrimeField f5(5);
    std::vector<FieldElement> a{f5.element(1), f5.element(1)};
    Jet j = eval_jet(monomial(f5, {1, 1}), a, 2);
    CHECK(j.coeff({0, 0}) == f5.element(1));
    CHECK(j.coeff({0, 1}) == f5.element(1));
    CHECK(j.coeff({1, 0}) == f5.element(1));  // 1 + z1 + z2
}

TEST_CASE("univariate taylor shift") {
    PrimeField f5(5);
    UniPoly x3 = UniPoly::from_values(f5, {0, 0, 0, 1});
    Jet j = taylor_shift_univ(x3, f5.element(1), 3);
    CHECK(j.coeff1(0) == f5.element(1));
    CHECK(j.coeff1(1) == f5.element(3));
    CHECK(j.coeff1(2) == f5.element(3));  // 1 + 3z + 3z^2

    Jet zero = taylor_shift_univ(UniPoly(f5), f5.element(2), 2);
    CHECK(zero.is_zero());

    PrimeField f3(3);
    Jet order1 = taylor_shift_univ(UniPoly::from_values(f3, {0, 1}), f3.element(2), 1);
    CHECK(order1.order() == 1);
    CHECK(order1.coeff1(0) == f3.element(2));
}

TEST_CASE("jet ring operations") {
    PrimeField f5(5);
    Jet one_z(f5, 1, 2);
    one_z.set_coeff({0}, f5.element(1));
    one_z.set_coeff({1}, f5.element(1));
    CHECK(jet_sub(one_z, one_z).is_zero());

    Jet sq = jet_truncated_mul(one_z, one_z);
    CHECK(sq.coeff1(0) == f5.element(1));
    CHECK(sq.coeff1(1) == f5.element(2));  // (1+z)^2 = 1+2z at order 2

    Jet z(f5, 1, 2);
    z.set_coeff({1}, f5.element(1));
    CHECK(jet_truncated_mul(z, z).is_zero());  // z*z truncates away

    Jet other_order(f5, 1, 3);
    CHECK_THROWS_AS(jet_add(one_z, other_order), std::invalid_argument);
}

TEST_CASE("coefficient lookup") {
    PrimeField f7(7);
    MultiPoly p(f7, 1);
    p.set_coeff({2}, f7.element(1));
    p.set_coeff({1}, f7.element(3));
    CHECK(coeff_of(p, {1}) == f7.element(3));

    MultiPoly q(f7, 2);
    q.set_coeff({1, 2}, f7.element(1));
    CHECK(coeff_of(q, {1, 2}) == f7.element(1));
    CHECK(coeff_of(MultiPoly(f7, 2), {0, 0}) == f7.element(0));
}

TEST_CASE("exact division") {
    PrimeField f7(7), f5(5);
    UniPoly num = UniPoly::from_values(f7, {6, 0, 1});  // x^2 - 1
    UniPoly den = UniPoly::from_values(f7, {6, 1});     // x - 1
    auto q = exact_divide(num, den);
    REQUIRE(q.has_value());
    CHECK(*q == UniPoly::from_values(f7, {1, 1}));  // x + 1

    CHECK(!exact_divide(UniPoly::from_values(f5, {1, 0, 1}), UniPoly::from_values(f5, {0, 1})));

    auto zero_q = exact_divide(UniPoly(f7), UniPoly::from_values(f7, {5, 1}));
    REQUIRE(zero_q.has_value());
    CHECK(zero_q->is_zero());

    CHECK_THROWS_AS(exact_divide(num, UniPoly(f7)), std::invalid_argument);
}

TEST_CASE("exact division round-trips random products") {
    Rng rng(11);
    PrimeField field(13);
    for (int trial = 0; trial < 100; ++trial) {
        UniPoly a = testutil::random_unipoly(field, static_cast<std::int64_t>(rng() % 6), rng);
        UniPoly b = testutil::random_unipoly(field, static_cast<std::int64_t>(rng() % 6), rng);
        if (b.is_zero()) continue;
        auto q = exact_divide(a * b, b);
        REQUIRE(q.has_value());
        CHECK(*q == a);
    }
}

TEST_CASE("jet constant term is plain evaluation and eval_jet is linear") {
    Rng rng(3);
    for (std::uint64_t pv : {2ull, 5ull, 13ull}) {
        PrimeField field(pv);
        for (int trial = 0; trial < 40; ++trial) {
            int m = 1 + static_cast<int>(rng() % 3);
            MultiPoly p = testutil::random_poly(field, m, 3, rng);
            MultiPoly q = testutil::random_poly(field, m, 3, rng);
            std::vector<FieldElement> a;
            for (int v = 0; v < m; ++v) a.push_back(testutil::random_element(field, rng));
            int s = 1 + static_cast<int>(rng() % 3);

            Jet jp = eval_jet(p, a, s);
            CHECK(jp.coeff(Exponents(static_cast<std::size_t>(m), 0)) == p.eval(a));
            CHECK(eval_jet(p + q, a, s) == jet_add(jp, eval_jet(q, a, s)));
        }
    }
}

TEST_CASE("jet coefficients equal Hasse derivatives, by the binomial oracle") {
    Rng rng(5);
    for (std::uint64_t pv : {2ull, 3ull, 13ull}) {
        PrimeField field(pv);
        for (int trial = 0; trial < 30; ++trial) {
            int m = 1 + static_cast<int>(rng() % 3);
            MultiPoly p = testutil::random_poly(field, m, 4, rng);
            std::vector<FieldElement> a;
            for (int v = 0; v < m; ++v) a.push_back(testutil::random_element(field, rng));
            int s = 1 + static_cast<int>(rng() % 4);
            Jet j = eval_jet(p, a, s);
            for (const Exponents& e : monomials_below(m, s))
                CHECK(j.coeff(e) == testutil::hasse_derivative_oracle(p, a, e));
        }
    }
}

TEST_CASE("degree-truncated jet reproduces the polynomial") {
    Rng rng(9);
    PrimeField field(17);
    for (int trial = 0; trial < 50; ++trial) {
        std::int64_t deg = static_cast<std::int64_t>(rng() % 4);
        UniPoly p = testutil::random_unipoly(field, deg, rng);
        FieldElement a = testutil::random_element(field, rng);
        FieldElement b = testutil::random_element(field, rng);
        int s = static_cast<int>(deg) + 1 + static_cast<int>(rng() % 2);
        // deg P < s, so P(a + (b-a)) is recovered exactly from the jet at a
        CHECK(taylor_shift_univ(p, a, s).eval1(b - a) == p.eval(b));
    }
}

TEST_CASE("jet iteration follows graded-lex order") {
    PrimeField f7(7);
    MultiPoly p(f7, 2);
    for (const Exponents& e : monomials_up_to(2, 2)) p.set_coeff(e, f7.element(1));
    Jet j = eval_jet(p, std::vector<FieldElement>{f7.element(1), f7.element(2)}, 3);
    std::vector<Exponents> seen;
    for (const auto& [e, c] : j.terms()) seen.push_back(e);
    std::vector<Exponents> expect{{0, 0}, {0, 1}, {1, 0}, {0, 2}, {1, 1}, {2, 0}};
    REQUIRE(seen.size() == expect.size());
    CHECK(seen == expect);
}

TEST_CASE("monomial counts match the binomial formula") {
    CHECK(monomials_below(2, 2).size() == 3);   // C(3, 2)
    CHECK(monomials_below(3, 2).size() == 4);   // C(4, 3)
    CHECK(monomials_below(2, 3).size() == 6);   // C(4, 2)
    CHECK(monomials_up_to(2, 2).size() == 6);
    CHECK(monomials_up_to(3, 3).size() == 20);  // C(6, 3)
}
