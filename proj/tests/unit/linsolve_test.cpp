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

#include "multcode/linsolve.hpp"
#include "test_util.hpp"

using namespace multcode;
using testutil::Rng;

namespace {

bool is_in_kernel(const Matrix& m, const std::vector<FieldElement>& v) {
    PrimeField field(m.modulus());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        FieldElement acc = field.zero();
        for (std::size_t c = 0; c < m.cols(); ++c) acc += m.at(r, c) * v[c];
        if (!acc.is_zero()) return false;
    }
    return true;
}

bool is_nonzero(const std::vector<FieldElement>& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return true;
    return false;
}

}  // namespace

TEST_CASE("single-equation kernel is canonical") {
    PrimeField f5(5);
    Matrix m(f5, 1, 2);
    m.at(0, 0) = f5.element(1);
    m.at(0, 1) = f5.element(1);
    auto v = kernel_vector(m);
    REQUIRE(v.has_value());
    CHECK((*v)[0] == f5.element(4));
    CHECK((*v)[1] == f5.element(1));  // (-1, 1)
}

TEST_CASE("identity has no kernel") {
    PrimeField f5(5);
    Matrix m(f5, 2, 2);
    m.at(0, 0) = f5.element(1);
    m.at(1, 1) = f5.element(1);
    CHECK(!kernel_vector(m).has_value());
}

TEST_CASE("zero matrix gives the first unit vector") {
    PrimeField f5(5);
    Matrix m(f5, 2, 3);
    auto v = kernel_vector(m);
    REQUIRE(v.has_value());
    CHECK((*v)[0] == f5.element(1));
    CHECK((*v)[1] == f5.element(0));
    CHECK((*v)[2] == f5.element(0));
}

TEST_CASE("kernel vectors are exact, nonzero and deterministic") {
    Rng rng(21);
    for (std::uint64_t pv : {2ull, 5ull, 13ull}) {
        PrimeField field(pv);
        for (int trial = 0; trial < 60; ++trial) {
            std::size_t rows = 1 + rng() % 6;
            std::size_t cols = rows + 1 + rng() % 3;  // wide: kernel guaranteed
            Matrix m(field, rows, cols);
            for (std::size_t r = 0; r < rows; ++r)
                for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = testutil::random_element(field, rng);
            auto v = kernel_vector(m);
            REQUIRE(v.has_value());
            CHECK(is_nonzero(*v));
            CHECK(is_in_kernel(m, *v));
            auto v2 = kernel_vector(m);
            REQUIRE(v2.has_value());
            CHECK(*v == *v2);
        }
    }
}

TEST_CASE("square singular matrices still yield a kernel vector") {
    Rng rng(22);
    PrimeField field(7);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t size = 2 + rng() % 4;
        Matrix m(field, size, size);
        for (std::size_t r = 0; r + 1 < size; ++r)
            for (std::size_t c = 0; c < size; ++c) m.at(r, c) = testutil::random_element(field, rng);
        // last row = scalar multiple of the first: forced rank deficiency
        FieldElement scale = testutil::random_element(field, rng);
        for (std::size_t c = 0; c < size; ++c) m.at(size - 1, c) = m.at(0, c) * scale;
        auto v = kernel_vector(m);
        REQUIRE(v.has_value());
        CHECK(is_nonzero(*v));
        CHECK(is_in_kernel(m, *v));
    }
}
