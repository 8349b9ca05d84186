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

#include "multcode/oracle.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace multcode {

std::uint64_t default_enum_cap() {
    if (const char* env = std::getenv("MULTCODE_ENUM_CAP")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw std::invalid_argument("MULTCODE_ENUM_CAP is not a number");
        }
    }
    return 1000000;
}

PolySpace::PolySpace(CodeParams params, std::uint64_t cap)
    : params_(std::move(params)), monomials_(monomials_up_to(params_.dims(), params_.d)) {
    const std::uint64_t p = params_.modulus();
    count_ = 1;
    for (std::size_t i = 0; i < monomials_.size(); ++i) {
        if (count_ > cap / p) throw std::invalid_argument("message space exceeds the enumeration cap");
        count_ *= p;
    }
    if (count_ > cap) throw std::invalid_argument("message space exceeds the enumeration cap");
}

MultiPoly PolySpace::poly_at(std::uint64_t index) const {
    if (index >= count_) throw std::invalid_argument("polynomial index out of range");
    MultiPoly out(params_.modulus(), params_.dims());
    const std::uint64_t p = params_.modulus();
    for (const Exponents& e : monomials_) {
        if (index == 0) break;
        std::uint64_t digit = index % p;
        index /= p;
        if (digit != 0) out.set_coeff(e, FieldElement(digit, p));
    }
    return out;
}

NearestResult nearest_codeword(const ReceivedWord& f, const PolySpace& space) {
    if (f.params() != space.params()) throw std::invalid_argument("word from a different code");
    std::optional<NearestResult> best;
    for (std::uint64_t i = 0; i < space.size(); ++i) {
        MultiPoly cand = space.poly_at(i);
        std::int64_t dist = delta_mult(f, encode(cand, space.params()));
        if (!best || dist < best->dist) {
            best = NearestResult{std::move(cand), dist, true};
        } else if (dist == best->dist) {
            best->unique = false;
        }
    }
    return *best;
}

}  // namespace multcode
