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

#include "multcode/gmd.hpp"

#include <algorithm>
#include <stdexcept>

#include "multcode/poly.hpp"
#include "multcode/unidec.hpp"

namespace multcode {

namespace {

constexpr std::uint64_t exhaustive_verify_limit = std::uint64_t(1) << 16;

std::int64_t block_distance(const std::vector<FieldElement>& a, const std::vector<FieldElement>& b) {
    std::int64_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) ++d;
    return d;
}

}  // namespace

RsOuterParams::RsOuterParams(const PrimeField& field, std::vector<FieldElement> eval_set_in,
                             std::int64_t dimension_in)
    : modulus(field.modulus()), eval_set(std::move(eval_set_in)), dimension(dimension_in) {
    if (eval_set.empty()) throw std::invalid_argument("outer evaluation set must be non-empty");
    if (dimension < 1 || dimension > block_count())
        throw std::invalid_argument("outer dimension must be in [1, N]");
    for (std::size_t i = 0; i < eval_set.size(); ++i) {
        if (eval_set[i].modulus() != modulus)
            throw std::invalid_argument("evaluation point from wrong field");
        for (std::size_t j = 0; j < i; ++j)
            if (eval_set[i] == eval_set[j]) throw std::invalid_argument("duplicate evaluation point");
    }
}

ConcatCode::ConcatCode(RsOuterParams outer, const PrimeField& inner_field,
                       std::vector<std::vector<FieldElement>> generator, std::int64_t inner_distance)
    : outer_(std::move(outer)), q_(inner_field.modulus()), gen_(std::move(generator)), d_in_(inner_distance) {
    if (gen_.empty() || gen_[0].empty()) throw std::invalid_argument("empty inner generator matrix");
    for (const auto& row : gen_) {
        if (row.size() != gen_[0].size()) throw std::invalid_argument("ragged inner generator matrix");
        for (const auto& c : row)
            if (c.modulus() != q_) throw std::invalid_argument("generator entry from wrong field");
    }
    // p_out <= q^k, so every outer symbol has a distinct label
    constexpr std::uint64_t saturation = std::uint64_t(1) << 62;
    std::uint64_t capacity = 1;  // q^k, saturated well above any legal modulus
    for (std::int64_t i = 0; i < inner_dim(); ++i) {
        if (capacity >= saturation / q_ + 1) {
            capacity = saturation;
            break;
        }
        capacity *= q_;
    }
    if (capacity < outer_.modulus)
        throw std::invalid_argument("inner message space too small for the outer alphabet");
    if (d_in_ < 1 || d_in_ > inner_length())
        throw std::invalid_argument("inner distance out of range");

    // verify the declared distance over used labels where that is feasible
    if (capacity <= exhaustive_verify_limit) {
        std::int64_t best = inner_length() + 1;
        std::vector<std::vector<FieldElement>> words;
        words.reserve(outer_.modulus);
        for (std::uint64_t v = 0; v < outer_.modulus; ++v)
            words.push_back(inner_encode(FieldElement(v, outer_.modulus)));
        for (std::size_t i = 0; i < words.size(); ++i)
            for (std::size_t j = i + 1; j < words.size(); ++j)
                best = std::min(best, block_distance(words[i], words[j]));
        if (best != d_in_)
            throw std::invalid_argument("declared inner distance does not match the code");
    }
}

std::vector<FieldElement> ConcatCode::label(const FieldElement& outer_symbol) const {
    if (outer_symbol.modulus() != outer_.modulus)
        throw std::invalid_argument("symbol from wrong outer field");
    std::vector<FieldElement> digits;
    digits.reserve(static_cast<std::size_t>(inner_dim()));
    std::uint64_t v = outer_symbol.value();
    for (std::int64_t i = 0; i < inner_dim(); ++i) {
        digits.emplace_back(v % q_, q_);
        v /= q_;
    }
    return digits;
}

std::vector<FieldElement> ConcatCode::inner_encode(const FieldElement& outer_symbol) const {
    std::vector<FieldElement> msg = label(outer_symbol);
    std::vector<FieldElement> out(static_cast<std::size_t>(inner_length()), FieldElement(0, q_));
    for (std::size_t r = 0; r < msg.size(); ++r)
        for (std::size_t c = 0; c < out.size(); ++c) out[c] += msg[r] * gen_[r][c];
    return out;
}

GmdReceived concat_encode(const std::vector<FieldElement>& msg, const ConcatCode& code) {
    const RsOuterParams& outer = code.outer();
    if (static_cast<std::int64_t>(msg.size()) != outer.dimension)
        throw std::invalid_argument("message length must equal the outer dimension");
    UniPoly m_poly(outer.modulus, msg);
    GmdReceived blocks;
    blocks.reserve(outer.eval_set.size());
    for (const FieldElement& a : outer.eval_set) blocks.push_back(code.inner_encode(m_poly.eval(a)));
    return blocks;
}

std::pair<FieldElement, std::int64_t> inner_ml_decode(const std::vector<FieldElement>& block,
                                                      const ConcatCode& code) {
    if (static_cast<std::int64_t>(block.size()) != code.inner_length())
        throw std::invalid_argument("block length mismatch");
    FieldElement best_sym(0, code.outer().modulus);
    std::int64_t best_dist = code.inner_length() + 1;
    for (std::uint64_t v = 0; v < code.outer().modulus; ++v) {
        FieldElement sym(v, code.outer().modulus);
        std::int64_t dist = block_distance(block, code.inner_encode(sym));
        if (dist < best_dist) {  // ties keep the smallest representative
            best_dist = dist;
            best_sym = sym;
        }
    }
    return {best_sym, best_dist};
}

std::optional<std::vector<FieldElement>> gmd_decode(const GmdReceived& f, const ConcatCode& code) {
    const RsOuterParams& outer = code.outer();
    const std::int64_t block_count = outer.block_count();
    if (static_cast<std::int64_t>(f.size()) != block_count)
        throw std::invalid_argument("wrong number of blocks");

    std::vector<FieldElement> symbols;
    std::vector<std::int64_t> weight(static_cast<std::size_t>(block_count));
    for (std::size_t i = 0; i < f.size(); ++i) {
        auto [sym, dist] = inner_ml_decode(f[i], code);
        symbols.push_back(sym);
        weight[i] = std::min(2 * dist, code.inner_distance());
    }

    std::vector<std::int64_t> thresholds{-1};
    thresholds.insert(thresholds.end(), weight.begin(), weight.end());
    std::sort(thresholds.begin(), thresholds.end());
    thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());

    const std::int64_t e = outer.dimension - 1;
    const std::int64_t radius_twice = outer.min_distance() * code.inner_distance();
    for (std::int64_t t : thresholds) {
        std::vector<int> svec(f.size());
        std::vector<Jet> jets;
        std::int64_t retained = 0;
        for (std::size_t i = 0; i < f.size(); ++i) {
            svec[i] = weight[i] > t ? 0 : 1;  // erase distrusted blocks
            retained += svec[i];
            Jet jet(outer.modulus, 1, svec[i]);
            if (svec[i] == 1) jet.set_coeff(Exponents{0}, symbols[i]);
            jets.push_back(std::move(jet));
        }
        if (retained <= e) continue;
        UniDecodeInstance inst(outer.eval_set, e, svec, std::move(jets));
        auto m_poly = decode(inst);
        if (!m_poly) continue;
        std::vector<FieldElement> msg;
        msg.reserve(static_cast<std::size_t>(outer.dimension));
        for (std::int64_t k = 0; k < outer.dimension; ++k) msg.push_back(m_poly->coeff(k));
        GmdReceived re_encoded = concat_encode(msg, code);
        std::int64_t dist = 0;
        for (std::size_t i = 0; i < f.size(); ++i) dist += block_distance(f[i], re_encoded[i]);
        if (2 * dist < radius_twice) return msg;
    }
    return std::nullopt;
}

}  // namespace multcode
