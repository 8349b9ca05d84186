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

#include "multcode/mvdec.hpp"

#include <cassert>
#include <stdexcept>

#include "multcode/unidec.hpp"

namespace multcode {

namespace {

Grid tail_grid(const Grid& grid) {
    std::vector<std::vector<FieldElement>> sets(grid.axes().begin() + 1, grid.axes().end());
    return Grid(PrimeField(grid.modulus()), std::move(sets));
}

std::size_t axis_index_of(const Grid& grid, const FieldElement& a) {
    const auto& t1 = grid.axis(0);
    for (std::size_t i = 0; i < t1.size(); ++i)
        if (t1[i] == a) return i;
    throw std::invalid_argument("value not on the first axis");
}

// Column decode of one slice: the univariate multiplicity decoder for
// m-1 = 1, the full decoder recursively otherwise. Failure maps to the
// zero polynomial; its badness is absorbed by the weight function.
MultiPoly sub_decode(const ReceivedWord& word) {
    const CodeParams& params = word.params();
    if (params.dims() == 1) {
        std::vector<int> svec(word.size(), params.s);
        std::vector<Jet> jets;
        jets.reserve(word.size());
        for (std::size_t i = 0; i < word.size(); ++i) jets.push_back(word.symbol(i));
        UniDecodeInstance inst(params.grid.axis(0), params.d, svec, std::move(jets));
        auto r = decode(inst);
        if (r) return MultiPoly::from_univariate(*r);
        return MultiPoly(params.modulus(), 1);
    }
    auto r = decode(word);
    if (r) return *r;
    return MultiPoly(params.modulus(), params.dims());
}

ReceivedWord subtract_encoding(const ReceivedWord& f, const MultiPoly& layer) {
    ReceivedWord enc = encode(layer, f.params());
    ReceivedWord out(f.params());
    for (std::size_t i = 0; i < f.size(); ++i) out.set_symbol(i, jet_sub(f.symbol(i), enc.symbol(i)));
    return out;
}

std::optional<MultiPoly> decode_impl(const ReceivedWord& f, DecodeTrace* trace) {
    const CodeParams& params = f.params();
    const int m = params.dims();
    const std::int64_t n = params.n();
    const int s = params.s;
    const std::int64_t d = params.d;
    const PrimeField field(params.modulus());
    const auto& t1 = params.grid.axis(0);

    MultiPoly assembled(field, m);
    ReceivedWord residual = f;

    for (std::int64_t ell = 0; ell <= d; ++ell) {
        const int r = s - static_cast<int>((d - ell) / n);
        const Grid sub_grid = tail_grid(params.grid);

        // column decodes and the shared weight function
        std::vector<std::vector<MultiPoly>> col_polys(
            t1.size(), std::vector<MultiPoly>(static_cast<std::size_t>(r), MultiPoly(field, m - 1)));
        std::vector<std::vector<HalfInt>> weights(t1.size(),
                                                  std::vector<HalfInt>(static_cast<std::size_t>(r)));
        std::int64_t cap_scale = 1;  // n^(m-2)
        for (int i = 2; i < m; ++i) cap_scale *= n;

        for (std::size_t ai = 0; ai < t1.size(); ++ai) {
            for (int i = 0; i < r; ++i) {
                assert(n * (s - i) > d - ell);
                HalfInt cap = HalfInt::from_twice(cap_scale * (n * (s - i) - (d - ell)));
                ReceivedWord word = slice(residual, t1[ai], i, d - ell);
                MultiPoly g = sub_decode(word);
                std::int64_t dist = delta_mult(word, encode(g, word.params()));
                col_polys[ai][static_cast<std::size_t>(i)] = std::move(g);
                weights[ai][static_cast<std::size_t>(i)] = min(HalfInt::from_int(dist), cap);
            }
        }

        // one weighted extraction per monomial of degree d - ell in x_2..x_m
        MultiPoly layer(field, m);
        for (const Exponents& tail : monomials_of_degree(m - 1, d - ell)) {
            std::vector<Jet> g_word;
            g_word.reserve(t1.size());
            for (std::size_t ai = 0; ai < t1.size(); ++ai) {
                Jet jet(field, 1, r);
                for (int i = 0; i < r; ++i)
                    jet.set_coeff(Exponents{static_cast<std::uint32_t>(i)},
                                  col_polys[ai][static_cast<std::size_t>(i)].coeff(tail));
                g_word.push_back(std::move(jet));
            }
            WeightedInstance inst(t1, d, s, m, ell, r, std::move(g_word), weights);
            UniPoly piece = decode(inst);
            if (trace) trace->extractions.push_back({ell, tail, inst, piece});
            for (std::int64_t k = 0; k <= piece.degree(); ++k) {
                Exponents e(static_cast<std::size_t>(m), 0);
                e[0] = static_cast<std::uint32_t>(k);
                for (int v = 1; v < m; ++v) e[static_cast<std::size_t>(v)] = tail[static_cast<std::size_t>(v - 1)];
                layer.add_to_coeff(e, piece.coeff(k));
            }
        }

        residual = subtract_encoding(residual, layer);
        assembled = assembled + layer;
#ifndef NDEBUG
        // residual must stay exactly f - Enc(partial sum)
        assert(subtract_encoding(f, assembled) == residual);
#endif
    }

    if (HalfInt::from_int(delta_mult(f, encode(assembled, params))) < unique_decoding_radius(params))
        return assembled;
    return std::nullopt;
}

}  // namespace

ReceivedWord slice(const ReceivedWord& f, const FieldElement& a, int level,
                   std::int64_t out_degree) {
    const CodeParams& params = f.params();
    const int m = params.dims();
    if (m < 2) throw std::invalid_argument("slicing needs at least two variables");
    if (level < 0 || level >= params.s) throw std::invalid_argument("derivative level out of range");

    CodeParams sub_params(tail_grid(params.grid), params.s - level, out_degree);
    ReceivedWord out(sub_params);
    const std::size_t ai = axis_index_of(params.grid, a);
    const std::size_t sub_count = sub_params.grid.point_count();
    for (std::size_t b = 0; b < sub_count; ++b) {
        const Jet& full = f.symbol(ai * sub_count + b);
        Jet jet(params.modulus(), m - 1, params.s - level);
        for (const auto& [e, c] : full.terms()) {
            if (e[0] != static_cast<std::uint32_t>(level)) continue;
            Exponents tail(e.begin() + 1, e.end());
            if (degree_of(tail) >= params.s - level) continue;
            jet.set_coeff(tail, c);
        }
        out.set_symbol(b, std::move(jet));
    }
    return out;
}

std::optional<MultiPoly> decode_bivariate(const ReceivedWord& f, DecodeTrace* trace) {
    if (f.params().dims() != 2) throw std::invalid_argument("decode_bivariate needs m = 2");
    return decode_impl(f, trace);
}

std::optional<MultiPoly> decode(const ReceivedWord& f, DecodeTrace* trace) {
    if (f.params().dims() < 2) throw std::invalid_argument("multivariate decoding needs m >= 2");
    if (f.params().dims() == 2) return decode_bivariate(f, trace);
    return decode_impl(f, trace);
}

}  // namespace multcode
