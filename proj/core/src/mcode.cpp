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

#include "multcode/mcode.hpp"

#include <stdexcept>

namespace multcode {

Grid::Grid(const PrimeField& field, std::vector<std::vector<FieldElement>> sets)
    : p_(field.modulus()), sets_(std::move(sets)) {
    if (sets_.empty()) throw std::invalid_argument("grid needs at least one axis");
    n_ = sets_[0].size();
    if (n_ == 0) throw std::invalid_argument("evaluation sets must be non-empty");
    for (const auto& t : sets_) {
        if (t.size() != n_) throw std::invalid_argument("all evaluation sets must have equal size");
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (t[i].modulus() != p_) throw std::invalid_argument("evaluation point from wrong field");
            if (i > 0 && t[i - 1].value() >= t[i].value())
                throw std::invalid_argument("evaluation sets must be strictly increasing");
        }
    }
}

std::size_t Grid::point_count() const {
    std::size_t c = 1;
    for (int i = 0; i < dims(); ++i) c *= n_;
    return c;
}

std::vector<FieldElement> Grid::point(std::size_t index) const {
    std::vector<FieldElement> out(static_cast<std::size_t>(dims()), FieldElement(0, p_));
    for (int v = dims() - 1; v >= 0; --v) {
        out[static_cast<std::size_t>(v)] = sets_[static_cast<std::size_t>(v)][index % n_];
        index /= n_;
    }
    return out;
}

CodeParams::CodeParams(Grid grid_in, int order, std::int64_t degree)
    : grid(std::move(grid_in)), s(order), d(degree) {
    if (s < 1) throw std::invalid_argument("multiplicity order must be >= 1");
    if (d < 0) throw std::invalid_argument("degree bound must be >= 0");
    if (d >= s * n()) throw std::invalid_argument("code parameters need d < s*n");
}

std::size_t CodeParams::symbol_width() const {
    return monomials_below(dims(), s).size();
}

ReceivedWord::ReceivedWord(CodeParams params)
    : params_(std::move(params)),
      symbols_(params_.grid.point_count(), Jet(params_.modulus(), params_.dims(), params_.s)) {}

ReceivedWord::ReceivedWord(CodeParams params, std::vector<Jet> symbols)
    : params_(std::move(params)), symbols_(std::move(symbols)) {
    if (symbols_.size() != params_.grid.point_count())
        throw std::invalid_argument("one jet per grid point required");
    for (const auto& j : symbols_) {
        if (j.vars() != params_.dims() || j.order() != params_.s || j.modulus() != params_.modulus())
            throw std::invalid_argument("jet shape does not match code parameters");
    }
}

void ReceivedWord::set_symbol(std::size_t index, Jet jet) {
    if (jet.vars() != params_.dims() || jet.order() != params_.s || jet.modulus() != params_.modulus())
        throw std::invalid_argument("jet shape does not match code parameters");
    symbols_[index] = std::move(jet);
}

ReceivedWord encode(const MultiPoly& p, const CodeParams& params) {
    if (p.vars() != params.dims() || p.modulus() != params.modulus())
        throw std::invalid_argument("polynomial shape does not match code parameters");
    if (p.total_degree() > params.d) throw std::invalid_argument("message degree exceeds bound");
    ReceivedWord w(params);
    const std::size_t count = params.grid.point_count();
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<FieldElement> a = params.grid.point(i);
        w.set_symbol(i, eval_jet(p, a, params.s));
    }
    return w;
}

std::int64_t dmin_s(const Jet& r, int s) {
    std::int64_t low = r.lowest_degree();
    if (low < 0) return s;
    return low < s ? low : s;
}

std::int64_t delta_mult(const ReceivedWord& f, const ReceivedWord& g) {
    if (f.params() != g.params()) throw std::invalid_argument("words from different codes");
    const int s = f.params().s;
    std::int64_t total = 0;
    for (std::size_t i = 0; i < f.size(); ++i)
        total += s - dmin_s(jet_sub(f.symbol(i), g.symbol(i)), s);
    return total;
}

std::int64_t delta_mult_varying(std::span<const Jet> f, std::span<const Jet> g,
                                std::span<const int> svec) {
    if (f.size() != g.size() || f.size() != svec.size())
        throw std::invalid_argument("jet word length mismatch");
    std::int64_t total = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const int s = svec[i];
        if (s < 0) throw std::invalid_argument("negative multiplicity");
        if (f[i].order() < s || g[i].order() < s)
            throw std::invalid_argument("jet order below the requested multiplicity");
        if (f[i].vars() != 1 || g[i].vars() != 1) throw std::invalid_argument("univariate jets required");
        Jet diff = jet_sub(f[i].truncated(s), g[i].truncated(s));
        total += s - dmin_s(diff, s);
    }
    return total;
}

std::int64_t hamming(const ReceivedWord& f, const ReceivedWord& g) {
    if (f.params() != g.params()) throw std::invalid_argument("words from different codes");
    std::int64_t total = 0;
    for (std::size_t i = 0; i < f.size(); ++i)
        if (f.symbol(i) != g.symbol(i)) ++total;
    return total;
}

HalfInt unique_decoding_radius(const CodeParams& params) {
    std::int64_t scale = 1;
    for (int i = 1; i < params.dims(); ++i) scale *= params.n();
    return HalfInt::from_twice(scale * (params.s * params.n() - params.d));
}

}  // namespace multcode
