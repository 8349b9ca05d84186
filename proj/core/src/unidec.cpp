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

#include "multcode/unidec.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "multcode/linsolve.hpp"

namespace multcode {

UniDecodeInstance::UniDecodeInstance(std::vector<FieldElement> points, std::int64_t degree_bound,
                                     std::vector<int> svec, std::vector<Jet> jets)
    : points_(std::move(points)), svec_(std::move(svec)), jets_(std::move(jets)), e_(degree_bound) {
    if (points_.empty()) throw std::invalid_argument("empty evaluation set");
    if (points_.size() != svec_.size() || points_.size() != jets_.size())
        throw std::invalid_argument("points, multiplicities and jets must align");
    if (e_ < 0) throw std::invalid_argument("degree bound must be >= 0");
    p_ = points_[0].modulus();

    std::vector<std::size_t> order(points_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return points_[a].value() < points_[b].value(); });

    std::vector<FieldElement> pts;
    std::vector<int> sv;
    std::vector<Jet> js;
    pts.reserve(points_.size());
    for (std::size_t i : order) {
        const FieldElement& a = points_[i];
        if (a.modulus() != p_) throw std::invalid_argument("points from different fields");
        if (!pts.empty() && pts.back() == a) throw std::invalid_argument("duplicate evaluation point");
        int s = svec_[i];
        if (s < 0) throw std::invalid_argument("negative multiplicity");
        const Jet& h = jets_[i];
        if (h.vars() != 1 || h.modulus() != p_) throw std::invalid_argument("univariate jets required");
        if (h.order() < s) throw std::invalid_argument("jet carries fewer derivatives than requested");
        pts.push_back(a);
        sv.push_back(s);
        js.push_back(h.order() == s ? h : h.truncated(s));
    }
    points_ = std::move(pts);
    svec_ = std::move(sv);
    jets_ = std::move(js);

    n_total_ = std::accumulate(svec_.begin(), svec_.end(), std::int64_t{0});
    if (n_total_ <= e_)
        throw std::invalid_argument("total multiplicity must exceed the degree bound");
    d_interp_ = (n_total_ + e_) / 2 + 1;
}

std::pair<UniPoly, UniPoly> interpolate(const UniDecodeInstance& inst) {
    const PrimeField field(inst.modulus());
    const std::int64_t d_interp = inst.interp_degree();       // D
    const std::int64_t b0_cols = d_interp;                    // deg B0 < D
    const std::int64_t b1_cols = d_interp - inst.degree_bound();  // deg B1 < D - e
    const std::int64_t cols = b0_cols + b1_cols;

    Matrix m(field, static_cast<std::size_t>(inst.total_multiplicity()),
             static_cast<std::size_t>(cols));
    std::size_t row = 0;
    for (std::size_t t = 0; t < inst.size(); ++t) {
        const int sa = inst.svec()[t];
        if (sa == 0) continue;
        const FieldElement a = inst.points()[t];
        const Jet& h = inst.jets()[t];
        // pw[k][j] = coefficient of z^j in (a+z)^k, truncated at z^sa
        std::vector<std::vector<FieldElement>> pw(static_cast<std::size_t>(d_interp));
        pw[0].assign(static_cast<std::size_t>(sa), field.zero());
        pw[0][0] = field.one();
        for (std::int64_t k = 1; k < d_interp; ++k) {
            pw[static_cast<std::size_t>(k)].assign(static_cast<std::size_t>(sa), field.zero());
            for (int j = 0; j < sa; ++j) {
                FieldElement v = pw[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(j)] * a;
                if (j > 0) v += pw[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(j - 1)];
                pw[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] = v;
            }
        }
        for (int i = 0; i < sa; ++i, ++row) {
            for (std::int64_t k = 0; k < b0_cols; ++k)
                m.at(row, static_cast<std::size_t>(k)) =
                    pw[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
            for (std::int64_t k = 0; k < b1_cols; ++k) {
                FieldElement v = field.zero();
                for (int j = 0; j <= i; ++j)
                    v += h.coeff1(static_cast<std::uint32_t>(j)) *
                         pw[static_cast<std::size_t>(k)][static_cast<std::size_t>(i - j)];
                m.at(row, static_cast<std::size_t>(b0_cols + k)) = v;
            }
        }
    }

    auto kernel = kernel_vector(m);
    if (!kernel) throw std::logic_error("interpolation system has no kernel");
    std::vector<FieldElement> b0(kernel->begin(), kernel->begin() + b0_cols);
    std::vector<FieldElement> b1(kernel->begin() + b0_cols, kernel->end());
    UniPoly B0(inst.modulus(), std::move(b0));
    UniPoly B1(inst.modulus(), std::move(b1));
    if (B1.is_zero()) throw std::logic_error("interpolation produced zero B1");
    return {std::move(B0), std::move(B1)};
}

std::vector<Jet> encode_varying(const UniPoly& r, std::span<const FieldElement> points,
                                std::span<const int> svec) {
    if (points.size() != svec.size()) throw std::invalid_argument("points and multiplicities must align");
    std::vector<Jet> out;
    out.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (svec[i] == 0)
            out.emplace_back(r.modulus(), 1, 0);
        else
            out.push_back(taylor_shift_univ(r, points[i], svec[i]));
    }
    return out;
}

std::optional<UniPoly> decode(const UniDecodeInstance& inst) {
    auto [b0, b1] = interpolate(inst);
    auto r = exact_divide(-b0, b1);
    if (!r) return std::nullopt;
    if (r->degree() > inst.degree_bound()) return std::nullopt;
    std::vector<Jet> enc = encode_varying(*r, inst.points(), inst.svec());
    std::int64_t dist = delta_mult_varying(inst.jets(), enc, inst.svec());
    if (2 * dist < inst.total_multiplicity() - inst.degree_bound()) return *r;
    return std::nullopt;
}

}  // namespace multcode
