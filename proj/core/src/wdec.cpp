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

#include "multcode/wdec.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace multcode {

WeightedInstance::WeightedInstance(std::vector<FieldElement> points, std::int64_t global_degree,
                                   int global_order, int dims, std::int64_t local_degree,
                                   int local_order, std::vector<Jet> g,
                                   std::vector<std::vector<HalfInt>> w)
    : points_(std::move(points)),
      d_(global_degree),
      s_(global_order),
      m_(dims),
      ell_(local_degree),
      r_(local_order),
      g_(std::move(g)),
      w_(std::move(w)) {
    if (points_.empty()) throw std::invalid_argument("empty evaluation set");
    p_ = points_[0].modulus();
    if (m_ < 2) throw std::invalid_argument("weighted decoding needs dimension >= 2");
    if (ell_ < 0 || ell_ > d_) throw std::invalid_argument("local degree must be in [0, d]");
    if (d_ >= s_ * n()) throw std::invalid_argument("code parameters need d < s*n");
    if (r_ != s_ - (d_ - ell_) / n())
        throw std::invalid_argument("local multiplicity must be s - floor((d-ell)/n)");
    if (r_ < 1) throw std::invalid_argument("local multiplicity must be >= 1");
    if (g_.size() != points_.size() || w_.size() != points_.size())
        throw std::invalid_argument("word and weights must align with the evaluation set");

    std::vector<std::size_t> order(points_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return points_[a].value() < points_[b].value(); });
    std::vector<FieldElement> pts;
    std::vector<Jet> gs;
    std::vector<std::vector<HalfInt>> ws;
    for (std::size_t i : order) {
        if (points_[i].modulus() != p_) throw std::invalid_argument("points from different fields");
        if (!pts.empty() && pts.back() == points_[i])
            throw std::invalid_argument("duplicate evaluation point");
        if (g_[i].vars() != 1 || g_[i].order() != r_ || g_[i].modulus() != p_)
            throw std::invalid_argument("word symbols must be univariate jets of order r");
        if (static_cast<int>(w_[i].size()) != r_)
            throw std::invalid_argument("one weight per derivative level required");
        for (int lvl = 0; lvl < r_; ++lvl) {
            if (w_[i][static_cast<std::size_t>(lvl)] < HalfInt::from_int(0) ||
                w_[i][static_cast<std::size_t>(lvl)] > weight_cap(lvl))
                throw std::invalid_argument("weight outside [0, n^(m-1)/2 ((s-i)-(d-ell)/n)]");
        }
        pts.push_back(points_[i]);
        gs.push_back(g_[i]);
        ws.push_back(w_[i]);
    }
    points_ = std::move(pts);
    g_ = std::move(gs);
    w_ = std::move(ws);
}

HalfInt WeightedInstance::weight_cap(int level) const {
    std::int64_t scale = 1;
    for (int i = 2; i < m_; ++i) scale *= n();
    return HalfInt::from_twice(scale * (n() * (s_ - level) - (d_ - ell_)));
}

HalfInt WeightedInstance::omega(std::size_t point_index) const {
    HalfInt best = HalfInt::from_int(0);
    for (const auto& v : w_[point_index]) best = max(best, v);
    return best;
}

HalfInt WeightedInstance::gamma_radius() const {
    std::int64_t scale = 1;
    for (int i = 1; i < m_; ++i) scale *= n();
    return HalfInt::from_twice(scale * (n() * s_ - d_));
}

int agreement_order(const Jet& g_a, const UniPoly& r_poly, const FieldElement& a, int r) {
    Jet shifted = taylor_shift_univ(r_poly, a, r);
    for (int j = 0; j < r; ++j) {
        if (g_a.coeff1(static_cast<std::uint32_t>(j)) != shifted.coeff1(static_cast<std::uint32_t>(j)))
            return j;
    }
    return r;
}

HalfInt gamma(const WeightedInstance& inst, const UniPoly& r_poly) {
    if (r_poly.degree() > inst.ell()) throw std::invalid_argument("candidate degree exceeds ell");
    const int r = inst.r();
    HalfInt total = HalfInt::from_int(0);
    for (std::size_t t = 0; t < inst.size(); ++t) {
        const int i = agreement_order(inst.g()[t], r_poly, inst.points()[t], r);
        HalfInt prior = HalfInt::from_int(0);  // max over an empty index set is 0
        for (int j = 0; j < std::min(i, r); ++j) prior = max(prior, inst.w()[t][static_cast<std::size_t>(j)]);
        if (i == r) {
            total += prior;
        } else {
            // full distance of the level-i code minus the distrust already paid
            HalfInt base = inst.weight_cap(i) * 2 - inst.w()[t][static_cast<std::size_t>(i)];
            total += max(base, prior);
        }
    }
    return total;
}

std::vector<StepThreshold> enumerate_thresholds(const WeightedInstance& inst) {
    std::vector<HalfInt> values;
    values.push_back(HalfInt::minus_half());  // erases every point: all weights are >= 0
    for (std::size_t t = 0; t < inst.size(); ++t) values.push_back(inst.omega(t));
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());

    std::vector<StepThreshold> out;
    StepThreshold tuple;
    // descending lexicographic enumeration of non-increasing tuples
    auto rec = [&](auto&& self, std::size_t max_value_index) -> void {
        if (static_cast<int>(tuple.size()) == inst.r()) {
            out.push_back(tuple);
            return;
        }
        for (std::size_t vi = max_value_index + 1; vi-- > 0;) {
            tuple.push_back(values[vi]);
            self(self, vi);
            tuple.pop_back();
        }
    };
    rec(rec, values.size() - 1);
    return out;
}

std::vector<int> threshold_multiplicities(const WeightedInstance& inst, const StepThreshold& theta) {
    if (static_cast<int>(theta.size()) != inst.r())
        throw std::invalid_argument("threshold arity must equal r");
    for (std::size_t i = 1; i < theta.size(); ++i)
        if (theta[i] > theta[i - 1]) throw std::invalid_argument("threshold must be non-increasing");
    std::vector<int> svec(inst.size(), 0);
    for (std::size_t t = 0; t < inst.size(); ++t) {
        HalfInt om = inst.omega(t);
        int keep = 0;
        while (keep < inst.r() && om <= theta[static_cast<std::size_t>(keep)]) ++keep;
        svec[t] = keep;
    }
    return svec;
}

UniPoly decode(const WeightedInstance& inst) {
    const UniPoly zero(inst.modulus(), {});
    for (const StepThreshold& theta : enumerate_thresholds(inst)) {
        std::vector<int> svec = threshold_multiplicities(inst, theta);
        std::int64_t retained = std::accumulate(svec.begin(), svec.end(), std::int64_t{0});
        UniPoly candidate = zero;
        if (retained > inst.ell()) {
            std::vector<Jet> jets;
            jets.reserve(inst.size());
            for (std::size_t t = 0; t < inst.size(); ++t)
                jets.push_back(inst.g()[t].truncated(svec[t]));
            UniDecodeInstance sub(inst.points(), inst.ell(), svec, std::move(jets));
            auto r = multcode::decode(sub);
            if (r) candidate = *r;
        }
        if (gamma(inst, candidate) < inst.gamma_radius()) return candidate;
    }
    return zero;
}

}  // namespace multcode
