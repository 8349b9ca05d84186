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
#include <vector>

#include "multcode/halfint.hpp"
#include "multcode/poly.hpp"
#include "multcode/unidec.hpp"

namespace multcode {

/// A fractional word plus the parameters of the weighted univariate
/// decoding problem it came from: local degree ell and local multiplicity
/// r (forced to be s - floor((d-ell)/n)) against the global degree d,
/// multiplicity s and dimension m of the enclosing code.
///
/// g maps each point to an order-r jet; w(a,i) is the distrust in the
/// order-i derivative at a, a half-integer in
/// [0, n^(m-1)/2 ((s-i) - (d-ell)/n)].
class WeightedInstance {
  public:
    WeightedInstance(std::vector<FieldElement> points, std::int64_t global_degree, int global_order,
                     int dims, std::int64_t local_degree, int local_order, std::vector<Jet> g,
                     std::vector<std::vector<HalfInt>> w);

    std::size_t size() const { return points_.size(); }
    std::int64_t n() const { return static_cast<std::int64_t>(points_.size()); }
    const std::vector<FieldElement>& points() const { return points_; }
    std::int64_t d() const { return d_; }
    int s() const { return s_; }
    int dims() const { return m_; }
    std::int64_t ell() const { return ell_; }
    int r() const { return r_; }
    const std::vector<Jet>& g() const { return g_; }
    const std::vector<std::vector<HalfInt>>& w() const { return w_; }
    std::uint64_t modulus() const { return p_; }

    /// Weight cap for level i: n^(m-1)/2 ((s-i) - (d-ell)/n).
    HalfInt weight_cap(int level) const;
    /// omega(a) = max_i w(a, i), the distrust of the whole point.
    HalfInt omega(std::size_t point_index) const;
    /// Strict decoding promise: Gamma < n^m/2 (s - d/n).
    HalfInt gamma_radius() const;

  private:
    std::uint64_t p_;
    std::vector<FieldElement> points_;
    std::int64_t d_;
    int s_;
    int m_;
    std::int64_t ell_;
    int r_;
    std::vector<Jet> g_;
    std::vector<std::vector<HalfInt>> w_;
};

/// A non-increasing tuple (theta_0 >= ... >= theta_{r-1}); component i is
/// the largest distrust tolerated when keeping derivative level i.
using StepThreshold = std::vector<HalfInt>;

/// Largest j <= r with g_a = R(a+z) mod z^j.
int agreement_order(const Jet& g_a, const UniPoly& r_poly, const FieldElement& a, int r);

/// The weighted distance between the fractional word and R (deg R <= ell):
/// a point with agreement order i < r contributes
/// max( n^(m-1)((s-i) - (d-ell)/n) - w(a,i), max_{j<i} w(a,j) ), and a
/// fully agreeing point contributes max_{j<r} w(a,j). The maximum over an
/// empty index set is 0.
HalfInt gamma(const WeightedInstance& inst, const UniPoly& r_poly);

/// All non-increasing r-tuples over the observed point distrusts plus the
/// erase-everything sentinel -1/2, in lexicographically descending order
/// (the order decode() tries them in).
std::vector<StepThreshold> enumerate_thresholds(const WeightedInstance& inst);

/// Per threshold, the retained multiplicity of each point:
/// |{ i : omega(a) <= theta_i }|, which is 0 (full erasure) when even
/// theta_0 rejects the point.
std::vector<int> threshold_multiplicities(const WeightedInstance& inst, const StepThreshold& theta);

/// Algorithm: for each step threshold, erase per-point derivative levels,
/// run the varying-multiplicity decoder, and return the first candidate
/// within the strict gamma radius. Returns the zero polynomial when every
/// threshold fails (callers re-validate downstream).
UniPoly decode(const WeightedInstance& inst);

}  // namespace multcode
