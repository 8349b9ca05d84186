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
#include <optional>
#include <utility>
#include <vector>

#include "multcode/mcode.hpp"
#include "multcode/poly.hpp"

namespace multcode {

/// One decoding problem for the univariate multiplicity code with a
/// point-varying multiplicity vector: recover R of degree <= e from jets
/// h_a known to order svec(a) at each a. Points with svec(a) = 0 are
/// erasures and impose no constraints.
///
/// Derived quantities: N = sum svec(a) and the interpolation degree bound
/// D = floor((N+e)/2) + 1. Instances with N <= e are rejected (the
/// decoding radius (N-e)/2 would be vacuous, so such a call is a caller
/// bug rather than a decodable problem).
class UniDecodeInstance {
  public:
    /// Points may arrive in any order and are sorted by representative;
    /// jets of order above svec are truncated down to it.
    UniDecodeInstance(std::vector<FieldElement> points, std::int64_t degree_bound,
                      std::vector<int> svec, std::vector<Jet> jets);

    std::size_t size() const { return points_.size(); }
    const std::vector<FieldElement>& points() const { return points_; }
    const std::vector<int>& svec() const { return svec_; }
    const std::vector<Jet>& jets() const { return jets_; }
    std::int64_t degree_bound() const { return e_; }
    std::int64_t total_multiplicity() const { return n_total_; }
    std::int64_t interp_degree() const { return d_interp_; }
    std::uint64_t modulus() const { return p_; }

  private:
    std::uint64_t p_;
    std::vector<FieldElement> points_;
    std::vector<int> svec_;
    std::vector<Jet> jets_;
    std::int64_t e_;
    std::int64_t n_total_;   // N
    std::int64_t d_interp_;  // D
};

/// The interpolation step: a nonzero Q(x,y) = B0(x) + y B1(x) with
/// deg B0 < D, deg B1 < D - e and B0(a+z) + h_a(z) B1(a+z) = 0 mod
/// z^svec(a) at every point. The linear system always has a nonzero
/// kernel and every nonzero solution has B1 != 0; violating either is an
/// internal error, not a decoding failure.
std::pair<UniPoly, UniPoly> interpolate(const UniDecodeInstance& inst);

/// Full decoder: returns the unique R of degree <= e with
/// 2 delta_mult(h, Enc(R)) < N - e if it exists, nullopt otherwise. Never
/// returns a polynomial failing that strict check.
std::optional<UniPoly> decode(const UniDecodeInstance& inst);

/// Encoding against a multiplicity vector: jet of order svec[i] at each
/// point (an order-0 jet at erased points).
std::vector<Jet> encode_varying(const UniPoly& r, std::span<const FieldElement> points,
                                std::span<const int> svec);

}  // namespace multcode
