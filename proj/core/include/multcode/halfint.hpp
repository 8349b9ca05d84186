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

#include <compare>
#include <cstdint>
#include <ostream>

namespace multcode {

/// Exact half-integer, stored as twice its value. Decoding radii, weight
/// caps and the weighted distance are half-integers compared strictly, so
/// everything stays in integer arithmetic.
class HalfInt {
  public:
    constexpr HalfInt() : twice_(0) {}

    static constexpr HalfInt from_int(std::int64_t v) { return HalfInt(2 * v); }
    static constexpr HalfInt from_twice(std::int64_t t) { return HalfInt(t); }
    static constexpr HalfInt half() { return HalfInt(1); }
    static constexpr HalfInt minus_half() { return HalfInt(-1); }

    constexpr std::int64_t twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }

    constexpr HalfInt operator+(HalfInt rhs) const { return HalfInt(twice_ + rhs.twice_); }
    constexpr HalfInt operator-(HalfInt rhs) const { return HalfInt(twice_ - rhs.twice_); }
    constexpr HalfInt operator-() const { return HalfInt(-twice_); }
    constexpr HalfInt& operator+=(HalfInt rhs) {
        twice_ += rhs.twice_;
        return *this;
    }
    constexpr HalfInt& operator-=(HalfInt rhs) {
        twice_ -= rhs.twice_;
        return *this;
    }
    /// Scaling by an integer keeps the value an exact half-integer.
    constexpr HalfInt operator*(std::int64_t k) const { return HalfInt(twice_ * k); }

    constexpr auto operator<=>(const HalfInt&) const = default;

    friend std::ostream& operator<<(std::ostream& os, HalfInt h) {
        if (h.is_integer()) return os << h.twice_ / 2;
        std::int64_t t = h.twice_;
        if (t < 0) {
            os << '-';
            t = -t;
        }
        return os << t / 2 << ".5";
    }

  private:
    explicit constexpr HalfInt(std::int64_t t) : twice_(t) {}
    std::int64_t twice_;
};

inline constexpr HalfInt min(HalfInt a, HalfInt b) { return a < b ? a : b; }
inline constexpr HalfInt max(HalfInt a, HalfInt b) { return a < b ? b : a; }

}  // namespace multcode
