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
#include <stdexcept>

namespace multcode {

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

class FieldElement;

/// Prime field GF(p) for 2 <= p < 2^62. The modulus is primality-checked at
/// construction; elements carry the modulus so mixed-field arithmetic is
/// caught at runtime.
class PrimeField {
  public:
    static constexpr std::uint64_t max_modulus = (std::uint64_t(1) << 62) - 1;

    explicit PrimeField(std::uint64_t p);

    std::uint64_t modulus() const { return p_; }

    FieldElement element(std::uint64_t v) const;
    FieldElement element_signed(std::int64_t v) const;
    FieldElement zero() const;
    FieldElement one() const;

    bool operator==(const PrimeField& rhs) const { return p_ == rhs.p_; }
    bool operator!=(const PrimeField& rhs) const { return p_ != rhs.p_; }

  private:
    std::uint64_t p_;
};

/// Canonical representative in [0, p). Arithmetic reduces after every
/// operation; operands from different fields throw.
class FieldElement {
  public:
    FieldElement() : v_(0), p_(0) {}
    FieldElement(std::uint64_t value, std::uint64_t modulus) : v_(value % modulus), p_(modulus) {}

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    FieldElement operator+(const FieldElement& rhs) const {
        check_same(rhs);
        std::uint64_t s = v_ + rhs.v_;
        if (s >= p_) s -= p_;
        return raw(s, p_);
    }

    FieldElement operator-(const FieldElement& rhs) const {
        check_same(rhs);
        std::uint64_t s = (v_ >= rhs.v_) ? v_ - rhs.v_ : v_ + p_ - rhs.v_;
        return raw(s, p_);
    }

    FieldElement operator*(const FieldElement& rhs) const {
        check_same(rhs);
        unsigned __int128 prod = static_cast<unsigned __int128>(v_) * rhs.v_;
        return raw(static_cast<std::uint64_t>(prod % p_), p_);
    }

    FieldElement operator-() const {
        require_valid();
        return raw(v_ == 0 ? 0 : p_ - v_, p_);
    }

    /// Multiplicative inverse by extended Euclid; throws on zero.
    FieldElement inv() const;

    FieldElement operator/(const FieldElement& rhs) const { return *this * rhs.inv(); }

    FieldElement& operator+=(const FieldElement& rhs) { return *this = *this + rhs; }
    FieldElement& operator-=(const FieldElement& rhs) { return *this = *this - rhs; }
    FieldElement& operator*=(const FieldElement& rhs) { return *this = *this * rhs; }

    bool operator==(const FieldElement& rhs) const { return p_ == rhs.p_ && v_ == rhs.v_; }
    bool operator!=(const FieldElement& rhs) const { return !(*this == rhs); }

  private:
    static FieldElement raw(std::uint64_t v, std::uint64_t p) {
        FieldElement e;
        e.v_ = v;
        e.p_ = p;
        return e;
    }

    void require_valid() const {
        if (p_ == 0) throw std::invalid_argument("operation on default-constructed field element");
    }

    void check_same(const FieldElement& rhs) const {
        require_valid();
        if (p_ != rhs.p_) throw std::invalid_argument("mixed-field operands");
    }

    std::uint64_t v_;
    std::uint64_t p_;
};

inline FieldElement PrimeField::element(std::uint64_t v) const { return FieldElement(v, p_); }

inline FieldElement PrimeField::element_signed(std::int64_t v) const {
    std::int64_t m = v % static_cast<std::int64_t>(p_);
    if (m < 0) m += static_cast<std::int64_t>(p_);
    return FieldElement(static_cast<std::uint64_t>(m), p_);
}

inline FieldElement PrimeField::zero() const { return FieldElement(0, p_); }
inline FieldElement PrimeField::one() const { return FieldElement(1 % p_, p_); }

}  // namespace multcode
