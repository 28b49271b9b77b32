// Copyright 2026 The rodcone Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RODCONE_FIELD_HPP_
#define RODCONE_FIELD_HPP_

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace rodcone {

__extension__ using UInt128 = unsigned __int128;

/// Integers modulo a prime below 2^63.
template <std::uint64_t Modulus>
class PrimeField {
 public:
  static constexpr std::uint64_t kModulus = Modulus;

  constexpr PrimeField() = default;
  constexpr PrimeField(std::int64_t v)  // NOLINT(google-explicit-constructor)
      : value_(reduce_signed(v)) {}

  static constexpr PrimeField from_raw(std::uint64_t raw) {
    PrimeField f;
    f.value_ = raw % Modulus;
    return f;
  }

  constexpr std::uint64_t value() const { return value_; }
  constexpr bool is_zero() const { return value_ == 0; }

  friend constexpr PrimeField operator+(PrimeField a, PrimeField b) {
    std::uint64_t s = a.value_ + b.value_;
    return from_raw(s >= Modulus ? s - Modulus : s);
  }
  friend constexpr PrimeField operator-(PrimeField a, PrimeField b) {
    return from_raw(a.value_ >= b.value_ ? a.value_ - b.value_ : a.value_ + Modulus - b.value_);
  }
  friend constexpr PrimeField operator-(PrimeField a) { return PrimeField{} - a; }
  friend constexpr PrimeField operator*(PrimeField a, PrimeField b) {
    UInt128 p = static_cast<UInt128>(a.value_) * b.value_;
    return from_raw(static_cast<std::uint64_t>(p % Modulus));
  }
  friend PrimeField operator/(PrimeField a, PrimeField b) { return a * b.inverse(); }

  PrimeField& operator+=(PrimeField o) { return *this = *this + o; }
  PrimeField& operator-=(PrimeField o) { return *this = *this - o; }
  PrimeField& operator*=(PrimeField o) { return *this = *this * o; }
  PrimeField& operator/=(PrimeField o) { return *this = *this / o; }

  friend constexpr bool operator==(PrimeField a, PrimeField b) { return a.value_ == b.value_; }

  PrimeField inverse() const {
    if (value_ == 0) throw std::domain_error("division by zero in prime field");
    return pow(Modulus - 2);
  }

  PrimeField pow(std::uint64_t e) const {
    PrimeField base = *this;
    PrimeField acc = from_raw(1);
    while (e) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

 private:
  static constexpr std::uint64_t reduce_signed(std::int64_t v) {
    if (v >= 0) return static_cast<std::uint64_t>(v) % Modulus;
    std::uint64_t m = static_cast<std::uint64_t>(-(v + 1)) % Modulus;  // |v| - 1
    return Modulus - 1 - m;
  }

  std::uint64_t value_ = 0;
};

/// The default field: 2^61 - 1.
using Zp = PrimeField<(std::uint64_t{1} << 61) - 1>;
/// Independent second prime, 2^62 - 57.
using Zq = PrimeField<(std::uint64_t{1} << 62) - 57>;

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Per-field hooks used by the realization sampler and serializers.
template <class F>
struct FieldTraits;

template <std::uint64_t M>
struct FieldTraits<PrimeField<M>> {
  static constexpr bool kExact = true;
  static constexpr const char* kName = "zp";
  static bool is_zero(const PrimeField<M>& x) { return x.is_zero(); }
  // Uniform on [1, p-1].
  static PrimeField<M> random(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(1, M - 1);
    return PrimeField<M>::from_raw(dist(rng));
  }
  static std::string to_string(const PrimeField<M>& x) { return std::to_string(x.value()); }
  static PrimeField<M> from_rational(const Rational& q) {
    return reduce(boost::multiprecision::numerator(q)) /
           reduce(boost::multiprecision::denominator(q));
  }
  static PrimeField<M> reduce(const BigInt& n) {
    BigInt r = n % BigInt(M);
    if (r < 0) r += M;
    return PrimeField<M>::from_raw(r.template convert_to<std::uint64_t>());
  }
};

template <>
struct FieldTraits<Rational> {
  static constexpr bool kExact = true;
  static constexpr const char* kName = "rational";
  static bool is_zero(const Rational& x) { return x == 0; }
  // Nonzero integers in [-2^12, 2^12]; keeps sampled realizations drawable.
  static Rational random(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dist(1, 1 << 12);
    std::bernoulli_distribution sign(0.5);
    int v = dist(rng);
    return Rational(sign(rng) ? -v : v);
  }
  static std::string to_string(const Rational& x) { return x.str(); }
  static Rational from_rational(const Rational& q) { return q; }
};

/// Parses "a", "-a" or "a/b" into a rational. Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

}  // namespace rodcone

#endif  // RODCONE_FIELD_HPP_
