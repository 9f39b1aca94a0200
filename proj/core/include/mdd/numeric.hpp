// Copyright 2026 The mdd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace mdd {

/// Valuation outputs are natural numbers; signed so that differences
/// v(S) - w(S) stay in the same type.
using Value = std::int64_t;

/// Exact rationals (probabilities, prices, ratios, matching weights).
using Rational = mpq_class;
using BigInt = mpz_class;

/// Default guard for every 2^m enumeration loop.
inline constexpr std::size_t kDefaultEnumCap = 16;
/// Default lottery-support cap for the MDMDP linear program.
inline constexpr std::size_t kDefaultLpCap = 10;

/// An argument violates an operation's precondition.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A 2^m enumeration was requested above the configured cap.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::string_view what, std::size_t size, std::size_t cap);
  std::size_t size() const { return size_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t size_;
  std::size_t cap_;
};

/// Integer overflow in exact value arithmetic.
class ArithmeticOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Throws CapExceeded when `size > cap`.
void require_within_cap(std::string_view what, std::size_t size, std::size_t cap);

Value checked_add(Value a, Value b);
Value checked_mul(Value a, Value b);

/// Parses "p", "-p" or "p/q" into a canonical rational.
Rational parse_rational(std::string_view text);
/// Canonical "p/q" (or "p" when q == 1).
std::string to_string(const Rational& r);

/// Smallest integer >= r.
BigInt ceil(const Rational& r);

inline Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// SplitMix64 finalizer; used to derive independent per-trial seeds.
std::uint64_t mix_seed(std::uint64_t x);

/// Unbiased draw from [0, bound) independent of the standard library's
/// distribution implementation, so transcripts reproduce across platforms.
template <typename Engine>
std::uint64_t uniform_below(Engine& engine, std::uint64_t bound) {
  if (bound == 0) throw InvalidArgument("uniform_below: empty range");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  for (;;) {
    const std::uint64_t x = engine();
    if (x < limit) return x % bound;
  }
}

}  // namespace mdd
