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

#include "mdd/numeric.hpp"

#include <cctype>

namespace mdd {

CapExceeded::CapExceeded(std::string_view what, std::size_t size, std::size_t cap)
    : std::runtime_error(std::string(what) + ": size " + std::to_string(size) +
                         " exceeds enumeration cap " + std::to_string(cap)),
      size_(size),
      cap_(cap) {}

void require_within_cap(std::string_view what, std::size_t size, std::size_t cap) {
  if (size > cap) throw CapExceeded(what, size, cap);
}

Value checked_add(Value a, Value b) {
  Value out;
  if (__builtin_add_overflow(a, b, &out)) throw ArithmeticOverflow("value addition overflows int64");
  return out;
}

Value checked_mul(Value a, Value b) {
  Value out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw ArithmeticOverflow("value multiplication overflows int64");
  }
  return out;
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string strip_plus(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return std::string(s);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  if (!is_integer_literal(num)) {
    throw InvalidArgument("not a rational: '" + std::string(text) + "'");
  }
  Rational r;
  if (slash == std::string_view::npos) {
    r = Rational(BigInt(strip_plus(num)));
  } else {
    const auto den = text.substr(slash + 1);
    if (!is_integer_literal(den) || den[0] == '-') {
      throw InvalidArgument("not a rational: '" + std::string(text) + "'");
    }
    const BigInt d(strip_plus(den));
    if (d == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
    r = Rational(BigInt(strip_plus(num)), d);
    r.canonicalize();
  }
  return r;
}

std::string to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_str();
}

BigInt ceil(const Rational& r) {
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return out;
}

std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace mdd
