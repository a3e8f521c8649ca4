// Copyright 2026 The tropicurv Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tropicurv/rational.hpp"

#include <cctype>
#include <cmath>
#include <string>

namespace tropicurv {
namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

BigInt ParseInteger(std::string_view s, std::string_view whole) {
  if (!AllDigits(s)) {
    throw ParseError("malformed number '" + std::string(whole) + "'");
  }
  return BigInt(std::string(s));
}

}  // namespace

Rational ParseRational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw ParseError("empty number");

  bool negative = false;
  if (s.front() == '-' || s.front() == '+') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    BigInt num = ParseInteger(s.substr(0, slash), text);
    BigInt den = ParseInteger(s.substr(slash + 1), text);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    value = Rational(num, den);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = s.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) {
      throw ParseError("malformed number '" + std::string(text) + "'");
    }
    BigInt whole = int_part.empty() ? BigInt(0) : ParseInteger(int_part, text);
    BigInt frac = frac_part.empty() ? BigInt(0) : ParseInteger(frac_part, text);
    BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac_part.size()));
    value = Rational(whole * scale + frac, scale);
  } else {
    value = Rational(ParseInteger(s, text));
  }
  return negative ? Rational(-value) : value;
}

std::string ToString(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

int Sign(const Rational& r) { return r.sign(); }

Rational Dyadic(std::uint64_t k, unsigned bits) {
  BigInt den = BigInt(1) << bits;
  return Rational(BigInt(k), den);
}

double ToDouble(const Rational& r) { return r.convert_to<double>(); }

Rational FromDouble(double x) {
  if (!std::isfinite(x)) throw DomainError("non-finite value cannot be made exact");
  int exponent = 0;
  double mantissa = std::frexp(x, &exponent);
  // mantissa * 2^53 is an exact integer for every finite double.
  auto scaled = static_cast<std::int64_t>(std::ldexp(mantissa, 53));
  exponent -= 53;
  Rational r{BigInt(scaled)};
  if (exponent >= 0) {
    r *= Rational(BigInt(1) << exponent);
  } else {
    r /= Rational(BigInt(1) << (-exponent));
  }
  return r;
}

}  // namespace tropicurv
