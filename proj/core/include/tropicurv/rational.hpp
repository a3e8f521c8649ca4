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

#ifndef TROPICURV_RATIONAL_HPP_
#define TROPICURV_RATIONAL_HPP_

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

#include "tropicurv/errors.hpp"

namespace tropicurv {

// Exact rational number, always in lowest terms with a positive
// denominator. Expression templates are disabled so `auto` is safe.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

// Parses "17", "-3/4" or "2.125" exactly. Decimals become exact decimal
// fractions; no binary floating point is involved.
Rational ParseRational(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string ToString(const Rational& r);

// -1, 0 or +1.
int Sign(const Rational& r);

// The exact value k / 2^bits.
Rational Dyadic(std::uint64_t k, unsigned bits);

// Nearest double; only for plotting and reporting.
double ToDouble(const Rational& r);

// Exact conversion of a finite double (every finite double is a dyadic
// rational).
Rational FromDouble(double x);

}  // namespace tropicurv

#endif  // TROPICURV_RATIONAL_HPP_
