// Copyright 2026 The Scoregame Authors
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

#ifndef SCOREGAME_RATIONAL_H_
#define SCOREGAME_RATIONAL_H_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace scoregame {

// Exact arithmetic is the default throughout; ties such as a posterior of
// exactly 1/2 must be detected without a tolerance.
using Rational = mpq_class;

// Parses "0.35", "-2", "7/20" or "1e-3" into an exact rational. Throws
// GameError(kInvalidParams) on malformed input.
Rational ParseRational(std::string_view text);

// Integer power; exponent 0 yields 1 (so 0^0 == 1).
Rational Pow(const Rational& base, int exponent);

inline Rational Complement(const Rational& x) { return Rational(1 - x); }

inline double ToDouble(const Rational& x) { return x.get_d(); }

// "7/20" style canonical text.
std::string ToFractionString(const Rational& x);

// Shortest decimal rendering with at most 12 significant digits.
std::string FormatDecimal(double value);
inline std::string FormatDecimal(const Rational& x) {
  return FormatDecimal(ToDouble(x));
}

int Sign(const Rational& x);

}  // namespace scoregame

#endif  // SCOREGAME_RATIONAL_H_
