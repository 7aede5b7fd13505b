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

#include "scoregame/rational.h"

#include <cctype>
#include <cstdio>
#include <string>

#include "scoregame/error.h"

namespace scoregame {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidParams:
      return "InvalidParams";
    case ErrorCode::kMissingStrategyEntry:
      return "MissingStrategyEntry";
    case ErrorCode::kUnsupportedK:
      return "UnsupportedK";
    case ErrorCode::kNoEquilibrium:
      return "NoEquilibrium";
    case ErrorCode::kBadIndex:
      return "BadIndex";
    case ErrorCode::kMalformed:
      return "Malformed";
    case ErrorCode::kScopeTooLarge:
      return "ScopeTooLarge";
    case ErrorCode::kEmptyPopulation:
      return "EmptyPopulation";
    case ErrorCode::kIo:
      return "IoError";
  }
  return "Unknown";
}

namespace {

[[noreturn]] void Malformed(std::string_view text) {
  throw GameError(ErrorCode::kInvalidParams,
                  "not a number: '" + std::string(text) + "'");
}

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  if (text.empty()) Malformed(text);

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Rational num = ParseRational(text.substr(0, slash));
    Rational den = ParseRational(text.substr(slash + 1));
    if (den == 0) Malformed(text);
    return Rational(num / den);
  }

  std::string_view body = text;
  bool negative = false;
  if (body.front() == '+' || body.front() == '-') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  int exponent = 0;
  if (auto e = body.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = body.substr(e + 1);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
      exp_negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (!AllDigits(exp_text) || exp_text.size() > 4) Malformed(text);
    exponent = std::stoi(std::string(exp_text));
    if (exp_negative) exponent = -exponent;
    body = body.substr(0, e);
  }

  std::string digits;
  if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view whole = body.substr(0, dot);
    std::string_view frac = body.substr(dot + 1);
    if (whole.empty() && frac.empty()) Malformed(text);
    if (!whole.empty() && !AllDigits(whole)) Malformed(text);
    if (!frac.empty() && !AllDigits(frac)) Malformed(text);
    digits = std::string(whole) + std::string(frac);
    exponent -= static_cast<int>(frac.size());
  } else {
    if (!AllDigits(body)) Malformed(text);
    digits = std::string(body);
  }

  mpz_class mantissa(digits, 10);
  Rational value(mantissa);
  value *= Pow(Rational(10), exponent);
  if (negative) value = -value;
  value.canonicalize();
  return value;
}

Rational Pow(const Rational& base, int exponent) {
  if (exponent < 0) return Rational(1 / Pow(base, -exponent));
  Rational result = 1;
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

std::string ToFractionString(const Rational& x) { return x.get_str(); }

std::string FormatDecimal(double value) {
  if (value == 0.0) return "0";  // folds -0
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

int Sign(const Rational& x) { return sgn(x); }

}  // namespace scoregame
