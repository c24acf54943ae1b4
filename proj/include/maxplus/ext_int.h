// Copyright 2026 The maxplus Authors
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

#ifndef MAXPLUS_EXT_INT_H_
#define MAXPLUS_EXT_INT_H_

#include <algorithm>
#include <cstdint>
#include <limits>
#include <ostream>

#include "maxplus/errors.h"

namespace maxplus {

// Checked 64-bit helpers. All throw ArithmeticOverflow instead of wrapping.
inline int64_t CheckedAdd(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("int64 addition overflow");
  return r;
}

inline int64_t CheckedSub(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow("int64 subtraction overflow");
  return r;
}

inline int64_t CheckedMul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("int64 multiplication overflow");
  return r;
}

// A 64-bit integer extended by a distinguished NEG_INF element.
//
// NEG_INF is absorbing for addition and the identity for max. Finite values
// occupy [INT64_MIN + 1, INT64_MAX]; the remaining bit pattern is reserved for
// the sentinel, so a finite result landing on it counts as overflow.
class ExtInt {
 public:
  constexpr ExtInt() : raw_(kNegInfRaw) {}
  // Implicit on purpose: finite literals read naturally in tables and tests.
  ExtInt(int64_t value) : raw_(value) {  // NOLINT
    if (value == kNegInfRaw) throw ArithmeticOverflow("value collides with the NEG_INF sentinel");
  }

  static constexpr ExtInt NegInf() { return ExtInt(); }

  constexpr bool is_finite() const { return raw_ != kNegInfRaw; }
  constexpr bool is_neg_inf() const { return raw_ == kNegInfRaw; }

  int64_t value() const {
    if (!is_finite()) throw PreconditionViolated("value() on NEG_INF");
    return raw_;
  }
  // Raw representation; NEG_INF compares below every finite value.
  constexpr int64_t raw() const { return raw_; }

  friend ExtInt operator+(ExtInt a, ExtInt b) {
    if (!a.is_finite() || !b.is_finite()) return NegInf();
    int64_t r;
    if (__builtin_add_overflow(a.raw_, b.raw_, &r) || r == kNegInfRaw) {
      throw ArithmeticOverflow("ExtInt addition overflow");
    }
    return FromRaw(r);
  }
  ExtInt& operator+=(ExtInt other) { return *this = *this + other; }

  friend constexpr bool operator==(ExtInt a, ExtInt b) { return a.raw_ == b.raw_; }
  friend constexpr auto operator<=>(ExtInt a, ExtInt b) { return a.raw_ <=> b.raw_; }

  friend std::ostream& operator<<(std::ostream& os, ExtInt v) {
    if (v.is_finite()) return os << v.raw_;
    return os << "NEG_INF";
  }

 private:
  static constexpr int64_t kNegInfRaw = std::numeric_limits<int64_t>::min();
  static constexpr ExtInt FromRaw(int64_t raw) {
    ExtInt e;
    e.raw_ = raw;
    return e;
  }

  int64_t raw_;
};

inline constexpr ExtInt kNegInf = ExtInt::NegInf();

inline ExtInt Max(ExtInt a, ExtInt b) { return a < b ? b : a; }

// 2 * v, NEG_INF stays NEG_INF.
inline ExtInt Double(ExtInt v) { return v + v; }

}  // namespace maxplus

#endif  // MAXPLUS_EXT_INT_H_
