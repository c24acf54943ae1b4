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

#ifndef MAXPLUS_MAXCONV_H_
#define MAXPLUS_MAXCONV_H_

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "maxplus/mdarray.h"

namespace maxplus {

using Sequence = std::vector<ExtInt>;

// A (max,+)-convolution of two arrays cut to out_shape. The truncated problem
// is the special case a.shape() == b.shape() == out_shape.
struct ConvRequest {
  MDArray a;
  MDArray b;
  Shape out_shape;
};

// One-dimensional engine: returns c of length out_len with
// c_j = max_k r_{j-k} + a_k.
using Conv1DEngine =
    std::function<Sequence(std::span<const ExtInt> r, std::span<const ExtInt> a, int64_t out_len)>;

// Checks the upper bound property (A (+) B)_v <= C_v for every v.
using UpperBoundOracle = std::function<bool(const MDArray& a, const MDArray& b, const MDArray& c)>;

// Quadratic reference: every pair of finite entries is combined. Requires
// out_shape <= a.shape + b.shape - 1 componentwise.
MDArray ConvNaive(const MDArray& a, const MDArray& b, const Shape& out_shape);
inline MDArray ConvNaive(const ConvRequest& request) {
  return ConvNaive(request.a, request.b, request.out_shape);
}
// Truncated convolution of two arrays of equal size.
MDArray ConvNaive(const MDArray& a, const MDArray& b);

Sequence Conv1DNaive(std::span<const ExtInt> r, std::span<const ExtInt> a, int64_t out_len);

// Kronecker embedding of a shape L into one dimension. Dimension k+1 advances
// by D(1) * ... * D(k) with D(i) = 2 L_i - 1, which leaves enough gap cells
// that sums of positions never carry into the next dimension.
struct KroneckerLayout {
  std::vector<int64_t> strides;
  // Length of the embedded operand: index of L - 1 plus one.
  int64_t padded_length = 0;
};

KroneckerLayout KroneckerLayoutFor(const Shape& shape);
int64_t KroneckerIndex(std::span<const int64_t> pos, const KroneckerLayout& layout);

// Truncated convolution of two equal-size arrays computed by embedding both in
// one dimension, running `engine`, and reading the result back.
MDArray ConvViaLinearization(const MDArray& a, const MDArray& b,
                             const Conv1DEngine& engine = Conv1DNaive);

enum class ConcavityCheck { kDebugOnly, kAlways, kNever };

// True iff the finite entries of a are contiguous (NEG_INF only as a prefix
// and/or suffix) and their consecutive differences do not increase.
bool IsConcaveWithInfiniteEnds(std::span<const ExtInt> a);

// (max,+)-convolution of an arbitrary sequence r with a concave sequence a in
// O(|r| + |a| + out_len) time, via SMAWK over the Monge matrix
// M[j][i] = r_i + a_{j-i}. Throws NonConcaveInput when validation is enabled
// and a is not concave.
Sequence Conv1DConcave(std::span<const ExtInt> r, std::span<const ExtInt> a, int64_t out_len,
                       ConcavityCheck check = ConcavityCheck::kDebugOnly);

// True iff A_u + B_w <= C_{u+w} for all positions u, w with u + w valid.
bool UpperBoundCheckNaive(const MDArray& a, const MDArray& b, const MDArray& c);

// True iff A_v >= (A (+) A)_v for all v.
bool SuperadditiveCheckNaive(const MDArray& a);

}  // namespace maxplus

#endif  // MAXPLUS_MAXCONV_H_
