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

#include "maxplus/maxconv.h"

#include <algorithm>
#include <string>

#include "maxplus/parallel.h"

namespace maxplus {
namespace {

using Wide = __int128;

struct FiniteEntry {
  Position pos;
  ExtInt value;
};

std::vector<FiniteEntry> FiniteEntries(const MDArray& a) {
  std::vector<FiniteEntry> out;
  int64_t linear = 0;
  for (const Position& v : Positions(a.shape())) {
    if (a[linear].is_finite()) out.push_back({v, a[linear]});
    ++linear;
  }
  return out;
}

void CheckSameRank(const MDArray& a, const MDArray& b) {
  if (a.rank() != b.rank()) throw ShapeError("arrays have different dimensions");
}

// Leftmost row minima of a matrix whose leftmost minima move right (weakly)
// as the row index grows. The rows are first, first + step, ... (count of
// them); the columns are scratch[cols_begin, cols_end). Each level appends its
// reduced column list to `scratch`, which must have room for every level.
// `result[row]` receives the minimizing column.
template <typename Lookup>
void SmawkRowMinima(int64_t first, int64_t step, int64_t count, size_t cols_begin,
                    size_t cols_end, const Lookup& lookup, std::vector<int64_t>& scratch,
                    std::vector<int64_t>& result) {
  if (count == 0) return;
  const size_t kept_begin = scratch.size();
  for (size_t k = cols_begin; k < cols_end; ++k) {
    const int64_t c = scratch[k];
    while (scratch.size() > kept_begin) {
      const int64_t row = first + step * static_cast<int64_t>(scratch.size() - kept_begin - 1);
      if (lookup(row, scratch.back()) <= lookup(row, c)) break;
      scratch.pop_back();
    }
    if (static_cast<int64_t>(scratch.size() - kept_begin) != count) scratch.push_back(c);
  }
  const size_t kept_end = scratch.size();
  SmawkRowMinima(first + step, 2 * step, count / 2, kept_begin, kept_end, lookup, scratch, result);
  scratch.resize(kept_end);

  size_t c = kept_begin;
  for (int64_t k = 0; k < count; k += 2) {
    const int64_t row = first + step * k;
    const int64_t last = k + 1 < count ? result[row + step] : scratch[kept_end - 1];
    int64_t best = scratch[c];
    Wide best_value = lookup(row, best);
    while (scratch[c] != last) {
      ++c;
      const Wide value = lookup(row, scratch[c]);
      if (value < best_value) {
        best = scratch[c];
        best_value = value;
      }
    }
    result[row] = best;
  }
}

}  // namespace

MDArray ConvNaive(const MDArray& a, const MDArray& b, const Shape& out_shape) {
  CheckSameRank(a, b);
  if (out_shape.rank() != a.rank()) throw ShapeError("output rank differs from inputs");
  const int d = a.rank();
  for (int i = 0; i < d; ++i) {
    if (out_shape.dim(i) > a.shape().dim(i) + b.shape().dim(i) - 1) {
      throw ShapeError("output shape exceeds a.size + b.size - 1");
    }
  }
  const std::vector<FiniteEntry> fa = FiniteEntries(a);
  const std::vector<FiniteEntry> fb = FiniteEntries(b);

  auto out_index = [&](const Position& p, int64_t& index) {
    index = 0;
    for (int i = 0; i < d; ++i) {
      if (p[i] >= out_shape.dim(i)) return false;
      index += p[i] * out_shape.stride(i);
    }
    return true;
  };
  // Offsets of every operand entry inside the output, or -1 when it lies
  // outside on its own.
  std::vector<int64_t> ia(fa.size()), ib(fb.size());
  for (size_t k = 0; k < fa.size(); ++k) {
    if (!out_index(fa[k].pos, ia[k])) ia[k] = -1;
  }
  for (size_t k = 0; k < fb.size(); ++k) {
    if (!out_index(fb[k].pos, ib[k])) ib[k] = -1;
  }

  const int threads = ThreadCount();
  std::vector<std::vector<ExtInt>> partial(threads);
  ParallelChunks(static_cast<int64_t>(fa.size()), [&](int t, int64_t begin, int64_t end) {
    std::vector<ExtInt>& out = partial[t];
    out.assign(out_shape.num_entries(), kNegInf);
    for (int64_t ka = begin; ka < end; ++ka) {
      if (ia[ka] < 0) continue;
      const Position& u = fa[ka].pos;
      for (size_t kb = 0; kb < fb.size(); ++kb) {
        if (ib[kb] < 0) continue;
        const Position& w = fb[kb].pos;
        bool inside = true;
        for (int i = 0; i < d; ++i) {
          if (u[i] + w[i] >= out_shape.dim(i)) {
            inside = false;
            break;
          }
        }
        if (!inside) continue;
        ExtInt& slot = out[ia[ka] + ib[kb]];
        slot = Max(slot, fa[ka].value + fb[kb].value);
      }
    }
  });
  std::vector<ExtInt> result = std::move(partial[0]);
  if (result.empty()) result.assign(out_shape.num_entries(), kNegInf);
  for (int t = 1; t < threads; ++t) {
    if (partial[t].empty()) continue;
    for (size_t k = 0; k < result.size(); ++k) result[k] = Max(result[k], partial[t][k]);
  }
  return MDArray(out_shape, std::move(result));
}

MDArray ConvNaive(const MDArray& a, const MDArray& b) {
  if (!(a.shape() == b.shape())) throw ShapeError("truncated convolution needs equal sizes");
  return ConvNaive(a, b, a.shape());
}

Sequence Conv1DNaive(std::span<const ExtInt> r, std::span<const ExtInt> a, int64_t out_len) {
  if (out_len < 0) throw ShapeError("negative output length");
  Sequence c(out_len, kNegInf);
  std::vector<int64_t> fr, fa;
  for (int64_t i = 0; i < static_cast<int64_t>(r.size()) && i < out_len; ++i) {
    if (r[i].is_finite()) fr.push_back(i);
  }
  for (int64_t k = 0; k < static_cast<int64_t>(a.size()) && k < out_len; ++k) {
    if (a[k].is_finite()) fa.push_back(k);
  }
  for (int64_t i : fr) {
    for (int64_t k : fa) {
      if (i + k >= out_len) break;
      c[i + k] = Max(c[i + k], r[i] + a[k]);
    }
  }
  return c;
}

KroneckerLayout KroneckerLayoutFor(const Shape& shape) {
  KroneckerLayout layout;
  layout.strides.resize(shape.rank());
  int64_t stride = 1;
  int64_t last = 0;
  for (int i = 0; i < shape.rank(); ++i) {
    layout.strides[i] = stride;
    last = CheckedAdd(last, CheckedMul(shape.dim(i) - 1, stride));
    stride = CheckedMul(stride, 2 * shape.dim(i) - 1);
  }
  layout.padded_length = CheckedAdd(last, 1);
  return layout;
}

int64_t KroneckerIndex(std::span<const int64_t> pos, const KroneckerLayout& layout) {
  if (pos.size() != layout.strides.size()) throw InvalidPosition("rank mismatch");
  int64_t index = 0;
  for (size_t i = 0; i < pos.size(); ++i) index += pos[i] * layout.strides[i];
  return index;
}

MDArray ConvViaLinearization(const MDArray& a, const MDArray& b, const Conv1DEngine& engine) {
  if (!(a.shape() == b.shape())) throw ShapeError("linearized convolution needs equal sizes");
  const Shape& shape = a.shape();
  const KroneckerLayout layout = KroneckerLayoutFor(shape);

  std::vector<int64_t> embed(shape.num_entries());
  int64_t linear = 0;
  for (const Position& v : Positions(shape)) embed[linear++] = KroneckerIndex(v, layout);

  Sequence la(layout.padded_length, kNegInf), lb(layout.padded_length, kNegInf);
  for (int64_t k = 0; k < shape.num_entries(); ++k) {
    la[embed[k]] = a[k];
    lb[embed[k]] = b[k];
  }
  const Sequence lc = engine(la, lb, layout.padded_length);
  if (static_cast<int64_t>(lc.size()) < layout.padded_length) {
    throw ShapeError("1-D engine returned a short result");
  }
  std::vector<ExtInt> out(shape.num_entries());
  for (int64_t k = 0; k < shape.num_entries(); ++k) out[k] = lc[embed[k]];
  return MDArray(shape, std::move(out));
}

bool IsConcaveWithInfiniteEnds(std::span<const ExtInt> a) {
  const int64_t n = static_cast<int64_t>(a.size());
  int64_t lo = 0;
  while (lo < n && !a[lo].is_finite()) ++lo;
  int64_t hi = n - 1;
  while (hi >= lo && !a[hi].is_finite()) --hi;
  for (int64_t i = lo; i <= hi; ++i) {
    if (!a[i].is_finite()) return false;
  }
  for (int64_t i = lo; i + 2 <= hi; ++i) {
    const Wide d1 = static_cast<Wide>(a[i + 1].raw()) - a[i].raw();
    const Wide d2 = static_cast<Wide>(a[i + 2].raw()) - a[i + 1].raw();
    if (d1 < d2) return false;
  }
  return true;
}

Sequence Conv1DConcave(std::span<const ExtInt> r, std::span<const ExtInt> a, int64_t out_len,
                       ConcavityCheck check) {
  if (out_len < 0) throw ShapeError("negative output length");
  if (!r.empty() && !a.empty() && out_len > static_cast<int64_t>(r.size() + a.size()) - 1) {
    throw ShapeError("out_len exceeds |r| + |a| - 1");
  }
  bool validate = check == ConcavityCheck::kAlways;
#ifndef NDEBUG
  validate = validate || check == ConcavityCheck::kDebugOnly;
#endif
  if (validate && !IsConcaveWithInfiniteEnds(a)) {
    throw NonConcaveInput("second operand is not concave on its finite support");
  }

  Sequence c(out_len, kNegInf);
  const int64_t n = static_cast<int64_t>(a.size());
  int64_t lo = 0;
  while (lo < n && !a[lo].is_finite()) ++lo;
  if (lo == n) return c;
  int64_t hi = n - 1;
  while (!a[hi].is_finite()) --hi;
  const int64_t m = hi - lo + 1;
  const ExtInt* core = a.data() + lo;

  // Row j' stands for output j' + lo; only columns that can reach a row matter.
  const int64_t rows_count = out_len - lo;
  if (rows_count <= 0) return c;
  std::vector<int64_t> cols;
  for (int64_t i = 0; i < static_cast<int64_t>(r.size()) && i < rows_count; ++i) {
    if (r[i].is_finite()) cols.push_back(i);
  }
  if (cols.empty()) return c;

  Wide r_min = r[cols[0]].raw(), r_max = r_min;
  for (int64_t i : cols) {
    r_min = std::min<Wide>(r_min, r[i].raw());
    r_max = std::max<Wide>(r_max, r[i].raw());
  }
  Wide a_min = core[0].raw(), a_max = a_min;
  for (int64_t t = 0; t < m; ++t) {
    a_min = std::min<Wide>(a_min, core[t].raw());
    a_max = std::max<Wide>(a_max, core[t].raw());
  }
  // Outside [0, m) the sequence continues with slope +-penalty, which keeps it
  // concave and makes every out-of-band entry lose against any in-band one.
  const Wide penalty = (r_max - r_min) + (a_max - a_min) + 1;
  auto extended = [&](int64_t t) -> Wide {
    if (t < 0) return static_cast<Wide>(core[0].raw()) + penalty * t;
    if (t >= m) return static_cast<Wide>(core[m - 1].raw()) - penalty * (t - m + 1);
    return core[t].raw();
  };
  // Negated so the row maxima become leftmost row minima of a Monge matrix.
  auto lookup = [&](int64_t row, int64_t col) -> Wide {
    return -(static_cast<Wide>(r[col].raw()) + extended(row - col));
  };

  // Level k keeps at most ceil(rows_count / 2^k) columns, so the scratch
  // never reallocates.
  const size_t columns = cols.size();
  cols.reserve(columns + 2 * static_cast<size_t>(rows_count) + 64);
  std::vector<int64_t> argmax(rows_count, -1);
  SmawkRowMinima(0, 1, rows_count, 0, columns, lookup, cols, argmax);

  for (int64_t j = 0; j < rows_count; ++j) {
    const int64_t i = argmax[j];
    const int64_t t = j - i;
    if (t >= 0 && t < m) c[j + lo] = r[i] + core[t];
  }
  return c;
}

bool UpperBoundCheckNaive(const MDArray& a, const MDArray& b, const MDArray& c) {
  if (!(a.shape() == b.shape()) || !(a.shape() == c.shape())) {
    throw ShapeError("upper bound check needs equal sizes");
  }
  const Shape& s = a.shape();
  const int d = s.rank();
  const std::vector<FiniteEntry> fa = FiniteEntries(a);
  const std::vector<FiniteEntry> fb = FiniteEntries(b);
  std::vector<int64_t> ia(fa.size()), ib(fb.size());
  for (size_t k = 0; k < fa.size(); ++k) ia[k] = LinearIndex(fa[k].pos, s);
  for (size_t k = 0; k < fb.size(); ++k) ib[k] = LinearIndex(fb[k].pos, s);
  for (size_t ka = 0; ka < fa.size(); ++ka) {
    const Position& u = fa[ka].pos;
    for (size_t kb = 0; kb < fb.size(); ++kb) {
      const Position& w = fb[kb].pos;
      bool inside = true;
      for (int i = 0; i < d; ++i) {
        if (u[i] + w[i] >= s.dim(i)) {
          inside = false;
          break;
        }
      }
      if (!inside) continue;
      const ExtInt bound = c[ia[ka] + ib[kb]];
      if (static_cast<Wide>(fa[ka].value.raw()) + fb[kb].value.raw() >
          (bound.is_finite() ? static_cast<Wide>(bound.raw()) : -(static_cast<Wide>(1) << 100))) {
        return false;
      }
    }
  }
  return true;
}

bool SuperadditiveCheckNaive(const MDArray& a) { return UpperBoundCheckNaive(a, a, a); }

}  // namespace maxplus
