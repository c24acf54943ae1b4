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

#include "maxplus/mdarray.h"

#include <cstdlib>
#include <string>
#include <utility>

namespace maxplus {

Shape::Shape(std::vector<int64_t> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw ShapeError("shape must have at least one dimension");
  strides_.resize(dims_.size());
  int64_t product = 1;
  for (size_t i = 0; i < dims_.size(); ++i) {
    if (dims_[i] < 1) throw ShapeError("shape components must be >= 1");
    strides_[i] = product;
    if (__builtin_mul_overflow(product, dims_[i], &product)) {
      throw ShapeError("shape entry count overflows 64 bits");
    }
  }
  num_entries_ = product;
}

bool Shape::Contains(std::span<const int64_t> pos) const {
  if (pos.size() != dims_.size()) return false;
  for (size_t i = 0; i < dims_.size(); ++i) {
    if (pos[i] < 0 || pos[i] >= dims_[i]) return false;
  }
  return true;
}

int64_t LinearIndex(std::span<const int64_t> pos, const Shape& shape) {
  if (!shape.Contains(pos)) throw InvalidPosition("position outside array bounds");
  int64_t index = 0;
  for (int i = 0; i < shape.rank(); ++i) index += pos[i] * shape.stride(i);
  return index;
}

Position PositionOf(int64_t index, const Shape& shape) {
  if (index < 0 || index >= shape.num_entries()) throw InvalidPosition("linear index out of range");
  Position pos(shape.rank());
  for (int i = 0; i < shape.rank(); ++i) {
    pos[i] = index % shape.dim(i);
    index /= shape.dim(i);
  }
  return pos;
}

PositionRange::Iterator::Iterator(const Shape* shape, bool end)
    : shape_(shape), pos_(shape->rank(), 0), index_(end ? shape->num_entries() : 0) {}

PositionRange::Iterator& PositionRange::Iterator::operator++() {
  ++index_;
  for (int i = 0; i < shape_->rank(); ++i) {
    if (++pos_[i] < shape_->dim(i)) break;
    pos_[i] = 0;
  }
  return *this;
}

MDArray::MDArray(Shape shape, std::vector<ExtInt> data)
    : shape_(std::move(shape)), data_(std::move(data)) {
  if (static_cast<int64_t>(data_.size()) != shape_.num_entries()) {
    throw ShapeError("data length " + std::to_string(data_.size()) + " does not match shape (" +
                     std::to_string(shape_.num_entries()) + " entries)");
  }
}

MDArray::MDArray(Shape shape, ExtInt fill)
    : shape_(std::move(shape)), data_(shape_.num_entries(), fill) {}

MDArrayBuilder::MDArrayBuilder(Shape shape, ExtInt fill)
    : shape_(std::move(shape)), data_(shape_.num_entries(), fill) {}

MDArrayBuilder::MDArrayBuilder(const MDArray& from)
    : shape_(from.shape()), data_(from.data().begin(), from.data().end()) {}

MDArray MDArrayBuilder::Build() && { return MDArray(std::move(shape_), std::move(data_)); }

MDArray MakeArray1D(std::initializer_list<int64_t> values) {
  return MakeArray(Shape{static_cast<int64_t>(values.size())}, values);
}

MDArray MakeArray(Shape shape, std::initializer_list<int64_t> values) {
  std::vector<ExtInt> data(values.begin(), values.end());
  return MDArray(std::move(shape), std::move(data));
}

bool MonotoneIncreasing(const MDArray& a) {
  const Shape& s = a.shape();
  int64_t linear = 0;
  for (const Position& v : Positions(s)) {
    for (int i = 0; i < s.rank(); ++i) {
      if (v[i] + 1 < s.dim(i) && a[linear] > a[linear + s.stride(i)]) return false;
    }
    ++linear;
  }
  return true;
}

int64_t MaxAbsEntry(const MDArray& a) {
  int64_t best = 0;
  for (ExtInt x : a.data()) {
    if (!x.is_finite()) continue;
    best = std::max(best, std::abs(x.raw()));
  }
  return best;
}

}  // namespace maxplus
