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

#ifndef MAXPLUS_MDARRAY_H_
#define MAXPLUS_MDARRAY_H_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <vector>

#include "maxplus/ext_int.h"

namespace maxplus {

// A point of the integer lattice. Array positions are non-negative, but the
// same vector type carries item weights and right-hand sides.
using Position = std::vector<int64_t>;

// Size vector L = (L_1, ..., L_d) of a d-dimensional array. Every component is
// at least 1 and the entry count fits in 64 bits.
class Shape {
 public:
  Shape() = default;
  explicit Shape(std::vector<int64_t> dims);
  Shape(std::initializer_list<int64_t> dims) : Shape(std::vector<int64_t>(dims)) {}

  int rank() const { return static_cast<int>(dims_.size()); }
  int64_t dim(int i) const { return dims_[i]; }
  const std::vector<int64_t>& dims() const { return dims_; }
  int64_t num_entries() const { return num_entries_; }
  // Linear distance between neighbours along dimension i.
  int64_t stride(int i) const { return strides_[i]; }

  bool Contains(std::span<const int64_t> pos) const;

  friend bool operator==(const Shape& a, const Shape& b) { return a.dims_ == b.dims_; }

 private:
  std::vector<int64_t> dims_;
  std::vector<int64_t> strides_;
  int64_t num_entries_ = 0;
};

// Row-major index with dimension 1 fastest: v_1 + L_1 v_2 + L_1 L_2 v_3 + ...
// Throws InvalidPosition when pos is not a valid position of shape.
int64_t LinearIndex(std::span<const int64_t> pos, const Shape& shape);

// Inverse of LinearIndex.
Position PositionOf(int64_t index, const Shape& shape);

// Iterable over all positions of a shape in increasing linear index order.
class PositionRange {
 public:
  class Iterator {
   public:
    using value_type = Position;
    using difference_type = std::ptrdiff_t;
    using reference = const Position&;
    using pointer = const Position*;
    using iterator_category = std::input_iterator_tag;

    Iterator() = default;
    Iterator(const Shape* shape, bool end);

    reference operator*() const { return pos_; }
    pointer operator->() const { return &pos_; }
    Iterator& operator++();
    Iterator operator++(int) {
      Iterator copy = *this;
      ++*this;
      return copy;
    }
    friend bool operator==(const Iterator& a, const Iterator& b) { return a.index_ == b.index_; }

   private:
    const Shape* shape_ = nullptr;
    Position pos_;
    int64_t index_ = 0;
  };

  explicit PositionRange(const Shape& shape) : shape_(shape) {}
  Iterator begin() const { return Iterator(&shape_, false); }
  Iterator end() const { return Iterator(&shape_, true); }

 private:
  Shape shape_;
};

inline PositionRange Positions(const Shape& shape) { return PositionRange(shape); }

// Dense d-dimensional array of ExtInt. Immutable once built; use
// MDArrayBuilder to assemble one entry at a time.
class MDArray {
 public:
  MDArray() = default;
  MDArray(Shape shape, std::vector<ExtInt> data);
  // Every entry set to fill.
  MDArray(Shape shape, ExtInt fill);

  const Shape& shape() const { return shape_; }
  int rank() const { return shape_.rank(); }
  int64_t size() const { return shape_.num_entries(); }

  ExtInt at(std::span<const int64_t> pos) const { return data_[LinearIndex(pos, shape_)]; }
  ExtInt at(std::initializer_list<int64_t> pos) const {
    return at(std::span<const int64_t>(pos.begin(), pos.size()));
  }
  ExtInt operator[](int64_t linear) const { return data_[linear]; }
  std::span<const ExtInt> data() const { return data_; }

  friend bool operator==(const MDArray& a, const MDArray& b) {
    return a.shape_ == b.shape_ && a.data_ == b.data_;
  }

 private:
  Shape shape_;
  std::vector<ExtInt> data_;
};

class MDArrayBuilder {
 public:
  MDArrayBuilder(Shape shape, ExtInt fill);
  explicit MDArrayBuilder(const MDArray& from);

  const Shape& shape() const { return shape_; }
  ExtInt at(std::span<const int64_t> pos) const { return data_[LinearIndex(pos, shape_)]; }
  ExtInt& at(std::span<const int64_t> pos) { return data_[LinearIndex(pos, shape_)]; }
  ExtInt& operator[](int64_t linear) { return data_[linear]; }
  ExtInt operator[](int64_t linear) const { return data_[linear]; }
  std::span<ExtInt> data() { return data_; }

  void Set(std::span<const int64_t> pos, ExtInt value) { at(pos) = value; }

  MDArray Build() &&;

 private:
  Shape shape_;
  std::vector<ExtInt> data_;
};

// 1-D convenience: finite values, size (values.size()).
MDArray MakeArray1D(std::initializer_list<int64_t> values);
// Finite values listed in linear (dimension 1 fastest) order.
MDArray MakeArray(Shape shape, std::initializer_list<int64_t> values);

// True iff A_v <= A_u for all comparable positions v <= u, checked through
// the d single-step comparisons A_v <= A_{v + e_i}.
bool MonotoneIncreasing(const MDArray& a);

// Largest absolute finite entry (0 for an all-NEG_INF array).
int64_t MaxAbsEntry(const MDArray& a);

}  // namespace maxplus

#endif  // MAXPLUS_MDARRAY_H_
