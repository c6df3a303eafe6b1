#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <vector>

#include "headorder/integer.hpp"

namespace headorder {

// Dense square integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n, Int fill = 0) : n_(n), data_(n * n, fill) {}
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

  std::size_t size() const noexcept { return n_; }
  Int operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  Int& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }

  std::vector<std::vector<Int>> rows() const;
  Int max_entry() const;
  Int min_entry() const;

  // Principal submatrix on the given indices, in the given order.
  IntMatrix submatrix(const std::vector<std::size_t>& idx) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Int> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

}  // namespace headorder
