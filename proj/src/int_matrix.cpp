#include "headorder/int_matrix.hpp"

#include <algorithm>

namespace headorder {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
  std::vector<std::vector<Int>> r;
  for (const auto& row : rows) r.emplace_back(row);
  *this = from_rows(r);
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
  IntMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw Error(ErrorKind::ShapeMismatch, "matrix is not square");
    }
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<std::vector<Int>> IntMatrix::rows() const {
  std::vector<std::vector<Int>> r(n_, std::vector<Int>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) r[i][j] = (*this)(i, j);
  return r;
}

Int IntMatrix::max_entry() const {
  return data_.empty() ? 0 : *std::max_element(data_.begin(), data_.end());
}

Int IntMatrix::min_entry() const {
  return data_.empty() ? 0 : *std::min_element(data_.begin(), data_.end());
}

IntMatrix IntMatrix::submatrix(const std::vector<std::size_t>& idx) const {
  IntMatrix s(idx.size());
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b) s(a, b) = (*this)(idx[a], idx[b]);
  return s;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j) os << ',';
      os << m(i, j);
    }
    os << ']';
  }
  return os << ']';
}

}  // namespace headorder
