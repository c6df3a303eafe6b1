#pragma once

#include <cstddef>
#include <vector>

#include "headorder/integer.hpp"

namespace headorder {

/// Arithmetic in Z/p^K.
struct ZpkRing {
  Int p = 2;
  Int K = 1;
  Int q = 2;  // p^K

  static ZpkRing make(Int p, Int K);

  Int norm(Int x) const { return mod(x, q); }
  Int mul(Int a, Int b) const;
  // Valuation of a residue; K for 0.
  Int val(Int x) const;
  Int pow_p(Int k) const;  // p^k mod q (0 for k >= K)
  Int inv_unit(Int u) const;
};

using Row = std::vector<Int>;

/// Submodule of (Z/p^K)^dim held in Howell form, which is canonical and makes
/// membership a single reduction pass.
class ZpkModule {
 public:
  static ZpkModule span(const ZpkRing& ring, std::size_t dim, std::vector<Row> gens);

  const ZpkRing& ring() const noexcept { return ring_; }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<Row>& rows() const noexcept { return rows_; }

  bool contains(Row x) const;
  bool contains(const ZpkModule& other) const;
  // log_p of the number of elements.
  Int length() const;

  friend bool operator==(const ZpkModule& a, const ZpkModule& b) {
    return a.dim_ == b.dim_ && a.ring_.q == b.ring_.q && a.rows_ == b.rows_;
  }

 private:
  ZpkModule(ZpkRing r, std::size_t d) : ring_(r), dim_(d) {}

  ZpkRing ring_;
  std::size_t dim_ = 0;
  std::vector<Row> rows_;
  std::vector<std::size_t> pivot_col_;
  std::vector<Int> pivot_val_;
};

/// {y : y C = 0} for C given by its rows (one per coordinate of y), each of
/// length `cols`.
ZpkModule left_kernel(const ZpkRing& ring, std::vector<Row> c, std::size_t cols);

}  // namespace headorder
