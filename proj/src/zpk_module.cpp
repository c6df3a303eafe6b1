#include "headorder/zpk_module.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace headorder {

ZpkRing ZpkRing::make(Int p, Int K) {
  if (p < 2 || K < 1) throw Error(ErrorKind::InvalidArgument, "need p >= 2 and K >= 1");
  return {p, K, ipow(p, K)};
}

Int ZpkRing::mul(Int a, Int b) const {
  return static_cast<Int>((static_cast<__int128>(norm(a)) * norm(b)) % q);
}

Int ZpkRing::val(Int x) const {
  x = norm(x);
  if (x == 0) return K;
  Int v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

Int ZpkRing::pow_p(Int k) const { return k >= K ? 0 : ipow(p, k); }

Int ZpkRing::inv_unit(Int u) const { return inverse_mod(u, q); }

namespace {

// r -= f * s
void axpy(const ZpkRing& R, Row& r, Int f, const Row& s) {
  f = R.norm(f);
  if (f == 0) return;
  for (std::size_t j = 0; j < r.size(); ++j) r[j] = R.norm(r[j] - R.mul(f, s[j]));
}

void scale(const ZpkRing& R, Row& r, Int f) {
  for (Int& x : r) x = R.mul(x, f);
}

bool is_zero(const Row& r) {
  return std::all_of(r.begin(), r.end(), [](Int x) { return x == 0; });
}

}  // namespace

ZpkModule ZpkModule::span(const ZpkRing& ring, std::size_t dim, std::vector<Row> gens) {
  ZpkModule m(ring, dim);
  std::vector<Row> work;
  for (Row& g : gens) {
    if (g.size() != dim) throw Error(ErrorKind::ShapeMismatch, "generator length differs");
    for (Int& x : g) x = ring.norm(x);
    if (!is_zero(g)) work.push_back(std::move(g));
  }

  std::size_t r = 0;
  for (std::size_t col = 0; col < dim && r < work.size(); ++col) {
    std::size_t best = work.size();
    Int best_val = ring.K;
    for (std::size_t i = r; i < work.size(); ++i) {
      const Int v = ring.val(work[i][col]);
      if (v < best_val) {
        best_val = v;
        best = i;
      }
    }
    if (best == work.size()) continue;
    std::swap(work[r], work[best]);
    const Int pv = ring.pow_p(best_val);
    scale(ring, work[r], ring.inv_unit(work[r][col] / pv));
    for (std::size_t i = r + 1; i < work.size(); ++i)
      axpy(ring, work[i], work[i][col] / pv, work[r]);
    // Howell closure: p^{K-v} times the pivot row vanishes in this column.
    Row extra = work[r];
    scale(ring, extra, ring.pow_p(ring.K - best_val));
    if (!is_zero(extra)) work.push_back(std::move(extra));
    m.pivot_col_.push_back(col);
    m.pivot_val_.push_back(best_val);
    ++r;
    // drop rows that became zero to keep the pass short
    std::size_t keep = r;
    for (std::size_t i = r; i < work.size(); ++i)
      if (!is_zero(work[i])) {
        if (keep != i) work[keep] = std::move(work[i]);
        ++keep;
      }
    work.resize(keep);
  }
  work.resize(r);
  for (std::size_t k = 0; k < r; ++k) {
    const Int pv = ring.pow_p(m.pivot_val_[k]);
    for (std::size_t i = 0; i < k; ++i) axpy(ring, work[i], work[i][m.pivot_col_[k]] / pv, work[k]);
  }
  m.rows_ = std::move(work);
  return m;
}

bool ZpkModule::contains(Row x) const {
  if (x.size() != dim_) return false;
  for (Int& v : x) v = ring_.norm(v);
  std::size_t col = 0;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    for (; col < pivot_col_[k]; ++col)
      if (x[col] != 0) return false;
    const Int pv = ring_.pow_p(pivot_val_[k]);
    if (x[col] % pv != 0) return false;
    axpy(ring_, x, x[col] / pv, rows_[k]);
    ++col;
  }
  return is_zero(x);
}

bool ZpkModule::contains(const ZpkModule& other) const {
  if (other.dim_ != dim_ || other.ring_.q != ring_.q) return false;
  return std::all_of(other.rows_.begin(), other.rows_.end(),
                     [&](const Row& r) { return contains(r); });
}

Int ZpkModule::length() const {
  Int total = 0;
  for (Int v : pivot_val_) total += ring_.K - v;
  return total;
}

ZpkModule left_kernel(const ZpkRing& ring, std::vector<Row> c, std::size_t cols) {
  const std::size_t n = c.size();
  std::vector<Row> t(n, Row(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (c[i].size() != cols) throw Error(ErrorKind::ShapeMismatch, "ragged matrix");
    for (Int& x : c[i]) x = ring.norm(x);
    t[i][i] = 1;
  }
  // R C Q = diag(p^{v_0}, ...), tracking R only.
  std::vector<Int> vals;
  for (std::size_t k = 0; k < std::min(n, cols); ++k) {
    std::size_t bi = n, bj = cols;
    Int best = ring.K;
    for (std::size_t i = k; i < n && best > 0; ++i)
      for (std::size_t j = k; j < cols; ++j) {
        const Int v = ring.val(c[i][j]);
        if (v < best) {
          best = v;
          bi = i;
          bj = j;
          if (v == 0) break;
        }
      }
    if (bi == n) break;
    std::swap(c[k], c[bi]);
    std::swap(t[k], t[bi]);
    for (std::size_t i = 0; i < n; ++i) std::swap(c[i][k], c[i][bj]);
    const Int pv = ring.pow_p(best);
    const Int u = ring.inv_unit(c[k][k] / pv);
    scale(ring, c[k], u);
    scale(ring, t[k], u);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Int f = c[i][k] / pv;
      axpy(ring, c[i], f, c[k]);
      axpy(ring, t[i], f, t[k]);
    }
    // column operations only touch row k from here on
    for (std::size_t j = k + 1; j < cols; ++j) c[k][j] = 0;
    vals.push_back(best);
  }
  std::vector<Row> gens;
  for (std::size_t k = 0; k < n; ++k) {
    Row g = t[k];
    if (k < vals.size()) scale(ring, g, ring.pow_p(ring.K - vals[k]));
    gens.push_back(std::move(g));
  }
  return ZpkModule::span(ring, n, std::move(gens));
}

}  // namespace headorder
