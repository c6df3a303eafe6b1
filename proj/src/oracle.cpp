#include "headorder/oracle.hpp"

#include <algorithm>
#include <string>

namespace headorder {

namespace {

using Matrix = std::vector<Row>;

Matrix mat_mul(const Matrix& a, const Matrix& b, Int m) {
  const std::size_t n = a.size();
  Matrix c(n, Row(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Int x = a[i][k];
      if (x == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] = (c[i][j] + x * b[k][j]) % m;
    }
  return c;
}

Int trace_of_power(Matrix base, Int e, Int m) {
  const std::size_t n = base.size();
  Matrix acc(n, Row(n, 0));
  for (std::size_t i = 0; i < n; ++i) acc[i][i] = 1 % m;
  while (e > 0) {
    if (e & 1) acc = mat_mul(acc, base, m);
    e >>= 1;
    if (e > 0) base = mat_mul(base, base, m);
  }
  Int t = 0;
  for (std::size_t i = 0; i < n; ++i) t = (t + acc[i][i]) % m;
  return t;
}

// x * b_j in coordinates mod p
Row right_times(const FiniteAlgebraModel& m, const Row& x, std::size_t j, Int p) {
  Row z(m.rank(), 0);
  for (std::size_t a = 0; a < x.size(); ++a) {
    if (x[a] == 0) continue;
    const Row& prod = m.mult[a][j];
    for (std::size_t t = 0; t < z.size(); ++t) z[t] = (z[t] + x[a] * prod[t]) % p;
  }
  return z;
}

Row left_times(const FiniteAlgebraModel& m, std::size_t j, const Row& x, Int p) {
  Row z(m.rank(), 0);
  for (std::size_t a = 0; a < x.size(); ++a) {
    if (x[a] == 0) continue;
    const Row& prod = m.mult[j][a];
    for (std::size_t t = 0; t < z.size(); ++t) z[t] = (z[t] + x[a] * prod[t]) % p;
  }
  return z;
}

Row mul_mod(const FiniteAlgebraModel& m, const Row& x, const Row& y, Int p) {
  Row z(m.rank(), 0);
  for (std::size_t j = 0; j < y.size(); ++j) {
    if (y[j] == 0) continue;
    const Row t = right_times(m, x, j, p);
    for (std::size_t k = 0; k < z.size(); ++k) z[k] = (z[k] + y[j] * t[k]) % p;
  }
  return z;
}

void sanity_check(const FiniteAlgebraModel& m, const std::vector<Row>& jbar, Int p) {
  const ZpkRing fp = ZpkRing::make(p, 1);
  const std::size_t n = m.rank();
  const ZpkModule J = ZpkModule::span(fp, n, jbar);
  for (const Row& u : J.rows())
    for (std::size_t j = 0; j < n; ++j)
      if (!J.contains(right_times(m, u, j, p)) || !J.contains(left_times(m, j, u, p))) {
        throw Error(ErrorKind::InvalidArgument, "oracle radical is not an ideal");
      }
  ZpkModule power = J;
  for (std::size_t step = 0; step <= n && !power.rows().empty(); ++step) {
    std::vector<Row> gens;
    for (const Row& x : power.rows())
      for (const Row& y : J.rows()) gens.push_back(mul_mod(m, x, y, p));
    power = ZpkModule::span(fp, n, std::move(gens));
  }
  if (!power.rows().empty()) throw Error(ErrorKind::InvalidArgument, "oracle radical is not nilpotent");
}

}  // namespace

std::vector<Row> radical_mod_p(const FiniteAlgebraModel& m) {
  const Int p = m.ring.p;
  const std::size_t n = m.rank();
  const ZpkRing fp = ZpkRing::make(p, 1);

  // left regular representation mod p: reg[a][k][j] = coefficient of b_k in b_a b_j
  std::vector<Matrix> reg(n, Matrix(n, Row(n, 0)));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) reg[a][k][j] = m.mult[a][j][k] % p;

  Int levels = 0;  // largest l with p^l <= n
  for (Int pw = p; pw <= static_cast<Int>(n); pw *= p) ++levels;

  std::vector<Row> basis;
  for (std::size_t i = 0; i < n; ++i) {
    Row e(n, 0);
    e[i] = 1;
    basis.push_back(std::move(e));
  }
  for (Int i = 0; i <= levels && !basis.empty(); ++i) {
    const Int pi = ipow(p, i);
    const Int mod_i = pi * p;
    std::vector<Row> g(basis.size(), Row(n, 0));
    for (std::size_t k = 0; k < basis.size(); ++k)
      for (std::size_t j = 0; j < n; ++j) {
        const Row z = right_times(m, basis[k], j, p);
        Matrix lift(n, Row(n, 0));
        for (std::size_t a = 0; a < n; ++a) {
          if (z[a] == 0) continue;
          for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) lift[r][c] = (lift[r][c] + z[a] * reg[a][r][c]) % mod_i;
        }
        const Int t = trace_of_power(std::move(lift), pi, mod_i);
        if (t % pi != 0) {
          throw Error(ErrorKind::InvalidArgument,
                      "trace of p^" + std::to_string(i) + "-th power not divisible");
        }
        g[k][j] = t / pi;
      }
    const ZpkModule ker = left_kernel(fp, std::move(g), n);
    std::vector<Row> next;
    for (const Row& c : ker.rows()) {
      Row x(n, 0);
      for (std::size_t k = 0; k < c.size(); ++k)
        for (std::size_t t = 0; t < n; ++t) x[t] = (x[t] + c[k] * basis[k][t]) % p;
      next.push_back(std::move(x));
    }
    basis = ZpkModule::span(fp, n, std::move(next)).rows();
  }
  sanity_check(m, basis, p);
  return basis;
}

ZpkModule oracle_radical(const FiniteAlgebraModel& m) {
  const std::vector<Row> jbar = radical_mod_p(m);
  std::vector<Row> gens;
  for (const Row& u : jbar) gens.push_back(m.embed(u));
  for (std::size_t k = 0; k < m.rank(); ++k) {
    Row e(m.rank(), 0);
    e[k] = m.ring.p;
    gens.push_back(m.embed(e));
  }
  return ZpkModule::span(m.ring, m.basis.layout().dim, std::move(gens));
}

ZpkModule oracle_idealizer(const FiniteAlgebraModel& m, const ZpkModule& ideal, Int shift) {
  const ZpkRing& R = m.ring;
  const AmbientLayout& lay = m.basis.layout();
  const std::size_t N = lay.dim;
  const Int ps = R.pow_p(shift);

  // annihilator of p^shift J: {h : x.h = 0 for all x in p^shift J}
  std::vector<Row> qcols(N, Row(ideal.rows().size(), 0));
  for (std::size_t r = 0; r < ideal.rows().size(); ++r)
    for (std::size_t i = 0; i < N; ++i) qcols[i][r] = R.mul(ps, ideal.rows()[r][i]);
  const ZpkModule ann = left_kernel(R, std::move(qcols), ideal.rows().size());

  const std::size_t cols = 2 * ideal.rows().size() * ann.rows().size();
  std::vector<Row> cond(N, Row(cols, 0));
  std::size_t col = 0;
  for (const Row& j : ideal.rows())
    for (const Row& h : ann.rows()) {
      for (std::size_t c = 0; c < lay.sizes.size(); ++c) {
        const std::size_t d = static_cast<std::size_t>(lay.sizes[c]);
        for (std::size_t a = 0; a < d; ++a)
          for (std::size_t g = 0; g < d; ++g)
            for (std::size_t b = 0; b < d; ++b) {
              const Int hv = h[lay.index(c, a, b)];
              if (hv == 0) continue;
              // (y j)_{ab} = sum_g y_{ag} j_{gb};  (j y)_{ab} = sum_g j_{ag} y_{gb}
              Int& left = cond[lay.index(c, a, g)][col];
              left = R.norm(left + R.mul(j[lay.index(c, g, b)], hv));
              Int& right = cond[lay.index(c, g, b)][col + 1];
              right = R.norm(right + R.mul(j[lay.index(c, a, g)], hv));
            }
      }
      col += 2;
    }
  return left_kernel(R, std::move(cond), cols);
}

std::vector<IntMatrix> read_exponents(const ZpkModule& module, const std::vector<DimVector>& dims,
                                      Int shift) {
  std::vector<Int> sizes;
  for (const DimVector& d : dims) {
    Int t = 0;
    for (Int x : d) t += x;
    sizes.push_back(t);
  }
  const AmbientLayout lay = AmbientLayout::make(sizes);
  const ZpkRing& R = module.ring();
  std::vector<IntMatrix> out;
  for (std::size_t c = 0; c < dims.size(); ++c) {
    const DimVector& d = dims[c];
    IntMatrix m(d.size());
    std::size_t ro = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
      std::size_t co = 0;
      for (std::size_t j = 0; j < d.size(); ++j) {
        Int best = R.K;
        for (const Row& row : module.rows())
          for (std::size_t a = 0; a < static_cast<std::size_t>(d[i]); ++a)
            for (std::size_t b = 0; b < static_cast<std::size_t>(d[j]); ++b)
              best = std::min(best, R.val(row[lay.index(c, ro + a, co + b)]));
        m(i, j) = best - shift;
        co += static_cast<std::size_t>(d[j]);
      }
      ro += static_cast<std::size_t>(d[i]);
    }
    out.push_back(std::move(m));
  }
  return out;
}

Int default_truncation(const AmalgamBlock& block) {
  return 2 * conductor(nonnegative_frame(block)) + 2;
}

Certificate certify_step(const AmalgamBlock& block, Int p, std::optional<Int> K) {
  require_oracle_scope(block);
  const AmalgamBlock frame = nonnegative_frame(block);
  const Int c = conductor(frame);
  const Int shift = c + 1;
  const Int kmin = 2 * c + 2;
  const Int k = K.value_or(kmin);
  if (k < kmin) {
    throw Error(ErrorKind::TruncationTooSmall,
                "K = " + std::to_string(k) + " but the idealizer needs " + std::to_string(kmin));
  }
  const FiniteAlgebraModel model = model_from_lattice(order_lattice(frame), p, k);
  const ZpkRing& R = model.ring;

  Certificate cert;
  cert.p = p;
  cert.K = k;
  cert.rank = model.rank();

  const ZpkModule j_oracle = oracle_radical(model);
  const ZpkModule j_formula = LatticeBasis::make(radical_lattice(frame), p).module(R);
  cert.radical_agrees = j_oracle.contains(j_formula) && j_formula.contains(j_oracle);

  const ZpkModule id_oracle = oracle_idealizer(model, j_oracle, shift);
  const AmalgamBlock next = amalgam_idealizer_step(frame);
  const ZpkModule id_formula = LatticeBasis::make(order_lattice(next, shift), p).module(R);
  cert.idealizer_agrees = id_oracle.contains(id_formula) && id_formula.contains(id_oracle);
  cert.contains_order = id_oracle.contains(LatticeBasis::make(order_lattice(frame, shift), p).module(R));

  std::vector<DimVector> dims;
  for (const AmalgamComponent& comp : next.components()) {
    dims.push_back(comp.order.dims());
    cert.predicted.push_back(comp.order.matrix());
  }
  cert.observed = read_exponents(id_oracle, dims, shift);
  return cert;
}

Certificate certify_order(const ExponentOrder& order, Int p, std::optional<Int> K) {
  return certify_step(AmalgamBlock::make({{order, false}}, {}), p, K);
}

}  // namespace headorder
