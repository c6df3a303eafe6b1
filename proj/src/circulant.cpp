#include "headorder/circulant.hpp"

#include <algorithm>
#include <string>

namespace headorder {

namespace {

void require_family(std::size_t n, Int b) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be positive");
  if (b < 1 || b >= static_cast<Int>(n)) {
    throw Error(ErrorKind::OutOfRange, "need 0 < b < n, got b = " + std::to_string(b));
  }
}

// n = l0 b + x0 with 0 < x0 <= b.
std::pair<Int, Int> split_positive(Int n, Int b) {
  const Int l0 = (n - 1) / b;
  return {l0, n - l0 * b};
}

// v = (0, value_1^{count_1}, value_2^{count_2}, ...).
class RunBuilder {
 public:
  RunBuilder() : v_{0} {}
  void push(Int value, Int count) {
    for (Int i = 0; i < count; ++i) v_.push_back(value);
  }
  std::vector<Int> take() && { return std::move(v_); }

 private:
  std::vector<Int> v_;
};

void check_length(const std::vector<Int>& v, std::size_t n, const char* what) {
  if (v.size() != n) {
    throw Error(ErrorKind::InvalidArgument, std::string(what) + ": built length " +
                                                std::to_string(v.size()) + " for n = " +
                                                std::to_string(n));
  }
}

}  // namespace

CirculantState CirculantState::make(std::vector<Int> v, DimVector dims, Int depth) {
  if (v.empty()) throw Error(ErrorKind::ShapeMismatch, "empty exponent vector");
  if (dims.size() != v.size()) throw Error(ErrorKind::ShapeMismatch, "dims length differs from n");
  if (v[0] != 0) throw Error(ErrorKind::DiagonalNonzero, "v_0 must be 0");
  for (std::size_t j = 1; j < v.size(); ++j)
    if (v[j] < v[j - 1]) {
      throw Error(ErrorKind::InvalidArgument, "v must be nondecreasing at index " +
                                                  std::to_string(j));
    }
  if (depth < 0 || depth > v.back()) {
    throw Error(ErrorKind::InvalidArgument, "depth must lie in [0, v_{n-1}]");
  }
  CirculantState s(std::move(v), std::move(dims), depth);
  (void)expand(s);  // order invariants
  return s;
}

CirculantState CirculantState::make(std::vector<Int> v, Int depth) {
  DimVector dims(v.size(), 1);
  return make(std::move(v), std::move(dims), depth);
}

ExponentOrder expand(const CirculantState& state) {
  const std::size_t n = state.n();
  const auto& v = state.v();
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = j >= i ? v[j - i] : sub(v[n + j - i], v[n - 1]);
  return validate_order(std::move(m), state.dims());
}

std::optional<CirculantState> circulant_from_order(const ExponentOrder& order, Int depth) {
  const std::size_t n = order.n();
  // u_k = m_1k and wrap constant c with m_ij = u_{n+j-i} - c below the diagonal.
  std::vector<Int> u(n);
  for (std::size_t j = 0; j < n; ++j) u[j] = order(0, j);
  const Int c = n > 1 ? sub(u[n - 1], order(1, 0)) : 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Int expected = j >= i ? u[j - i] : sub(u[n + j - i], c);
      if (order(i, j) != expected) return std::nullopt;
    }
  // Conjugating by diag(π^{i s}) with s = u_{n-1} - c makes the wrap constant
  // equal to the last entry.
  const Int s = n > 1 ? order(1, 0) : 0;
  std::vector<Int> v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = add(u[k], mul(static_cast<Int>(k), s));
  return CirculantState::make(std::move(v), order.dims(), depth);
}

CirculantState circulant_step(const CirculantState& state) {
  const ExponentOrder order = expand(state);
  const std::vector<Int> depth(state.n(), state.depth());
  const ExponentOrder next = glued_idealizer(order, radical_unreduced(order), depth);
  auto s = circulant_from_order(next, std::max<Int>(state.depth() - 1, 0));
  if (!s) throw Error(ErrorKind::InvalidArgument, "idealizer lost circulant symmetry");
  return *s;
}

std::vector<CirculantState> circulant_chain(std::size_t n, Int a, const DimVector& dims,
                                            std::optional<std::size_t> max_steps) {
  if (n < 1 || a < 1) throw Error(ErrorKind::InvalidArgument, "need n >= 1 and a >= 1");
  std::vector<Int> v(n, a);
  v[0] = 0;
  std::vector<CirculantState> chain{CirculantState::make(std::move(v), dims, a)};
  const std::size_t budget = max_steps.value_or(10 * (n + static_cast<std::size_t>(a)));
  for (std::size_t step = 0; step <= budget; ++step) {
    CirculantState next = circulant_step(chain.back());
    if (next == chain.back()) return chain;
    chain.push_back(std::move(next));
  }
  throw Error(ErrorKind::StepBudgetExceeded,
              "no fixed point within " + std::to_string(budget) + " steps");
}

ChainParameters chain_parameters(std::size_t n, Int a) {
  if (n < 1 || a < 1) throw Error(ErrorKind::InvalidArgument, "need n >= 1 and a >= 1");
  ChainParameters p;
  const Int nn = static_cast<Int>(n);
  p.n = n;
  p.a = a;
  p.z = a / nn;
  p.b = a % nn;
  p.m0 = add(mul(p.z, nn), 1);
  if (p.b > 0) {
    std::tie(p.l0, p.x0) = split_positive(nn, p.b);
    p.m1 = nn - p.l0 - 1 + p.m0;
    if (p.x0 < p.b) p.m2 = 2 * p.x0 >= p.b ? p.b - p.x0 - 1 : p.x0 - 1;
  }
  return p;
}

InitialReduction initial_reduction(std::size_t n, Int a, const DimVector& dims) {
  const ChainParameters p = chain_parameters(n, a);
  std::vector<Int> v(n, p.b);
  v[0] = 0;
  return {CirculantState::make(std::move(v), dims, p.b),
          static_cast<std::size_t>(p.m0 - 1), p.b, p.b == 0};
}

CirculantState anfang_state(std::size_t n, Int b, Int m, const DimVector& dims) {
  require_family(n, b);
  const Int nn = static_cast<Int>(n);
  const auto [l0, x0] = split_positive(nn, b);
  if (m < 0 || m >= nn - l0) {
    throw Error(ErrorKind::OutOfRange, "need 0 <= m < n - l0 = " + std::to_string(nn - l0));
  }
  const Int depth = std::max<Int>(0, b - m - 1);
  std::vector<Int> v(n, b);
  v[0] = 0;
  if (m == 0) return CirculantState::make(std::move(v), dims, b - 1);

  // m = l (b - 1) + y with 0 <= y < b - 1
  const Int l = m / (b - 1);
  const Int y = m % (b - 1);
  for (Int j = 1; j < nn; ++j) {
    if (j <= (b - y - 1) * l) {
      v[j] = floor_div(j - 1, l) + 1;
    } else if (j <= (b - 1) * l + y) {
      v[j] = b - y + floor_div(j - 1 - (b - y - 1) * l, l + 1);
    } else {
      v[j] = b;
    }
  }
  return CirculantState::make(std::move(v), dims, depth);
}

Defm1 defm1_state(std::size_t n, Int b, const DimVector& dims) {
  require_family(n, b);
  const auto [l0, x0] = split_positive(static_cast<Int>(n), b);
  const Int y = x0 - 1;
  RunBuilder runs;
  for (Int k = 1; k <= b - y - 1; ++k) runs.push(k, l0);
  for (Int k = b - y; k <= b - 1; ++k) runs.push(k, l0 + 1);
  runs.push(b, l0);
  std::vector<Int> v = std::move(runs).take();
  check_length(v, n, "defm1");
  return {CirculantState::make(std::move(v), dims, 0), static_cast<Int>(n) - l0 - 1};
}

SpotState spot_state(std::size_t n, Int b, const DimVector& dims) {
  require_family(n, b);
  const auto [l0, x0] = split_positive(static_cast<Int>(n), b);
  if (x0 >= b) throw Error(ErrorKind::OutOfRange, "spot state needs b not dividing n");
  RunBuilder runs;
  SpotState out{CirculantState::make(std::vector<Int>{0}), 0, 0};
  if (2 * x0 >= b) {
    out.m2 = b - x0 - 1;
    out.z = 2 * b - 2 * x0 - 1;
    for (Int k = 1; k <= out.z; ++k) runs.push(k, k % 2 == 1 ? l0 : l0 + 1);
    for (Int k = out.z + 1; k <= b - 1; ++k) runs.push(k, l0 + 1);
  } else {
    out.m2 = x0 - 1;
    out.z = b - 2 * x0 + 1;
    for (Int k = 1; k <= out.z; ++k) runs.push(k, l0);
    for (Int k = out.z + 1; k <= b - 1; ++k) runs.push(k, (k - out.z) % 2 == 1 ? l0 + 1 : l0);
  }
  runs.push(b, l0);
  std::vector<Int> v = std::move(runs).take();
  check_length(v, n, "spot state");
  out.state = CirculantState::make(std::move(v), dims, 0);
  return out;
}

CirculantState head_order_w(std::size_t n, Int b, const DimVector& dims) {
  require_family(n, b);
  const auto [l0, x0] = split_positive(static_cast<Int>(n), b);
  if (x0 == b) {
    throw Error(ErrorKind::OutOfRange, "b divides n; the head is the defm1 form");
  }
  RunBuilder runs;
  Int prev = 0;
  for (Int j = 1; j <= b; ++j) {
    const Int aj = floor_div(x0 * j, b);
    runs.push(j, j == b ? l0 : l0 + (aj - prev));
    prev = aj;
  }
  std::vector<Int> v = std::move(runs).take();
  check_length(v, n, "head_order_w");
  return CirculantState::make(std::move(v), dims, 0);
}

Int head_f(std::size_t n, Int a, Int j) {
  const Int nn = static_cast<Int>(n);
  const Int b = mod(a, nn);
  if (b == 0) throw Error(ErrorKind::OutOfRange, "f(j) needs a mod n != 0");
  const Int l = nn / b;
  const Int x = nn % b;
  return 1 + floor_div(sub(sub(j, 1), floor_div(mul(x, j), nn)), l);
}

ExponentOrder head_order_f(std::size_t n, Int a, const DimVector& dims) {
  if (n < 1 || a < 1) throw Error(ErrorKind::InvalidArgument, "need n >= 1 and a >= 1");
  IntMatrix m(n);
  if (a % static_cast<Int>(n) != 0) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        m(i, j) = head_f(n, a, static_cast<Int>(j) - static_cast<Int>(i));
  }
  return validate_order(std::move(m), dims);
}

CirculantState closed_form_head(std::size_t n, Int a, const DimVector& dims) {
  const ChainParameters p = chain_parameters(n, a);
  if (p.b == 0) return CirculantState::make(std::vector<Int>(n, 0), dims, 0);
  if (p.x0 == p.b) return defm1_state(n, p.b, dims).state;
  return head_order_w(n, p.b, dims);
}

HeadProperties check_head_properties(const std::vector<Int>& w, Int b) {
  HeadProperties r;
  const Int n = static_cast<Int>(w.size());
  auto W = [&](Int idx) { return w.at(static_cast<std::size_t>(idx)); };
  for (Int i = 1; i <= n; ++i)
    for (Int j = i + 1; j <= n; ++j)
      for (Int k = j + 1; k <= n; ++k) {
        const Int mid1 = W(k - i) - W(j - i);
        if (!(b - W(n + j - k) <= mid1 && mid1 <= W(k - j))) r.triangle_i = false;
        const Int mid2 = W(k - j) - W(n + i - j) + b;
        if (!(b - W(n + i - k) <= mid2 && mid2 <= W(k - i))) r.triangle_ii = false;
        const Int mid3 = W(n + j - k) - W(n + i - k);
        if (!(b - W(n + i - j) <= mid3 && mid3 <= W(j - i))) r.triangle_iii = false;
      }
  for (Int j = 2; j <= n; ++j) {
    const Int h = W(j - 1) + W(n + 1 - j) - b;
    if (h != 0 && h != 1) r.hereditary = false;
  }
  const Int l0 = (n - 1) / b;
  for (Int k = 1; k <= l0; ++k) {
    if (W(k) != 1) r.boundary = false;
    if (W(n - k) != b) r.boundary = false;
  }
  if (n - l0 - 1 < 0 || W(n - l0 - 1) != b - 1) r.boundary = false;
  return r;
}

std::vector<Int> head_step_pattern(const std::vector<Int>& w, Int b) {
  const Int n = static_cast<Int>(w.size());
  const Int l0 = (n - 1) / b;
  std::vector<Int> e(static_cast<std::size_t>(b), 0);
  for (Int k = 1; k < b; ++k)
    e[k - 1] = static_cast<Int>(std::count(w.begin(), w.end(), k)) - l0;
  e[b - 1] = 1;
  return e;
}

Main2Type main2_type(std::size_t n, Int a, const DimVector& dims,
                     const std::vector<std::size_t>& sigma) {
  if (n < 1 || a < 1) throw Error(ErrorKind::InvalidArgument, "need n >= 1 and a >= 1");
  if (sigma.size() != n || dims.size() != n) {
    throw Error(ErrorKind::ShapeMismatch, "sigma and dims must have length n");
  }
  // single n-cycle through label 0
  std::vector<bool> seen(n, false);
  std::size_t cur = 0, len = 0;
  do {
    if (cur >= n || seen[cur]) throw Error(ErrorKind::NotACycle, "sigma is not a permutation");
    seen[cur] = true;
    cur = sigma[cur];
    ++len;
  } while (cur != 0);
  if (len != n) {
    throw Error(ErrorKind::NotACycle, "sigma has a cycle of length " + std::to_string(len) +
                                          " through label 0, expected " + std::to_string(n));
  }
  auto power = [&](std::size_t label, Int k) {
    for (Int s = 0; s < k; ++s) label = sigma[label];
    return label;
  };

  Main2Type out;
  const Int nn = static_cast<Int>(n);
  out.d = gcd(nn, a);
  out.t = nn / out.d;
  out.c = inverse_mod(a / out.d, out.t);
  std::size_t start = 0;
  for (Int block = 0; block < out.t; ++block) {
    std::vector<std::size_t> orbit;
    Int sum = 0;
    std::size_t label = start;
    for (Int l = 0; l < out.d; ++l) {
      orbit.push_back(label);
      sum = add(sum, dims[label]);
      label = power(label, out.t);
    }
    out.grouped_dims.push_back(sum);
    out.block_labels.push_back(std::move(orbit));
    start = power(start, out.c);
  }
  return out;
}

SimpleModuleMatch simple_module_match(std::size_t n, Int a) {
  if (n < 1 || a < 1) throw Error(ErrorKind::InvalidArgument, "need n >= 1 and a >= 1");
  SimpleModuleMatch out;
  const Int nn = static_cast<Int>(n);
  out.d = gcd(nn, a);
  out.n_prime = nn / out.d;
  out.c = inverse_mod(a / out.d, out.n_prime);
  out.fibers.resize(static_cast<std::size_t>(out.n_prime));
  for (Int j = 0; j < out.n_prime; ++j) {
    const Int target = mod(out.c * j, out.n_prime);
    for (Int i = 0; i < nn; ++i)
      if (i % out.n_prime == target) out.fibers[j].push_back(i);
  }
  return out;
}

std::vector<Checkpoint> family_checkpoints(std::size_t n, Int a, const DimVector& dims) {
  const ChainParameters p = chain_parameters(n, a);
  std::vector<Checkpoint> out;
  const InitialReduction red = initial_reduction(n, a, dims);
  out.push_back({red.step, "redb", red.state});
  if (p.b == 0 || n < 2) return out;
  const Int nn = static_cast<Int>(n);
  for (Int m = 0; m < nn - p.l0; ++m) {
    out.push_back({static_cast<std::size_t>(p.m0 + m), "anfang:" + std::to_string(m),
                   anfang_state(n, p.b, m, dims)});
  }
  out.push_back({static_cast<std::size_t>(p.m1), "defm1", defm1_state(n, p.b, dims).state});
  if (p.m2) {
    out.push_back({static_cast<std::size_t>(p.m1 + *p.m2), "spot", spot_state(n, p.b, dims).state});
  }
  return out;
}

const CirculantState& state_at(const std::vector<CirculantState>& chain, std::size_t step) {
  if (chain.empty()) throw Error(ErrorKind::InvalidArgument, "empty chain");
  return step < chain.size() ? chain[step] : chain.back();
}

}  // namespace headorder
