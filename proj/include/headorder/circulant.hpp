#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "headorder/exponent_order.hpp"

namespace headorder {

/// Λ(0̲_f, v_1, ..., v_{n-1}): the circulant order with exponents
///   m_ij = v_{j-i}              (j >= i)
///   m_ij = v_{n+j-i} - v_{n-1}  (j <  i)
/// whose diagonal blocks are glued to other components modulo π^f.
class CirculantState {
 public:
  // Validates v_0 = 0, v nondecreasing, 0 <= f <= v_{n-1} and that the
  // expansion is an order.
  static CirculantState make(std::vector<Int> v, DimVector dims, Int depth);
  // Same with all dims equal to 1.
  static CirculantState make(std::vector<Int> v, Int depth = 0);

  std::size_t n() const noexcept { return v_.size(); }
  const std::vector<Int>& v() const noexcept { return v_; }
  const DimVector& dims() const noexcept { return dims_; }
  Int depth() const noexcept { return depth_; }

  friend bool operator==(const CirculantState&, const CirculantState&) = default;

 private:
  CirculantState(std::vector<Int> v, DimVector d, Int f)
      : v_(std::move(v)), dims_(std::move(d)), depth_(f) {}

  std::vector<Int> v_;
  DimVector dims_;
  Int depth_ = 0;
};

// Exponent matrix of the state; the depth is not part of it.
ExponentOrder expand(const CirculantState& state);

// Reads a state off an order with cyclic symmetry up to diagonal conjugation
// (m_{i+1,j+1} = m_ij with a constant wrap correction) and normalizes it by
// diag(1, π^s, π^{2s}, ...); nullopt when the matrix has no such symmetry.
std::optional<CirculantState> circulant_from_order(const ExponentOrder& order, Int depth);

/// One radical idealizer step of the ambient amalgam restricted to this
/// component: the idealizer honours the depth-f gluing on every diagonal
/// block and the depth drops to max(f - 1, 0).
CirculantState circulant_step(const CirculantState& state);

/// Chain from Λ(0̲_a, a^{n-1}) to its fixed point. Element k is Λ_k.
std::vector<CirculantState> circulant_chain(std::size_t n, Int a, const DimVector& dims,
                                            std::optional<std::size_t> max_steps = {});

/// Integer parameters of the family: a = z n + b, n = l0 b + x0 (0 < x0 <= b).
struct ChainParameters {
  std::size_t n = 0;
  Int a = 0;
  Int z = 0;   // a = z n + b
  Int b = 0;   // 0 <= b < n
  Int l0 = 0;  // n = l0 b + x0, meaningful when b > 0
  Int x0 = 0;
  Int m0 = 0;  // z n + 1
  Int m1 = 0;  // n - l0 - 1 + m0, when b > 0
  std::optional<Int> m2;  // m1 + m2 is the spot step, when 0 < x0 < b
};

ChainParameters chain_parameters(std::size_t n, Int a);

struct InitialReduction {
  CirculantState state;  // Λ(0̲_b, b^{n-1})
  std::size_t step = 0;  // z n  (= m0 - 1)
  Int b = 0;
  bool maximal = false;  // b == 0
};

InitialReduction initial_reduction(std::size_t n, Int a, const DimVector& dims);

/// Closed form of Λ_{m0 + m} for 0 <= m < n - l0; depth max(0, b - m - 1).
CirculantState anfang_state(std::size_t n, Int b, Int m, const DimVector& dims);

struct Defm1 {
  CirculantState state;
  Int steps_after_m0 = 0;  // m1 - m0 = n - l0 - 1
};

/// Λ_{m1} = Λ(0, 1^{l0}, ..., (b-y-1)^{l0}, (b-y)^{l0+1}, ..., (b-1)^{l0+1}, b^{l0}),
/// y = x0 - 1.
Defm1 defm1_state(std::size_t n, Int b, const DimVector& dims);

struct SpotState {
  CirculantState state;
  Int m2 = 0;
  Int z = 0;
};

/// The state reached m2 steps after m1 for 0 < x0 < b: m2 = b - x0 - 1 when
/// 2 x0 >= b, otherwise m2 = x0 - 1.
SpotState spot_state(std::size_t n, Int b, const DimVector& dims);

/// Head order w = (0, 1^{l_1}, ..., b^{l_b}) with l_j = l0 + (a_j - a_{j-1}),
/// a_j = floor(x0 j / b), l_b = l0. Requires 1 <= b <= n-1 and b ∤ n.
CirculantState head_order_w(std::size_t n, Int b, const DimVector& dims);

// f(j) = 1 + floor((j - 1 - floor(x j / n)) / l) with n = l b + x, 0 <= x < b.
Int head_f(std::size_t n, Int a, Int j);

/// Head order with m_ij = f(j - i). For b = a mod n == 0 the head is maximal
/// and the zero matrix is returned.
ExponentOrder head_order_f(std::size_t n, Int a, const DimVector& dims);

/// Closed-form head state for any (n, a): maximal for b = 0, the defm1 form
/// for b | n, head_order_w otherwise.
CirculantState closed_form_head(std::size_t n, Int a, const DimVector& dims);

/// Properties of the head order: triangle system, hereditary condition and
/// the boundary condition w_1 = ... = w_{l0} = 1, w_{n-1} = ... = w_{n-l0} = b,
/// w_{n-l0-1} = b - 1.
struct HeadProperties {
  bool triangle_i = true;
  bool triangle_ii = true;
  bool triangle_iii = true;
  bool hereditary = true;
  bool boundary = true;
  bool all() const { return triangle_i && triangle_ii && triangle_iii && hereditary && boundary; }
};

HeadProperties check_head_properties(const std::vector<Int>& w, Int b);

// e = (e_1..e_b) with e_k = l_k - l0 for k < b and e_b = 1.
std::vector<Int> head_step_pattern(const std::vector<Int>& w, Int b);

/// Hereditary description (D_i, D_{γ(i)}, ..., D_{γ^{t-1}(i)}) with
/// D_j = Σ_{l<d} d_{τ^l(j)}, τ = σ^t, γ = σ^c.
struct Main2Type {
  Int d = 0;  // gcd(n, a)
  Int t = 0;  // n / d, the block count
  Int c = 0;  // (a/d)^{-1} mod t
  DimVector grouped_dims;
  std::vector<std::vector<std::size_t>> block_labels;  // τ-orbit of each block
};

/// `sigma` is a permutation of the local labels 0..n-1 which must be a single
/// n-cycle; dims are indexed by label; the start label is 0.
Main2Type main2_type(std::size_t n, Int a, const DimVector& dims,
                     const std::vector<std::size_t>& sigma);

struct SimpleModuleMatch {
  Int n_prime = 0;
  Int d = 0;
  Int c = 0;
  // fibers[j] = ν^{-1}(c j) ⊆ Z/nZ, the labels of the simples restricting
  // into T_j, for j = 0..n'-1. The lattice chain L_1 ⊃ ... ⊃ L_{n'} has
  // L_j / L_{j+1} ≅ T_{j mod n'}.
  std::vector<std::vector<Int>> fibers;
};

SimpleModuleMatch simple_module_match(std::size_t n, Int a);

// Known intermediate states of the chain from Λ(0̲_a, a^{n-1}): "redb" at
// step z n, "anfang:m" at m0 + m, "defm1" at m1 and "spot" at m1 + m2.
struct Checkpoint {
  std::size_t step = 0;
  std::string label;
  CirculantState expected;
};

std::vector<Checkpoint> family_checkpoints(std::size_t n, Int a, const DimVector& dims);

// Λ_step, or the fixed point once the chain has stopped.
const CirculantState& state_at(const std::vector<CirculantState>& chain, std::size_t step);

}  // namespace headorder
