#include "headorder/finite_algebra.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <limits>
#include <numeric>
#include <string>

namespace headorder {

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

// Spanning forest of the Diagonal gluing graph on (component, block) pairs.
struct GluingForest {
  std::vector<std::size_t> base;  // first vertex id of each component
  std::vector<std::size_t> parent;
  std::vector<Int> parent_depth;
  std::vector<std::vector<std::size_t>> children;
  std::vector<std::size_t> root;
};

GluingForest gluing_forest(const std::vector<DimVector>& dims,
                           const std::vector<GluingConstraint>& gluings) {
  GluingForest f;
  std::size_t nv = 0;
  for (const DimVector& d : dims) {
    f.base.push_back(nv);
    nv += d.size();
  }
  std::vector<std::vector<std::pair<std::size_t, Int>>> adj(nv);
  std::vector<std::size_t> uf(nv);
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&](std::size_t x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  for (const GluingConstraint& g : gluings) {
    if (g.kind != GluingKind::Diagonal || g.depth <= 0) continue;
    const std::size_t u = f.base.at(g.left.component) + g.left.block;
    const std::size_t v = f.base.at(g.right.component) + g.right.block;
    if (find(u) == find(v)) {
      throw Error(ErrorKind::InvalidArgument, "gluings form a cycle; the oracle needs a forest");
    }
    uf[find(u)] = find(v);
    adj[u].push_back({v, g.depth});
    adj[v].push_back({u, g.depth});
  }
  f.parent.assign(nv, npos);
  f.parent_depth.assign(nv, 0);
  f.children.assign(nv, {});
  f.root.assign(nv, npos);
  for (std::size_t s = 0; s < nv; ++s) {
    if (f.root[s] != npos) continue;
    f.root[s] = s;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      const std::size_t x = queue.front();
      queue.pop_front();
      for (auto [y, depth] : adj[x]) {
        if (f.root[y] != npos) continue;
        f.root[y] = s;
        f.parent[y] = x;
        f.parent_depth[y] = depth;
        f.children[x].push_back(y);
        queue.push_back(y);
      }
    }
  }
  return f;
}

void collect(const GluingForest& f, std::size_t v, std::vector<std::size_t>& out) {
  out.push_back(v);
  for (std::size_t c : f.children[v]) collect(f, c, out);
}

}  // namespace

AmbientLayout AmbientLayout::make(std::vector<Int> sizes) {
  AmbientLayout l;
  l.sizes = std::move(sizes);
  for (Int d : l.sizes) {
    l.offset.push_back(l.dim);
    l.dim += static_cast<std::size_t>(d * d);
  }
  return l;
}

std::size_t AmbientLayout::index(std::size_t c, std::size_t row, std::size_t col) const {
  return offset[c] + row * static_cast<std::size_t>(sizes[c]) + col;
}

Row AmbientLayout::identity() const {
  Row x(dim, 0);
  for (std::size_t c = 0; c < sizes.size(); ++c)
    for (std::size_t i = 0; i < static_cast<std::size_t>(sizes[c]); ++i) x[index(c, i, i)] = 1;
  return x;
}

Row AmbientLayout::multiply(const Row& x, const Row& y) const {
  Row z(dim, 0);
  for (std::size_t c = 0; c < sizes.size(); ++c) {
    const std::size_t d = static_cast<std::size_t>(sizes[c]);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < d; ++k) {
        const Int a = x[index(c, i, k)];
        if (a == 0) continue;
        for (std::size_t j = 0; j < d; ++j)
          z[index(c, i, j)] = add(z[index(c, i, j)], mul(a, y[index(c, k, j)]));
      }
  }
  return z;
}

Row AmbientLayout::multiply(const ZpkRing& ring, const Row& x, const Row& y) const {
  Row z(dim, 0);
  for (std::size_t c = 0; c < sizes.size(); ++c) {
    const std::size_t d = static_cast<std::size_t>(sizes[c]);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < d; ++k) {
        const Int a = x[index(c, i, k)];
        if (a == 0) continue;
        for (std::size_t j = 0; j < d; ++j)
          z[index(c, i, j)] = ring.norm(z[index(c, i, j)] + ring.mul(a, y[index(c, k, j)]));
      }
  }
  return z;
}

void require_oracle_scope(const AmalgamBlock& block) {
  for (std::size_t c = 0; c < block.components().size(); ++c) {
    const AmalgamComponent& comp = block.components()[c];
    if (comp.exceptional || comp.order.ram() != 1) {
      throw Error(ErrorKind::InvalidArgument,
                  "oracle handles unramified ordinary components only (component " +
                      std::to_string(c) + ")");
    }
  }
  for (const GluingConstraint& g : block.gluings())
    if (g.kind != GluingKind::Diagonal) {
      throw Error(ErrorKind::InvalidArgument, "oracle handles Diagonal gluings only");
    }
  std::vector<DimVector> dims;
  for (const AmalgamComponent& comp : block.components()) dims.push_back(comp.order.dims());
  (void)gluing_forest(dims, block.gluings());
}

AmalgamBlock standin_block(const AmalgamBlock& block) {
  const auto& comps = block.components();
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> renamed(comps.size(), none);
  std::vector<AmalgamComponent> out;
  for (std::size_t c = 0; c < comps.size(); ++c)
    if (!comps[c].exceptional) {
      renamed[c] = out.size();
      out.push_back(comps[c]);
    }
  std::vector<GluingConstraint> gluings;
  for (const GluingConstraint& g : block.gluings()) {
    if (g.kind != GluingKind::Diagonal) continue;
    const bool lx = comps[g.left.component].exceptional;
    const bool rx = comps[g.right.component].exceptional;
    if (lx && rx) continue;
    if (!lx && !rx) {
      gluings.push_back({{renamed[g.left.component], g.left.block},
                         {renamed[g.right.component], g.right.block}, g.depth, g.kind});
      continue;
    }
    const BlockRef keep = lx ? g.right : g.left;
    const Int d = comps[keep.component].order.dims()[keep.block];
    gluings.push_back({{renamed[keep.component], keep.block}, {out.size(), 0}, g.depth, g.kind});
    out.push_back({validate_order(IntMatrix(1), {d}), false});
  }
  return AmalgamBlock::make(std::move(out), std::move(gluings));
}

LatticeSpec order_lattice(const AmalgamBlock& block, Int shift) {
  LatticeSpec s;
  for (const AmalgamComponent& c : block.components()) {
    s.dims.push_back(c.order.dims());
    s.exponents.push_back(c.order.matrix());
  }
  s.gluings = block.gluings();
  s.shift = shift;
  return s;
}

LatticeSpec radical_lattice(const AmalgamBlock& block) {
  LatticeSpec s = order_lattice(block);
  for (std::size_t c = 0; c < block.components().size(); ++c)
    s.exponents[c] = radical_unreduced(block.components()[c].order).matrix;
  return s;
}

Int conductor(const AmalgamBlock& block) {
  Int c = block.max_depth();
  for (const AmalgamComponent& comp : block.components())
    c = std::max(c, comp.order.matrix().max_entry());
  return c;
}

AmalgamBlock nonnegative_frame(const AmalgamBlock& block) {
  std::vector<AmalgamComponent> comps;
  for (const AmalgamComponent& c : block.components()) {
    std::vector<Int> shift(c.order.n());
    for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = -c.order(0, i);
    comps.push_back({diag_conjugate(c.order, shift), c.exceptional});
  }
  return AmalgamBlock::make(std::move(comps), block.gluings(), block.params());
}

LatticeBasis LatticeBasis::make(const LatticeSpec& spec, Int p) {
  if (spec.dims.size() != spec.exponents.size()) {
    throw Error(ErrorKind::ShapeMismatch, "one exponent matrix per component");
  }
  LatticeBasis b;
  b.p_ = p;
  std::vector<Int> sizes;
  std::vector<std::vector<std::size_t>> boff;
  for (const DimVector& d : spec.dims) {
    std::vector<std::size_t> o;
    Int total = 0;
    for (Int x : d) {
      o.push_back(static_cast<std::size_t>(total));
      total += x;
    }
    sizes.push_back(total);
    boff.push_back(std::move(o));
  }
  b.layout_ = AmbientLayout::make(sizes);
  const std::size_t N = b.layout_.dim;
  b.owner_.assign(N, npos);
  b.exponent_.assign(N, 0);
  b.parent_.assign(N, npos);

  const GluingForest forest = gluing_forest(spec.dims, spec.gluings);
  auto vertex_of = [&](std::size_t v) {
    std::size_t c = 0;
    while (c + 1 < forest.base.size() && forest.base[c + 1] <= v) ++c;
    return std::pair<std::size_t, std::size_t>{c, v - forest.base[c]};
  };
  auto power = [&](Int e) {
    if (e < 0) throw Error(ErrorKind::InvalidArgument, "lattice is not inside the ambient");
    return ipow(p, e);
  };
  auto add_vector = [&](Row v, std::size_t own, Int e, std::size_t par, std::string label) {
    b.owner_[own] = b.vectors_.size();
    b.exponent_[own] = e;
    b.parent_[own] = par;
    b.vectors_.push_back(std::move(v));
    b.labels_.push_back(std::move(label));
  };

  for (std::size_t c = 0; c < spec.dims.size(); ++c) {
    const DimVector& d = spec.dims[c];
    const IntMatrix& m = spec.exponents[c];
    if (m.size() != d.size()) throw Error(ErrorKind::ShapeMismatch, "exponents differ from dims");
    for (std::size_t i = 0; i < d.size(); ++i)
      for (std::size_t j = 0; j < d.size(); ++j)
        for (std::size_t al = 0; al < static_cast<std::size_t>(d[i]); ++al)
          for (std::size_t be = 0; be < static_cast<std::size_t>(d[j]); ++be) {
            const std::size_t idx = b.layout_.index(c, boff[c][i] + al, boff[c][j] + be);
            const std::string label = std::to_string(c) + ":(" + std::to_string(i + 1) + "," +
                                      std::to_string(j + 1) + ")[" + std::to_string(al + 1) +
                                      "," + std::to_string(be + 1) + "]";
            const std::size_t v = forest.base[c] + i;
            const bool glued = i == j && (forest.root[v] != v || !forest.children[v].empty());
            if (!glued) {
              Row x(N, 0);
              const Int e = add(m(i, j), spec.shift);
              x[idx] = power(e);
              add_vector(std::move(x), idx, e, npos, label);
              continue;
            }
            const auto [rc, ri] = vertex_of(forest.root[v]);
            const Int floor = add(spec.exponents[rc](ri, ri), spec.shift);
            if (add(m(i, i), spec.shift) != floor) {
              throw Error(ErrorKind::InvalidArgument, "glued diagonal blocks need equal exponents");
            }
            std::vector<std::size_t> members;
            collect(forest, v, members);
            auto coord = [&](std::size_t w) {
              const auto [wc, wi] = vertex_of(w);
              return b.layout_.index(wc, boff[wc][wi] + al, boff[wc][wi] + be);
            };
            Row x(N, 0);
            if (forest.root[v] == v) {
              const Int pe = power(floor);
              for (std::size_t w : members) x[coord(w)] = pe;
              add_vector(std::move(x), idx, floor, npos, label + "*");
            } else {
              const Int e = std::max(floor, add(forest.parent_depth[v], spec.shift));
              const Int pe = power(e);
              for (std::size_t w : members) x[coord(w)] = pe;
              add_vector(std::move(x), idx, e, coord(forest.parent[v]), label + "~");
            }
          }
  }
  return b;
}

Row LatticeBasis::coordinates(const Row& x) const {
  if (x.size() != layout_.dim) throw Error(ErrorKind::ShapeMismatch, "vector length");
  Row coords(vectors_.size(), 0);
  for (std::size_t idx = 0; idx < x.size(); ++idx) {
    const Int diff = parent_[idx] == npos ? x[idx] : sub(x[idx], x[parent_[idx]]);
    const Int pe = ipow(p_, exponent_[idx]);
    if (diff % pe != 0) throw Error(ErrorKind::InvalidArgument, "vector is not in the lattice");
    coords[owner_[idx]] = diff / pe;
  }
  return coords;
}

ZpkModule LatticeBasis::module(const ZpkRing& ring) const {
  return ZpkModule::span(ring, layout_.dim, vectors_);
}

Row FiniteAlgebraModel::embed(const Row& coords) const {
  Row x(basis.layout().dim, 0);
  for (std::size_t k = 0; k < coords.size(); ++k) {
    const Int a = ring.norm(coords[k]);
    if (a == 0) continue;
    const Row& v = basis.vectors()[k];
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = ring.norm(x[i] + ring.mul(a, v[i]));
  }
  return x;
}

std::size_t oracle_rank_cap() {
  if (const char* env = std::getenv("IDEALIZER_ORACLE_RANK_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 256;
}

FiniteAlgebraModel model_from_lattice(const LatticeSpec& spec, Int p, Int K) {
  std::size_t rank = 0;
  for (const DimVector& d : spec.dims) {
    const Int D = std::accumulate(d.begin(), d.end(), Int{0});
    rank += static_cast<std::size_t>(D * D);
  }
  if (rank > oracle_rank_cap()) {
    throw Error(ErrorKind::RankCapExceeded, "rank " + std::to_string(rank) + " exceeds cap " +
                                                std::to_string(oracle_rank_cap()));
  }
  FiniteAlgebraModel m{ZpkRing::make(p, K), LatticeBasis::make(spec, p), {}, {}};
  const auto& vecs = m.basis.vectors();
  m.mult.assign(rank, std::vector<Row>(rank));
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < rank; ++j) {
      Row c = m.basis.coordinates(m.basis.layout().multiply(vecs[i], vecs[j]));
      for (Int& x : c) x = m.ring.norm(x);
      m.mult[i][j] = std::move(c);
    }
  m.unit = m.basis.coordinates(m.basis.layout().identity());
  for (Int& x : m.unit) x = m.ring.norm(x);
  return m;
}

FiniteAlgebraModel model_from_amalgam(const AmalgamBlock& block, Int p, Int K) {
  require_oracle_scope(block);
  const AmalgamBlock frame = nonnegative_frame(block);
  const Int c = conductor(frame);
  if (K < c + 2) {
    throw Error(ErrorKind::TruncationTooSmall,
                "K = " + std::to_string(K) + " but at least " + std::to_string(c + 2) + " needed");
  }
  return model_from_lattice(order_lattice(frame), p, K);
}

FiniteAlgebraModel model_from_exponent(const ExponentOrder& order, Int p, Int K) {
  return model_from_amalgam(AmalgamBlock::make({{order, false}}, {}), p, K);
}

ModelCheck check_model(const FiniteAlgebraModel& m) {
  ModelCheck r;
  const std::size_t n = m.rank();
  const ZpkRing& R = m.ring;
  auto times = [&](const Row& x, std::size_t k, bool left) {
    // x * b_k (left = false) or b_k * x (left = true)
    Row z(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      if (x[a] == 0) continue;
      const Row& prod = left ? m.mult[k][a] : m.mult[a][k];
      for (std::size_t t = 0; t < n; ++t) z[t] = R.norm(z[t] + R.mul(x[a], prod[t]));
    }
    return z;
  };
  for (std::size_t i = 0; i < n && r.associative; ++i)
    for (std::size_t j = 0; j < n && r.associative; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (times(m.mult[i][j], k, false) != times(m.mult[j][k], i, true)) {
          r.associative = false;
          break;
        }
  for (std::size_t i = 0; i < n; ++i) {
    Row e(n, 0);
    e[i] = 1;
    if (times(m.unit, i, false) != e || times(m.unit, i, true) != e) r.unital = false;
  }
  return r;
}

}  // namespace headorder
