#include "headorder/brauer_tree.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace headorder {

namespace {

constexpr Int kUnseen = -1;

bool is_prime(Int p) {
  if (p < 2) return false;
  for (Int q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

std::vector<Int> distances(const PlanarBrauerTree& t) {
  const std::size_t nv = t.edges.size() + 1;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(nv);
  for (std::size_t i = 0; i < t.edges.size(); ++i) {
    adj[t.edges[i].u].push_back({t.edges[i].v, i});
    adj[t.edges[i].v].push_back({t.edges[i].u, i});
  }
  std::vector<Int> dist(nv, kUnseen);
  std::deque<std::size_t> queue{t.exceptional};
  dist[t.exceptional] = 0;
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    for (auto [y, edge] : adj[x]) {
      (void)edge;
      if (dist[y] == kUnseen) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

// Successor of `edge` in the rotation at `vertex`.
std::size_t successor(const PlanarBrauerTree& t, std::size_t vertex, std::size_t edge) {
  const auto& rot = t.rotation[vertex];
  const auto it = std::find(rot.begin(), rot.end(), edge);
  const std::size_t pos = static_cast<std::size_t>(it - rot.begin());
  return rot[(pos + 1) % rot.size()];
}

VertexOrbit orbit_at(const PlanarBrauerTree& t, std::size_t vertex, bool even,
                     const std::vector<std::size_t>& sigma) {
  VertexOrbit o{vertex, even, {}};
  const auto& rot = t.rotation[vertex];
  std::size_t cur = *std::min_element(rot.begin(), rot.end());
  for (std::size_t k = 0; k < rot.size(); ++k) {
    o.edges.push_back(cur);
    cur = sigma[cur];
  }
  return o;
}

DimVector orbit_dims(const PlanarBrauerTree& t, const VertexOrbit& o) {
  DimVector d;
  for (std::size_t i : o.edges) d.push_back(t.edges[i].dim);
  return d;
}

std::size_t position(const VertexOrbit& o, std::size_t edge) {
  return static_cast<std::size_t>(std::find(o.edges.begin(), o.edges.end(), edge) -
                                  o.edges.begin());
}

}  // namespace

void validate_tree(const PlanarBrauerTree& t) {
  const std::size_t ne = t.edges.size();
  if (ne == 0) throw Error(ErrorKind::NotATree, "no edges");
  if (t.e != static_cast<Int>(ne)) {
    throw Error(ErrorKind::InvalidArgument, "e = " + std::to_string(t.e) + " but " +
                                                std::to_string(ne) + " edges given");
  }
  const std::size_t nv = ne + 1;
  if (t.exceptional >= nv) throw Error(ErrorKind::NotATree, "exceptional vertex out of range");
  for (std::size_t i = 0; i < ne; ++i) {
    const TreeEdge& ed = t.edges[i];
    if (ed.u >= nv || ed.v >= nv) {
      throw Error(ErrorKind::NotATree, "edge " + std::to_string(i) + " has a vertex out of range");
    }
    if (ed.u == ed.v) throw Error(ErrorKind::NotATree, "edge " + std::to_string(i) + " is a loop");
    if (ed.dim < 1) throw Error(ErrorKind::InvalidArgument, "edge dims must be positive");
  }
  const std::vector<Int> dist = distances(t);
  for (std::size_t x = 0; x < nv; ++x)
    if (dist[x] == kUnseen) throw Error(ErrorKind::NotATree, "vertex " + std::to_string(x) + " unreachable");

  if (t.rotation.size() != nv) throw Error(ErrorKind::BadRotation, "need one rotation per vertex");
  for (std::size_t x = 0; x < nv; ++x) {
    std::vector<std::size_t> incident;
    for (std::size_t i = 0; i < ne; ++i)
      if (t.edges[i].u == x || t.edges[i].v == x) incident.push_back(i);
    std::vector<std::size_t> rot = t.rotation[x];
    std::sort(rot.begin(), rot.end());
    if (rot != incident) {
      throw Error(ErrorKind::BadRotation,
                  "rotation at vertex " + std::to_string(x) + " is not a cycle on its edges");
    }
  }

  if (!is_prime(t.p)) throw Error(ErrorKind::InvalidArgument, "p must be prime");
  if (t.a < 1) throw Error(ErrorKind::InvalidArgument, "a must be positive");
  for (Int s = 1; s <= t.a; ++s) (void)exceptional_ramification(t.p, s, t.e);
  if (t.m < 1) throw Error(ErrorKind::InvalidArgument, "m must be positive");
  if (gcd(t.r, t.m) != 1) throw Error(ErrorKind::NotCoprime, "r must be prime to m");
  if (t.rotation[t.exceptional].size() % static_cast<std::size_t>(t.m) != 0) {
    throw Error(ErrorKind::InvalidArgument, "m must divide the exceptional valency");
  }
}

Int exceptional_ramification(Int p, Int s, Int e) {
  const Int q = sub(ipow(p, s), ipow(p, s - 1));
  if (e < 1 || q % e != 0) {
    throw Error(ErrorKind::InvalidArgument,
                "(p^s - p^(s-1)) / e is not an integer for s = " + std::to_string(s));
  }
  return q / e;
}

TreePermutations derive_permutations(const PlanarBrauerTree& t) {
  validate_tree(t);
  TreePermutations out;
  out.distance = distances(t);
  const std::size_t ne = t.edges.size();
  out.delta.resize(ne);
  out.rho.resize(ne);
  for (std::size_t i = 0; i < ne; ++i) {
    std::size_t even = t.edges[i].u, odd = t.edges[i].v;
    if (out.distance[even] % 2 != 0) std::swap(even, odd);
    out.delta[i] = successor(t, even, i);
    out.rho[i] = successor(t, odd, i);
  }
  for (std::size_t x = 0; x <= ne; ++x) {
    const bool even = out.distance[x] % 2 == 0;
    VertexOrbit o = orbit_at(t, x, even, even ? out.delta : out.rho);
    if (x == t.exceptional) {
      out.exceptional = std::move(o);
    } else {
      out.ordinary.push_back(std::move(o));
    }
  }
  return out;
}

AmalgamBlock build_block(const PlanarBrauerTree& t) {
  const TreePermutations perms = derive_permutations(t);
  const std::size_t a = static_cast<std::size_t>(t.a);
  std::vector<AmalgamComponent> comps;

  const DimVector exc_dims = orbit_dims(t, perms.exceptional);
  for (Int s = 1; s <= t.a; ++s) {
    const ExponentOrder h = standard_hereditary(exc_dims);
    comps.push_back({validate_order(h.matrix(), exc_dims, exceptional_ramification(t.p, s, t.e)),
                     true});
  }
  std::vector<std::size_t> comp_of_vertex(t.edges.size() + 1, 0);
  for (std::size_t k = 0; k < perms.ordinary.size(); ++k) {
    comp_of_vertex[perms.ordinary[k].vertex] = a + k;
    comps.push_back({scaled_hereditary(orbit_dims(t, perms.ordinary[k]), t.a), false});
  }

  auto orbit_of = [&](std::size_t vertex) -> const VertexOrbit& {
    if (vertex == t.exceptional) return perms.exceptional;
    return perms.ordinary[comp_of_vertex[vertex] - a];
  };
  auto comp_of = [&](std::size_t vertex) {
    return vertex == t.exceptional ? std::size_t{0} : comp_of_vertex[vertex];
  };

  std::vector<GluingConstraint> gluings;
  for (std::size_t i = 0; i < t.edges.size(); ++i) {
    const std::size_t u = t.edges[i].u, v = t.edges[i].v;
    gluings.push_back({{comp_of(u), position(orbit_of(u), i)},
                       {comp_of(v), position(orbit_of(v), i)},
                       t.a,
                       GluingKind::Diagonal});
  }
  const Int n1 = static_cast<Int>(perms.exceptional.edges.size());
  for (Int s = 2; s <= t.a; ++s) {
    const Int y = (ipow(t.p, s - 1) - 1) / t.e;
    gluings.push_back({{static_cast<std::size_t>(s - 2), 0},
                       {static_cast<std::size_t>(s - 1), 0},
                       mul(n1, y),
                       GluingKind::Radical});
  }
  return AmalgamBlock::make(std::move(comps), std::move(gluings), {t.p, t.a, t.e});
}

HasseInvariant hasse_invariant(Int r, Int m) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "m must be positive");
  if (gcd(r, m) != 1) throw Error(ErrorKind::NotCoprime, "r must be prime to m");
  if (m == 1) return {1, 1};
  return {inverse_mod(r, m), m};
}

HeadOrderReport head_order_report(const PlanarBrauerTree& t, std::optional<std::size_t> max_steps) {
  const TreePermutations perms = derive_permutations(t);
  const AmalgamBlock block = build_block(t);
  const std::vector<AmalgamBlock> chain = amalgam_chain(block, max_steps);
  const AmalgamBlock& head = chain.back();

  HeadOrderReport rep;
  rep.chain_length = chain.size() - 1;
  if (t.m > 1) rep.hasse = hasse_invariant(t.r, t.m);
  const std::size_t a = static_cast<std::size_t>(t.a);
  for (std::size_t c = 0; c < block.components().size(); ++c) {
    ComponentReport cr;
    cr.component = c;
    cr.exceptional = c < a;
    const VertexOrbit& o = cr.exceptional ? perms.exceptional : perms.ordinary[c - a];
    cr.vertex = o.vertex;
    cr.edges = o.edges;
    cr.ram = block.components()[c].order.ram();
    cr.iterated = is_hereditary(head.components()[c].order);
    const std::size_t n = o.edges.size();
    if (cr.exceptional) {
      cr.closed_form = is_hereditary(block.components()[c].order);
    } else {
      // σ restricted to r_s in local labels
      const std::vector<std::size_t>& sigma = o.even ? perms.delta : perms.rho;
      std::vector<std::size_t> local(n);
      for (std::size_t k = 0; k < n; ++k) local[k] = position(o, sigma[o.edges[k]]);
      cr.closed_form = main2_hereditary_type(n, t.a, orbit_dims(t, o), local);
      cr.simples = simple_module_match(n, t.a);
    }
    if (cr.closed_form != cr.iterated) rep.agree = false;
    rep.components.push_back(std::move(cr));
  }
  return rep;
}

}  // namespace headorder
