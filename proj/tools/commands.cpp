#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <regex>
#include <thread>

#include "headorder/finite_algebra.hpp"

namespace headorder::cli {

namespace {

[[noreturn]] void bad_input(const std::string& what) { throw Error(ErrorKind::InvalidArgument, what); }

Json header(const std::string& command) {
  Json j;
  j["type"] = "report";
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  return j;
}

std::vector<std::size_t> cycle_sigma(std::size_t n) {
  std::vector<std::size_t> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = (i + 1) % n;
  return s;
}

CirculantState family_start(const FamilySpec& f) {
  std::vector<Int> v(f.n, f.a);
  v[0] = 0;
  return CirculantState::make(std::move(v), f.dims, f.a);
}

Json state_json(const CirculantState& s) {
  Json j;
  j["v"] = s.v();
  j["depth"] = s.depth();
  j["matrix"] = matrix_json(expand(s).matrix());
  return j;
}

Json gluings_json(const AmalgamBlock& b) {
  Json gl = Json::array();
  for (const GluingConstraint& g : b.gluings()) {
    Json x;
    x["left"] = {g.left.component, g.left.block};
    x["right"] = {g.right.component, g.right.block};
    x["depth"] = g.depth;
    x["kind"] = g.kind == GluingKind::Diagonal ? "diagonal" : "radical";
    gl.push_back(x);
  }
  return gl;
}

Json block_state_json(const AmalgamBlock& b) {
  Json comps = Json::array();
  for (const AmalgamComponent& c : b.components()) comps.push_back(matrix_json(c.order.matrix()));
  Json j;
  j["components"] = comps;
  j["gluings"] = gluings_json(b);
  return j;
}

Json heads_json(const std::vector<ComponentHead>& heads) {
  Json out = Json::array();
  for (const ComponentHead& h : heads) {
    Json x;
    x["component"] = h.component;
    x["exceptional"] = h.exceptional;
    x["type"] = to_json(h.type);
    out.push_back(x);
  }
  return out;
}

AmalgamBlock as_block(const Document& doc) {
  if (const auto* o = std::get_if<ExponentOrder>(&doc)) return AmalgamBlock::make({{*o, false}}, {});
  if (const auto* s = std::get_if<CirculantState>(&doc)) return circulant_block(*s);
  if (const auto* f = std::get_if<FamilySpec>(&doc)) return circulant_block(family_start(*f));
  if (const auto* t = std::get_if<PlanarBrauerTree>(&doc)) return build_block(*t);
  return std::get<AmalgamBlock>(doc);
}

Int oracle_prime(const Document& doc, const Options& opts) {
  if (const auto* t = std::get_if<PlanarBrauerTree>(&doc)) return t->p;
  return opts.prime;
}

// Λ_0 .. Λ_N of a circulant state, N the first fixed point.
std::vector<CirculantState> state_chain(const CirculantState& start, std::optional<std::size_t> max_steps) {
  const std::size_t budget =
      max_steps.value_or(default_step_budget(expand(start)) + static_cast<std::size_t>(start.depth()));
  std::vector<CirculantState> chain{start};
  for (;;) {
    CirculantState next = circulant_step(chain.back());
    if (next == chain.back()) return chain;
    if (chain.size() > budget) {
      throw Error(ErrorKind::StepBudgetExceeded, "no fixed point within " + std::to_string(budget) + " steps");
    }
    chain.push_back(std::move(next));
  }
}

struct Checked {
  Json checkpoints = Json::array();
  std::vector<std::vector<std::string>> matches;  // per step
  bool all = true;
};

Checked check_family(const std::vector<CirculantState>& chain, std::size_t n, Int a, const DimVector& dims) {
  Checked out;
  out.matches.resize(chain.size());
  for (const Checkpoint& cp : family_checkpoints(n, a, dims)) {
    const CirculantState& got = state_at(chain, cp.step);
    const bool ok = got == cp.expected;
    Json x;
    x["label"] = cp.label;
    x["step"] = cp.step;
    x["matched"] = ok;
    if (!ok) {
      x["expected"] = state_json(cp.expected);
      x["observed"] = state_json(got);
      out.all = false;
    } else {
      out.matches[std::min(cp.step, chain.size() - 1)].push_back(cp.label);
    }
    out.checkpoints.push_back(x);
  }
  return out;
}

Json state_trace(const std::vector<CirculantState>& chain, const Checked* checked) {
  Json steps = Json::array();
  for (std::size_t k = 0; k < chain.size(); ++k) {
    Json s;
    s["step"] = k;
    s.update(state_json(chain[k]));
    if (checked) s["matches"] = checked->matches[k];
    steps.push_back(s);
  }
  return steps;
}

struct OracleRun {
  Json json;
  bool ok = true;
};

// Certifies every step of the chain; exceptional partners become maximal stand-ins.
OracleRun certify_chain(const std::vector<AmalgamBlock>& chain, Int p) {
  OracleRun out;
  std::size_t certified = 0, skipped = 0;
  Json failures = Json::array();
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
    try {
      const Certificate cert = certify_step(standin_block(chain[k]), p);
      if (cert.ok()) {
        ++certified;
      } else {
        out.ok = false;
        Json f = to_json(cert);
        f["step"] = k;
        failures.push_back(f);
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::RankCapExceeded) throw;
      ++skipped;
    }
  }
  out.json["p"] = p;
  out.json["steps"] = chain.empty() ? 0 : chain.size() - 1;
  out.json["certified"] = certified;
  out.json["skipped_rank_cap"] = skipped;
  out.json["failures"] = failures;
  return out;
}

std::vector<AmalgamBlock> blocks_of(const std::vector<CirculantState>& chain) {
  std::vector<AmalgamBlock> out;
  for (const CirculantState& s : chain) out.push_back(circulant_block(s));
  return out;
}

// ---- family verification, shared by verify and sweep ----

struct FamilyResult {
  Json json;
  bool agree = true;
};

FamilyResult verify_family(const FamilySpec& f, const Options& opts) {
  FamilyResult r;
  const auto chain = circulant_chain(f.n, f.a, f.dims, opts.max_steps);
  const CirculantState& head = chain.back();
  r.json["n"] = f.n;
  r.json["a"] = f.a;
  r.json["steps"] = chain.size() - 1;

  const CirculantState closed = closed_form_head(f.n, f.a, f.dims);
  const bool w_ok = closed == head;
  const ExponentOrder fh = head_order_f(f.n, f.a, f.dims);
  const bool f_ok = fh.matrix() == expand(head).matrix();
  const Checked checked = check_family(chain, f.n, f.a, f.dims);
  const HereditaryType observed = is_hereditary(expand(head));
  const HereditaryType predicted = main2_hereditary_type(f.n, f.a, f.dims, cycle_sigma(f.n));
  const bool type_ok = observed == predicted;

  r.json["closed_form_agrees"] = w_ok;
  r.json["head_f_agrees"] = f_ok;
  r.json["checkpoints_agree"] = checked.all;
  r.json["type_agrees"] = type_ok;
  r.agree = w_ok && f_ok && checked.all && type_ok;
  if (!w_ok) {
    r.json["closed_form"] = state_json(closed);
    r.json["iterated"] = state_json(head);
  }
  if (!f_ok) {
    r.json["head_f"] = matrix_json(fh.matrix());
    r.json["iterated_matrix"] = matrix_json(expand(head).matrix());
  }
  if (!checked.all) r.json["checkpoints"] = checked.checkpoints;
  if (!type_ok) {
    r.json["type_predicted"] = to_json(predicted);
    r.json["type_observed"] = to_json(observed);
  }
  if (opts.oracle) {
    const OracleRun o = certify_chain(blocks_of(chain), opts.prime);
    r.json["oracle"] = o.json;
    r.agree = r.agree && o.ok;
  }
  return r;
}

std::vector<FamilySpec> grid_points(const Grid& g) {
  std::vector<FamilySpec> out;
  for (std::size_t n = g.n_lo; n <= g.n_hi; ++n)
    for (Int a = g.a_lo; a <= g.a_hi; ++a) out.push_back({n, a, DimVector(n, 1)});
  return out;
}

std::vector<FamilyResult> run_grid(const std::vector<FamilySpec>& jobs, const Options& opts, unsigned workers) {
  std::vector<FamilyResult> results(jobs.size());
  std::vector<std::string> errors(jobs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        results[i] = verify_family(jobs[i], opts);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(jobs.size())));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (std::thread& t : pool) t.join();
  for (std::size_t i = 0; i < jobs.size(); ++i)
    if (!errors[i].empty()) throw Error(ErrorKind::InvalidArgument, errors[i]);
  return results;
}

Outcome grid_report(const std::string& command, const Grid& g, const Options& opts, unsigned workers) {
  const auto jobs = grid_points(g);
  const auto results = run_grid(jobs, opts, workers);
  Outcome out{header(command)};
  std::size_t agree = 0;
  Json bad = Json::array();
  for (const FamilyResult& r : results) {
    if (r.agree) {
      ++agree;
    } else {
      bad.push_back(r.json);
    }
  }
  out.report["grid"] = {{"n", {g.n_lo, g.n_hi}}, {"a", {g.a_lo, g.a_hi}}};
  out.report["oracle"] = opts.oracle;
  out.report["total"] = results.size();
  out.report["agree"] = agree;
  out.report["all_agree"] = agree == results.size();
  out.report["disagreements"] = bad;
  out.exit_code = agree == results.size() ? kExitOk : kExitDisagree;
  return out;
}

// ---- commands ----

Outcome cmd_check(const Document& doc) {
  Outcome out{header("check")};
  out.report["valid"] = true;
  out.report["document"] = to_json(doc);
  if (const auto* o = std::get_if<ExponentOrder>(&doc)) {
    out.report["reduced"] = o->is_reduced();
    out.report["hereditary"] = to_json(is_hereditary(*o));
  } else if (const auto* s = std::get_if<CirculantState>(&doc)) {
    out.report["matrix"] = matrix_json(expand(*s).matrix());
  } else if (const auto* f = std::get_if<FamilySpec>(&doc)) {
    const ChainParameters p = chain_parameters(f->n, f->a);
    Json j;
    j["z"] = p.z;
    j["b"] = p.b;
    j["l0"] = p.l0;
    j["x0"] = p.x0;
    j["m0"] = p.m0;
    j["m1"] = p.m1;
    if (p.m2) j["m2"] = *p.m2;
    out.report["parameters"] = j;
  } else {
    const AmalgamBlock b = as_block(doc);
    out.report["components"] = b.components().size();
    out.report["max_depth"] = b.max_depth();
  }
  return out;
}

Outcome cmd_radical(const Document& doc, const Options& opts) {
  Outcome out{header("radical")};
  const AmalgamBlock block = as_block(doc);
  Json comps = Json::array();
  for (const AmalgamComponent& c : block.components()) {
    Json x;
    x["exceptional"] = c.exceptional;
    x["reduced"] = c.order.is_reduced();
    x["radical"] = matrix_json(radical_unreduced(c.order).matrix);
    comps.push_back(x);
  }
  out.report["components"] = comps;
  out.report["next"] = block_state_json(amalgam_idealizer_step(block));
  if (opts.oracle) {
    const Certificate cert = certify_step(standin_block(block), oracle_prime(doc, opts));
    out.report["certificate"] = to_json(cert);
    if (!cert.ok()) out.exit_code = kExitDisagree;
  }
  return out;
}

Outcome cmd_chain(const Document& doc, const Options& opts) {
  Outcome out{header("chain")};
  if (const auto* f = std::get_if<FamilySpec>(&doc)) {
    const auto chain = circulant_chain(f->n, f->a, f->dims, opts.max_steps);
    const Checked checked = check_family(chain, f->n, f->a, f->dims);
    out.report["steps"] = state_trace(chain, &checked);
    out.report["checkpoints"] = checked.checkpoints;
    out.report["final_hereditary"] = to_json(is_hereditary(expand(chain.back())));
    if (!checked.all) out.exit_code = kExitDisagree;
    return out;
  }
  if (const auto* s = std::get_if<CirculantState>(&doc)) {
    const auto chain = state_chain(*s, opts.max_steps);
    out.report["steps"] = state_trace(chain, nullptr);
    out.report["final_hereditary"] = to_json(is_hereditary(expand(chain.back())));
    return out;
  }
  const auto chain = amalgam_chain(as_block(doc), opts.max_steps);
  Json steps = Json::array();
  for (std::size_t k = 0; k < chain.size(); ++k) {
    Json s;
    s["step"] = k;
    s.update(block_state_json(chain[k]));
    steps.push_back(s);
  }
  out.report["steps"] = steps;
  Json finals = Json::array();
  for (const AmalgamComponent& c : chain.back().components()) finals.push_back(to_json(is_hereditary(c.order)));
  out.report["final_hereditary"] = finals;
  return out;
}

Outcome cmd_head(const Document& doc, const Options& opts) {
  Outcome out{header("head")};
  if (const auto* t = std::get_if<PlanarBrauerTree>(&doc)) {
    const HeadOrderReport r = head_order_report(*t, opts.max_steps);
    out.report["report"] = to_json(r);
    if (!r.agree) out.exit_code = kExitDisagree;
    return out;
  }
  if (const auto* f = std::get_if<FamilySpec>(&doc)) {
    const auto chain = circulant_chain(f->n, f->a, f->dims, opts.max_steps);
    out.report["steps"] = chain.size() - 1;
    out.report["head"] = state_json(chain.back());
    out.report["hereditary"] = to_json(is_hereditary(expand(chain.back())));
    return out;
  }
  if (const auto* s = std::get_if<CirculantState>(&doc)) {
    const auto chain = state_chain(*s, opts.max_steps);
    out.report["steps"] = chain.size() - 1;
    out.report["head"] = state_json(chain.back());
    out.report["hereditary"] = to_json(is_hereditary(expand(chain.back())));
    return out;
  }
  const auto chain = amalgam_chain(as_block(doc), opts.max_steps);
  out.report["steps"] = chain.size() - 1;
  out.report["head"] = block_state_json(chain.back());
  Json types = Json::array();
  for (const AmalgamComponent& c : chain.back().components()) types.push_back(to_json(is_hereditary(c.order)));
  out.report["hereditary"] = types;
  return out;
}

Outcome cmd_closed_form(const Document& doc) {
  Outcome out{header("closed-form")};
  if (const auto* t = std::get_if<PlanarBrauerTree>(&doc)) {
    out.report["heads"] = heads_json(block_head_order(build_block(*t)));
    if (t->m > 1) {
      const HasseInvariant h = hasse_invariant(t->r, t->m);
      out.report["hasse"] = {{"t", h.t}, {"m", h.m}};
    }
    return out;
  }
  const auto* f = std::get_if<FamilySpec>(&doc);
  if (!f) bad_input("closed-form takes a family or a tree document");
  const ChainParameters p = chain_parameters(f->n, f->a);
  const CirculantState head = closed_form_head(f->n, f->a, f->dims);
  out.report["b"] = p.b;
  out.report["head"] = state_json(head);
  out.report["head_f"] = matrix_json(head_order_f(f->n, f->a, f->dims).matrix());
  out.report["main2"] = to_json(main2_type(f->n, f->a, f->dims, cycle_sigma(f->n)));
  out.report["simples"] = to_json(simple_module_match(f->n, f->a));
  if (p.b > 0 && static_cast<Int>(f->n) % p.b != 0) {
    const HeadProperties hp = check_head_properties(head.v(), p.b);
    out.report["properties"] = {{"triangle_i", hp.triangle_i},   {"triangle_ii", hp.triangle_ii},
                                {"triangle_iii", hp.triangle_iii}, {"hereditary", hp.hereditary},
                                {"boundary", hp.boundary}};
    out.report["step_pattern"] = head_step_pattern(head.v(), p.b);
    if (!hp.all()) out.exit_code = kExitDisagree;
  }
  Json cps = Json::array();
  for (const Checkpoint& cp : family_checkpoints(f->n, f->a, f->dims)) {
    Json x;
    x["label"] = cp.label;
    x["step"] = cp.step;
    x.update(state_json(cp.expected));
    cps.push_back(x);
  }
  out.report["checkpoints"] = cps;
  return out;
}

Json orbit_json(const VertexOrbit& o) {
  return {{"vertex", o.vertex}, {"even", o.even}, {"edges", o.edges}};
}

Outcome cmd_tree(const Document& doc) {
  const auto* t = std::get_if<PlanarBrauerTree>(&doc);
  if (!t) bad_input("tree takes a tree document");
  Outcome out{header("tree")};
  const TreePermutations perms = derive_permutations(*t);
  out.report["delta"] = perms.delta;
  out.report["rho"] = perms.rho;
  out.report["distance"] = perms.distance;
  out.report["exceptional_orbit"] = orbit_json(perms.exceptional);
  Json ord = Json::array();
  for (const VertexOrbit& o : perms.ordinary) ord.push_back(orbit_json(o));
  out.report["ordinary_orbits"] = ord;
  Json ram = Json::array();
  for (Int s = 1; s <= t->a; ++s) ram.push_back(exceptional_ramification(t->p, s, t->e));
  out.report["ramification"] = ram;
  if (t->m > 1) {
    const HasseInvariant h = hasse_invariant(t->r, t->m);
    out.report["hasse"] = {{"t", h.t}, {"m", h.m}};
  }
  out.report["block"] = to_json(build_block(*t));
  return out;
}

Outcome cmd_verify(const Document& doc, const Options& opts) {
  Outcome out{header("verify")};
  if (const auto* f = std::get_if<FamilySpec>(&doc)) {
    const FamilyResult r = verify_family(*f, opts);
    out.report["result"] = r.json;
    out.report["agree"] = r.agree;
    out.exit_code = r.agree ? kExitOk : kExitDisagree;
    return out;
  }
  bool agree = true;
  const Int p = oracle_prime(doc, opts);
  std::vector<AmalgamBlock> chain;
  if (const auto* s = std::get_if<CirculantState>(&doc)) {
    const auto states = state_chain(*s, opts.max_steps);
    chain = amalgam_chain(circulant_block(*s), opts.max_steps);
    bool same = chain.size() == states.size();
    for (std::size_t k = 0; same && k < chain.size(); ++k) {
      const auto back = circulant_from_order(chain[k].components()[0].order, states[k].depth());
      same = back && *back == states[k];
    }
    out.report["state_chain_agrees"] = same;
    agree = same;
  } else {
    chain = amalgam_chain(as_block(doc), opts.max_steps);
  }
  out.report["steps"] = chain.size() - 1;
  if (const auto* t = std::get_if<PlanarBrauerTree>(&doc)) {
    const HeadOrderReport r = head_order_report(*t, opts.max_steps);
    out.report["report_agrees"] = r.agree;
    agree = agree && r.agree;
  }
  const auto iterated = chain_head_order(as_block(doc), opts.max_steps);
  try {
    const auto closed = block_head_order(as_block(doc));
    const bool same = closed == iterated;
    out.report["closed_form_agrees"] = same;
    if (!same) {
      out.report["closed_form"] = heads_json(closed);
      out.report["iterated"] = heads_json(iterated);
    }
    agree = agree && same;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::InvalidBlock) throw;
    out.report["closed_form_agrees"] = nullptr;  // no closed form for this shape
    out.report["iterated"] = heads_json(iterated);
  }
  if (opts.oracle) {
    const OracleRun o = certify_chain(chain, p);
    out.report["oracle"] = o.json;
    agree = agree && o.ok;
  }
  out.report["agree"] = agree;
  out.exit_code = agree ? kExitOk : kExitDisagree;
  return out;
}

}  // namespace

Grid parse_grid(const std::string& text) {
  static const std::regex part(R"(\s*([na])\s*=\s*(-?\d+)(?:\.\.(-?\d+))?\s*)");
  Grid g;
  bool seen_n = false, seen_a = false;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    std::smatch m;
    if (!std::regex_match(item, m, part)) bad_input("bad grid item '" + item + "'");
    const Int lo = std::stoll(m[2]);
    const Int hi = m[3].matched ? std::stoll(m[3]) : lo;
    if (lo > hi) bad_input("empty range in '" + item + "'");
    if (m[1] == "n") {
      if (lo < 1) bad_input("n must be positive");
      g.n_lo = static_cast<std::size_t>(lo);
      g.n_hi = static_cast<std::size_t>(hi);
      seen_n = true;
    } else {
      if (lo < 1) bad_input("a must be positive");
      g.a_lo = lo;
      g.a_hi = hi;
      seen_a = true;
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (!seen_n || !seen_a) bad_input("grid needs both n and a");
  return g;
}

bool known_command(const std::string& name) {
  static const std::vector<std::string> names{"check", "radical", "chain",  "head",
                                              "closed-form", "tree", "verify", "sweep"};
  return std::find(names.begin(), names.end(), name) != names.end();
}

bool needs_input(const Options& opts) {
  return !(opts.command == "sweep" || (opts.command == "verify" && opts.grid));
}

Outcome run(const Options& opts, const std::optional<Document>& doc) {
  const unsigned workers = opts.workers ? opts.workers : std::max(1u, std::thread::hardware_concurrency());
  if (opts.command == "sweep") {
    if (!opts.grid) bad_input("sweep needs --grid");
    return grid_report("sweep", *opts.grid, opts, workers);
  }
  if (opts.command == "verify" && opts.grid) return grid_report("verify", *opts.grid, opts, 1);
  if (!doc) bad_input("command '" + opts.command + "' needs --input");
  if (opts.command == "check") return cmd_check(*doc);
  if (opts.command == "radical") return cmd_radical(*doc, opts);
  if (opts.command == "chain") return cmd_chain(*doc, opts);
  if (opts.command == "head") return cmd_head(*doc, opts);
  if (opts.command == "closed-form") return cmd_closed_form(*doc);
  if (opts.command == "tree") return cmd_tree(*doc);
  if (opts.command == "verify") return cmd_verify(*doc, opts);
  bad_input("unknown command '" + opts.command + "'");
}

}  // namespace headorder::cli
