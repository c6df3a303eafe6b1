#include "headorder/document.hpp"

#include <string>

namespace headorder {

namespace {

[[noreturn]] void schema(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::SchemaError, path + ": " + what);
}

const Json& field(const Json& j, const std::string& path, const char* key) {
  if (!j.is_object()) schema(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) schema(path + "." + key, "missing");
  return *it;
}

Int as_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) schema(path, "expected an integer");
  return j.get<Int>();
}

std::size_t as_index(const Json& j, const std::string& path) {
  const Int v = as_int(j, path);
  if (v < 0) schema(path, "expected a nonnegative integer");
  return static_cast<std::size_t>(v);
}

Int int_field(const Json& j, const std::string& path, const char* key) {
  return as_int(field(j, path, key), path + "." + key);
}

Int int_field_or(const Json& j, const std::string& path, const char* key, Int fallback) {
  if (!j.contains(key)) return fallback;
  return as_int(j.at(key), path + "." + key);
}

std::vector<Int> int_vector(const Json& j, const std::string& path) {
  if (!j.is_array()) schema(path, "expected an array of integers");
  std::vector<Int> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(as_int(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

IntMatrix int_matrix(const Json& j, const std::string& path) {
  if (!j.is_array()) schema(path, "expected an array of rows");
  std::vector<std::vector<Int>> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    rows.push_back(int_vector(j[i], path + "[" + std::to_string(i) + "]"));
    if (rows.back().size() != j.size()) {
      schema(path + "[" + std::to_string(i) + "]", "expected " + std::to_string(j.size()) + " entries");
    }
  }
  if (rows.empty()) schema(path, "empty matrix");
  return IntMatrix::from_rows(rows);
}

void check_version(const Json& j) {
  if (!j.contains("schema_version")) return;
  if (as_int(j.at("schema_version"), "$.schema_version") != kSchemaVersion) {
    schema("$.schema_version", "unsupported version");
  }
}

ExponentOrder parse_order(const Json& j, const std::string& path) {
  const IntMatrix m = int_matrix(field(j, path, "matrix"), path + ".matrix");
  DimVector dims(m.size(), 1);
  if (j.contains("dims")) dims = int_vector(j.at("dims"), path + ".dims");
  return validate_order(m, dims, int_field_or(j, path, "ram", 1));
}

GluingKind parse_kind(const Json& j, const std::string& path) {
  if (!j.is_string()) schema(path, "expected \"diagonal\" or \"radical\"");
  const std::string s = j.get<std::string>();
  if (s == "diagonal") return GluingKind::Diagonal;
  if (s == "radical") return GluingKind::Radical;
  schema(path, "expected \"diagonal\" or \"radical\"");
}

BlockRef parse_ref(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) schema(path, "expected [component, block]");
  return {as_index(j[0], path + "[0]"), as_index(j[1], path + "[1]")};
}

AmalgamBlock parse_amalgam(const Json& j) {
  const Json& comps = field(j, "$", "components");
  if (!comps.is_array()) schema("$.components", "expected an array");
  std::vector<AmalgamComponent> components;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const std::string path = "$.components[" + std::to_string(c) + "]";
    bool exceptional = false;
    if (comps[c].contains("exceptional")) {
      if (!comps[c].at("exceptional").is_boolean()) schema(path + ".exceptional", "expected a boolean");
      exceptional = comps[c].at("exceptional").get<bool>();
    }
    components.push_back({parse_order(comps[c], path), exceptional});
  }
  std::vector<GluingConstraint> gluings;
  if (j.contains("gluings")) {
    const Json& gl = j.at("gluings");
    if (!gl.is_array()) schema("$.gluings", "expected an array");
    for (std::size_t g = 0; g < gl.size(); ++g) {
      const std::string path = "$.gluings[" + std::to_string(g) + "]";
      GluingConstraint con;
      con.left = parse_ref(field(gl[g], path, "left"), path + ".left");
      con.right = parse_ref(field(gl[g], path, "right"), path + ".right");
      con.depth = int_field(gl[g], path, "depth");
      if (gl[g].contains("kind")) con.kind = parse_kind(gl[g].at("kind"), path + ".kind");
      gluings.push_back(con);
    }
  }
  BlockParams params;
  if (j.contains("params")) {
    const Json& p = j.at("params");
    params = {int_field(p, "$.params", "p"), int_field(p, "$.params", "a"),
              int_field(p, "$.params", "e")};
  }
  return AmalgamBlock::make(std::move(components), std::move(gluings), params);
}

PlanarBrauerTree parse_tree(const Json& j) {
  PlanarBrauerTree t;
  t.exceptional = as_index(field(j, "$", "exceptional"), "$.exceptional");
  const Json& edges = field(j, "$", "edges");
  if (!edges.is_array()) schema("$.edges", "expected an array");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string path = "$.edges[" + std::to_string(i) + "]";
    const Json& e = edges[i];
    TreeEdge edge;
    if (e.is_array()) {
      if (e.size() != 2 && e.size() != 3) schema(path, "expected [u, v] or [u, v, dim]");
      edge.u = as_index(e[0], path + "[0]");
      edge.v = as_index(e[1], path + "[1]");
      if (e.size() == 3) edge.dim = as_int(e[2], path + "[2]");
    } else {
      edge.u = as_index(field(e, path, "u"), path + ".u");
      edge.v = as_index(field(e, path, "v"), path + ".v");
      edge.dim = int_field_or(e, path, "dim", 1);
    }
    t.edges.push_back(edge);
  }
  const Json& rot = field(j, "$", "rotations");
  t.rotation.assign(edges.size() + 1, {});
  auto read_rotation = [&](std::size_t vertex, const Json& r, const std::string& path) {
    if (vertex >= t.rotation.size()) schema(path, "vertex out of range");
    for (Int x : int_vector(r, path)) {
      if (x < 0) schema(path, "edge labels are nonnegative");
      t.rotation[vertex].push_back(static_cast<std::size_t>(x));
    }
  };
  if (rot.is_object()) {
    for (const auto& [key, value] : rot.items()) {
      std::size_t vertex = 0;
      try {
        std::size_t used = 0;
        vertex = std::stoul(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        schema("$.rotations." + key, "keys must be vertex numbers");
      }
      read_rotation(vertex, value, "$.rotations." + key);
    }
  } else if (rot.is_array()) {
    for (std::size_t v = 0; v < rot.size(); ++v)
      read_rotation(v, rot[v], "$.rotations[" + std::to_string(v) + "]");
  } else {
    schema("$.rotations", "expected an object or an array");
  }
  t.p = int_field(j, "$", "p");
  t.a = int_field(j, "$", "a");
  t.e = int_field_or(j, "$", "e", static_cast<Int>(t.edges.size()));
  t.m = int_field_or(j, "$", "m", 1);
  t.r = int_field_or(j, "$", "r", 1);
  validate_tree(t);
  return t;
}

Json header(const char* type) {
  Json j;
  j["type"] = type;
  j["schema_version"] = kSchemaVersion;
  return j;
}

Json order_body(const ExponentOrder& order, Json j) {
  j["dims"] = order.dims();
  j["matrix"] = matrix_json(order.matrix());
  j["ram"] = order.ram();
  return j;
}

}  // namespace

Document parse_document(const Json& j) {
  if (!j.is_object()) schema("$", "expected an object");
  check_version(j);
  const Json& type = field(j, "$", "type");
  if (!type.is_string()) schema("$.type", "expected a string");
  const std::string t = type.get<std::string>();
  if (t == "exponent") return parse_order(j, "$");
  if (t == "circulant") {
    const std::vector<Int> v = int_vector(field(j, "$", "v"), "$.v");
    if (j.contains("n") && int_field(j, "$", "n") != static_cast<Int>(v.size())) {
      schema("$.n", "differs from the length of v");
    }
    DimVector dims(v.size(), 1);
    if (j.contains("dims")) dims = int_vector(j.at("dims"), "$.dims");
    return CirculantState::make(v, dims, int_field_or(j, "$", "depth", 0));
  }
  if (t == "tree") return parse_tree(j);
  if (t == "amalgam") return parse_amalgam(j);
  if (t == "family") {
    FamilySpec f;
    const Int n = int_field(j, "$", "n");
    if (n < 1) schema("$.n", "must be positive");
    f.n = static_cast<std::size_t>(n);
    f.a = int_field(j, "$", "a");
    if (f.a < 1) schema("$.a", "must be positive");
    f.dims = j.contains("dims") ? int_vector(j.at("dims"), "$.dims") : DimVector(f.n, 1);
    if (f.dims.size() != f.n) schema("$.dims", "expected n entries");
    for (Int d : f.dims)
      if (d < 1) schema("$.dims", "entries must be positive");
    return f;
  }
  schema("$.type", "unknown type \"" + t + "\"");
}

Document parse_document_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    schema("$", std::string("malformed JSON: ") + e.what());
  }
  return parse_document(j);
}

Json matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (const auto& r : m.rows()) rows.push_back(r);
  return rows;
}

Json to_json(const ExponentOrder& order) { return order_body(order, header("exponent")); }

Json to_json(const CirculantState& s) {
  Json j = header("circulant");
  j["n"] = s.n();
  j["dims"] = s.dims();
  j["v"] = s.v();
  j["depth"] = s.depth();
  return j;
}

Json to_json(const PlanarBrauerTree& t) {
  Json j = header("tree");
  j["exceptional"] = t.exceptional;
  Json edges = Json::array();
  for (const TreeEdge& e : t.edges) {
    Json x;
    x["u"] = e.u;
    x["v"] = e.v;
    x["dim"] = e.dim;
    edges.push_back(x);
  }
  j["edges"] = edges;
  Json rot = Json::object();
  for (std::size_t v = 0; v < t.rotation.size(); ++v) rot[std::to_string(v)] = t.rotation[v];
  j["rotations"] = rot;
  j["p"] = t.p;
  j["a"] = t.a;
  j["e"] = t.e;
  j["m"] = t.m;
  j["r"] = t.r;
  return j;
}

Json to_json(const AmalgamBlock& b) {
  Json j = header("amalgam");
  Json comps = Json::array();
  for (const AmalgamComponent& c : b.components()) {
    Json x = order_body(c.order, Json::object());
    x["exceptional"] = c.exceptional;
    comps.push_back(x);
  }
  j["components"] = comps;
  Json gl = Json::array();
  for (const GluingConstraint& g : b.gluings()) {
    Json x;
    x["left"] = {g.left.component, g.left.block};
    x["right"] = {g.right.component, g.right.block};
    x["depth"] = g.depth;
    x["kind"] = g.kind == GluingKind::Diagonal ? "diagonal" : "radical";
    gl.push_back(x);
  }
  j["gluings"] = gl;
  Json p;
  p["p"] = b.params().p;
  p["a"] = b.params().a;
  p["e"] = b.params().e;
  j["params"] = p;
  return j;
}

Json to_json(const FamilySpec& f) {
  Json j = header("family");
  j["n"] = f.n;
  j["a"] = f.a;
  j["dims"] = f.dims;
  return j;
}

Json to_json(const Document& doc) {
  return std::visit([](const auto& x) { return to_json(x); }, doc);
}

Json to_json(const HereditaryType& h) {
  Json j;
  j["hereditary"] = h.hereditary;
  j["blocks"] = h.blocks;
  j["grouped_dims"] = h.grouped_dims;
  j["block_of"] = h.block_of;
  return j;
}

Json to_json(const Main2Type& m) {
  Json j;
  j["d"] = m.d;
  j["t"] = m.t;
  j["c"] = m.c;
  j["grouped_dims"] = m.grouped_dims;
  j["block_labels"] = m.block_labels;
  return j;
}

Json to_json(const SimpleModuleMatch& s) {
  Json j;
  j["n_prime"] = s.n_prime;
  j["d"] = s.d;
  j["c"] = s.c;
  j["fibers"] = s.fibers;
  return j;
}

Json to_json(const Certificate& c) {
  Json j;
  j["p"] = c.p;
  j["K"] = c.K;
  j["rank"] = c.rank;
  j["radical_agrees"] = c.radical_agrees;
  j["idealizer_agrees"] = c.idealizer_agrees;
  j["contains_order"] = c.contains_order;
  Json pred = Json::array(), obs = Json::array();
  for (const IntMatrix& m : c.predicted) pred.push_back(matrix_json(m));
  for (const IntMatrix& m : c.observed) obs.push_back(matrix_json(m));
  j["predicted"] = pred;
  j["observed"] = obs;
  return j;
}

Json to_json(const HeadOrderReport& r) {
  Json j;
  j["chain_length"] = r.chain_length;
  j["agree"] = r.agree;
  if (r.hasse) {
    Json h;
    h["t"] = r.hasse->t;
    h["m"] = r.hasse->m;
    j["hasse"] = h;
  }
  Json comps = Json::array();
  for (const ComponentReport& c : r.components) {
    Json x;
    x["component"] = c.component;
    x["vertex"] = c.vertex;
    x["exceptional"] = c.exceptional;
    x["ram"] = c.ram;
    x["edges"] = c.edges;
    x["closed_form"] = to_json(c.closed_form);
    x["iterated"] = to_json(c.iterated);
    if (c.simples) x["simples"] = to_json(*c.simples);
    comps.push_back(x);
  }
  j["components"] = comps;
  return j;
}

}  // namespace headorder
