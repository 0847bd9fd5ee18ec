#include "tpa/io.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace tpa {

namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

constexpr const char* kAlgebraFormat = "tpa-algebra/1";
constexpr const char* kReportFormat = "tpa-report/1";

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw SchemaError(path + ": " + msg);
}

void require_keys(const json& obj, const std::string& path,
                  const std::set<std::string>& required,
                  const std::set<std::string>& optional = {}) {
  for (const auto& [key, _] : obj.items()) {
    if (!required.count(key) && !optional.count(key))
      fail(path, "unknown key '" + key + "'");
  }
  for (const auto& key : required) {
    if (!obj.contains(key)) fail(path, "missing key '" + key + "'");
  }
}

const json& get_object(const json& obj, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  return obj;
}

const json& get_array(const json& obj, const std::string& path) {
  if (!obj.is_array()) fail(path, "expected an array");
  return obj;
}

std::string get_string(const json& v, const std::string& path) {
  if (!v.is_string()) fail(path, "expected a string");
  return v.get<std::string>();
}

std::int64_t get_int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) fail(path, "expected an integer");
  return v.get<std::int64_t>();
}

Scalar parse_scalar(const json& v, const std::string& path, const Field& f) {
  if (!v.is_string())
    fail(path, "scalar must be a string, e.g. \"-1/2\"");
  try {
    return Scalar::parse(v.get<std::string>(), f);
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
}

int parse_index(const std::string& key, const std::string& path, int dim) {
  if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos)
    fail(path, "bad basis index '" + key + "'");
  // Leading zeros would break round-trip canonicality.
  if (key.size() > 1 && key[0] == '0')
    fail(path, "bad basis index '" + key + "'");
  long long idx = -1;
  if (key.size() <= 18) idx = std::stoll(key);
  if (idx < 0 || idx >= dim)
    fail(path, "basis index " + key + " out of range for dimension " +
                   std::to_string(dim));
  return static_cast<int>(idx);
}

Field parse_field(const json& v, const std::string& path) {
  if (v.is_string()) {
    if (v.get<std::string>() == "Q") return Field::rationals();
    fail(path, "expected \"Q\" or {\"gf\": p}");
  }
  if (v.is_object()) {
    require_keys(v, path, {"gf"});
    std::int64_t p = get_int(v.at("gf"), path + ".gf");
    try {
      return Field::gf(p);
    } catch (const std::invalid_argument& e) {
      fail(path + ".gf", e.what());
    }
  }
  fail(path, "expected \"Q\" or {\"gf\": p}");
}

Element parse_sparse_element(const json& v, const std::string& path, int dim,
                             const Field& f) {
  const json& obj = get_object(v, path);
  Element out = zero_element(dim, f);
  for (const auto& [key, val] : obj.items()) {
    int idx = parse_index(key, path, dim);
    out[static_cast<std::size_t>(idx)] =
        parse_scalar(val, path + "[\"" + key + "\"]", f);
  }
  return out;
}

MultiLinearOp parse_op(const json& v, const std::string& path, int dim,
                       const Field& f) {
  const json& obj = get_object(v, path);
  require_keys(obj, path, {"name", "arity", "symmetry", "table"});
  std::string name = get_string(obj.at("name"), path + ".name");
  if (name.empty()) fail(path + ".name", "empty op name");
  std::int64_t arity = get_int(obj.at("arity"), path + ".arity");
  if (arity < 1)
    fail(path + ".arity", "arity must be >= 1");
  Symmetry sym;
  try {
    sym = symmetry_from_name(get_string(obj.at("symmetry"), path + ".symmetry"));
  } catch (const std::invalid_argument& e) {
    fail(path + ".symmetry", e.what());
  }

  std::map<std::vector<int>, Element> table;
  std::set<std::vector<int>> seen;
  const json& rows = get_array(obj.at("table"), path + ".table");
  for (std::size_t j = 0; j < rows.size(); ++j) {
    const std::string rp = path + ".table[" + std::to_string(j) + "]";
    const json& row = get_object(rows[j], rp);
    require_keys(row, rp, {"in", "out"});
    const json& in = get_array(row.at("in"), rp + ".in");
    if (static_cast<std::int64_t>(in.size()) != arity)
      fail(rp + ".in", "expected " + std::to_string(arity) + " indices");
    std::vector<int> key;
    key.reserve(in.size());
    for (std::size_t k = 0; k < in.size(); ++k) {
      std::int64_t idx = get_int(in[k], rp + ".in[" + std::to_string(k) + "]");
      if (idx < 0 || idx >= dim)
        fail(rp + ".in[" + std::to_string(k) + "]",
             "basis index " + std::to_string(idx) +
                 " out of range for dimension " + std::to_string(dim));
      key.push_back(static_cast<int>(idx));
    }
    if (!seen.insert(key).second)
      fail(rp + ".in", "duplicate table entry for this tuple");
    table[std::move(key)] = parse_sparse_element(row.at("out"), rp + ".out",
                                                 dim, f);
  }

  try {
    return make_op(std::move(name), static_cast<int>(arity), sym, dim, f,
                   std::move(table));
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
}

LinearMap parse_map(const json& v, const std::string& path, int dim,
                    const Field& f) {
  const json& obj = get_object(v, path);
  require_keys(obj, path, {"name", "matrix"});
  LinearMap m;
  m.name = get_string(obj.at("name"), path + ".name");
  if (m.name.empty()) fail(path + ".name", "empty map name");
  m.dim = dim;
  m.field = f;
  m.a.assign(static_cast<std::size_t>(dim) * dim, Scalar::zero(f));
  const json& rows = get_array(obj.at("matrix"), path + ".matrix");
  if (static_cast<int>(rows.size()) != dim)
    fail(path + ".matrix", "expected " + std::to_string(dim) + " rows");
  for (int r = 0; r < dim; ++r) {
    const std::string rp = path + ".matrix[" + std::to_string(r) + "]";
    const json& row = get_array(rows[static_cast<std::size_t>(r)], rp);
    if (static_cast<int>(row.size()) != dim)
      fail(rp, "expected " + std::to_string(dim) + " entries");
    for (int c = 0; c < dim; ++c)
      m.at(r, c) = parse_scalar(row[static_cast<std::size_t>(c)],
                                rp + "[" + std::to_string(c) + "]", f);
  }
  return m;
}

// --- emission -------------------------------------------------------------

ojson field_json(const Field& f) {
  if (f.is_rational()) return ojson("Q");
  ojson o = ojson::object();
  o["gf"] = f.p;
  return o;
}

ojson sparse_element_json(const Element& v) {
  ojson o = ojson::object();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) o[std::to_string(i)] = v[i].str();
  return o;
}

ojson op_table_json(const MultiLinearOp& op) {
  ojson rows = ojson::array();
  for (const auto& [key, val] : op.table) {
    ojson row = ojson::object();
    row["in"] = key;
    row["out"] = sparse_element_json(val);
    rows.push_back(std::move(row));
  }
  return rows;
}

ojson op_json(const MultiLinearOp& op) {
  ojson o = ojson::object();
  o["name"] = op.name;
  o["arity"] = op.arity;
  o["symmetry"] = symmetry_name(op.symmetry);
  o["table"] = op_table_json(op);
  return o;
}

ojson matrix_json(const LinearMap& m) {
  ojson rows = ojson::array();
  for (int r = 0; r < m.dim; ++r) {
    ojson row = ojson::array();
    for (int c = 0; c < m.dim; ++c) row.push_back(m.at(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

ojson map_json(const LinearMap& m) {
  ojson o = ojson::object();
  o["name"] = m.name;
  o["matrix"] = matrix_json(m);
  return o;
}

ojson witness_json(const ViolationWitness& w) {
  ojson o = ojson::object();
  o["part"] = w.part;
  o["tuple"] = w.tuple;
  o["left"] = sparse_element_json(w.left);
  o["right"] = sparse_element_json(w.right);
  return o;
}

ojson check_json(const CheckReport& r) {
  ojson o = ojson::object();
  o["kind"] = "check";
  o["axiom"] = axiom_name(r.axiom);
  o["holds"] = r.holds;
  o["tuples_checked"] = r.tuples_checked;
  if (r.witness) o["witness"] = witness_json(*r.witness);
  return o;
}

ojson search_json(const SearchReport& r) {
  ojson o = ojson::object();
  o["kind"] = "search";
  o["target"] = r.target;
  o["seed"] = std::to_string(r.seed);  // uint64 exceeds exact JSON doubles
  o["candidates"] = r.candidates;
  o["partial_coverage"] = r.partial_coverage;
  o["verdict"] = r.verdict;
  ojson hits = ojson::array();
  for (const SearchHit& h : r.hits) {
    ojson ho = ojson::object();
    ho["index"] = h.index;
    ho["map"] = matrix_json(h.map);
    hits.push_back(std::move(ho));
  }
  o["hits"] = std::move(hits);
  ojson ces = ojson::array();
  for (const SearchCounterexample& c : r.counterexamples) {
    ojson co = ojson::object();
    co["instance"] = c.instance;
    co["axiom"] = axiom_name(c.axiom);
    co["witness"] = witness_json(c.witness);
    ces.push_back(std::move(co));
  }
  o["counterexamples"] = std::move(ces);
  return o;
}

std::string dump(const ojson& doc) { return doc.dump(2) + "\n"; }

ojson report_skeleton(const std::string& subject) {
  ojson doc = ojson::object();
  doc["format"] = kReportFormat;
  doc["subject"] = subject;
  doc["results"] = ojson::array();
  return doc;
}

}  // namespace

AlgebraBundle parse_algebra_file(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
  get_object(doc, "document");
  require_keys(doc, "document", {"format", "field", "basis", "ops"},
               {"maps", "metadata"});

  if (get_string(doc.at("format"), "format") != kAlgebraFormat)
    fail("format", std::string("expected \"") + kAlgebraFormat + "\"");

  Field f = parse_field(doc.at("field"), "field");

  const json& basis = get_array(doc.at("basis"), "basis");
  std::vector<std::string> labels;
  labels.reserve(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    labels.push_back(
        get_string(basis[i], "basis[" + std::to_string(i) + "]"));

  AlgebraBundle b;
  try {
    b.space = make_space(std::move(labels));
  } catch (const std::invalid_argument& e) {
    fail("basis", e.what());
  }
  b.field = f;
  const int dim = b.space.dim;

  const json& ops = get_array(doc.at("ops"), "ops");
  for (std::size_t i = 0; i < ops.size(); ++i) {
    const std::string path = "ops[" + std::to_string(i) + "]";
    MultiLinearOp op = parse_op(ops[i], path, dim, f);
    try {
      b.add_op(std::move(op));
    } catch (const std::invalid_argument& e) {
      fail(path, e.what());
    }
  }

  if (doc.contains("maps")) {
    const json& maps = get_array(doc.at("maps"), "maps");
    for (std::size_t i = 0; i < maps.size(); ++i) {
      const std::string path = "maps[" + std::to_string(i) + "]";
      LinearMap m = parse_map(maps[i], path, dim, f);
      try {
        b.add_map(std::move(m));
      } catch (const std::invalid_argument& e) {
        fail(path, e.what());
      }
    }
  }

  if (doc.contains("metadata")) {
    const json& meta = get_object(doc.at("metadata"), "metadata");
    for (const auto& [key, val] : meta.items())
      b.metadata[key] = get_string(val, "metadata." + key);
  }
  return b;
}

std::string emit_algebra_file(const AlgebraBundle& bundle) {
  ojson doc = ojson::object();
  doc["format"] = kAlgebraFormat;
  doc["field"] = field_json(bundle.field);
  doc["basis"] = bundle.space.labels;
  ojson ops = ojson::array();
  for (const MultiLinearOp& op : bundle.ops) ops.push_back(op_json(op));
  doc["ops"] = std::move(ops);
  ojson maps = ojson::array();
  for (const LinearMap& m : bundle.maps) maps.push_back(map_json(m));
  doc["maps"] = std::move(maps);
  doc["metadata"] = ojson(bundle.metadata);  // std::map: keys already sorted
  return dump(doc);
}

std::string emit_report(const std::string& subject,
                        const std::vector<CheckReport>& checks,
                        const std::vector<SearchReport>& searches) {
  ojson doc = report_skeleton(subject);
  for (const CheckReport& r : checks) doc["results"].push_back(check_json(r));
  for (const SearchReport& r : searches)
    doc["results"].push_back(search_json(r));
  return dump(doc);
}

std::string emit_solution_space(const std::string& subject,
                                const SolutionSpace& space) {
  ojson doc = report_skeleton(subject);
  ojson o = ojson::object();
  o["kind"] = "solution-space";
  o["unknowns"] = space.kind == UnknownKind::MapEntries ? "map-entries"
                                                        : "symmetric-product";
  o["space_dim"] = space.space_dim;
  o["dimension"] = space.dimension();
  ojson basis = ojson::array();
  for (int k = 0; k < space.dimension(); ++k) {
    if (space.kind == UnknownKind::MapEntries) {
      basis.push_back(matrix_json(space.map_at(k)));
    } else {
      basis.push_back(op_table_json(space.op_at(k)));
    }
  }
  o["basis"] = std::move(basis);
  doc["results"].push_back(std::move(o));
  return dump(doc);
}

}  // namespace tpa
