#include "qi/json_io.hpp"

#include <fstream>
#include <set>

#include "qi/error.hpp"

namespace qi {

namespace {

void check_keys(const json& j, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!j.is_object()) throw SchemaError(where + " must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) throw SchemaError("unknown key '" + key + "' in " + where);
  }
}

const json& need(const json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError("missing key '" + std::string(key) + "' in " + where);
  return *it;
}

std::size_t need_size(const json& j, const std::string& what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw SchemaError(what + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

std::string need_string(const json& j, const std::string& what) {
  if (!j.is_string()) throw SchemaError(what + " must be a string");
  return j.get<std::string>();
}

Cell cell_from_json(const json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 2) throw SchemaError(what + " must be [column, row]");
  return {need_size(j[0], what + " column"), need_size(j[1], what + " row")};
}

json scalar_json(const Scalar& s) { return s.to_string(); }

std::string sample_mode_name(SampleMode m) { return m == SampleMode::strict ? "strict" : "relaxed"; }

}  // namespace

MixedQuiverSetting setting_from_json(const json& j) {
  check_keys(j, {"vertices", "arrows", "involution"}, "setting");
  MixedQuiverSetting s;
  const json& vs = need(j, "vertices", "setting");
  if (!vs.is_array() || vs.empty()) throw SchemaError("vertices must be a nonempty array");
  const std::size_t l = vs.size();
  s.quiver.vertex_count = l;
  s.dims.assign(l, 0);
  s.groups.assign(l, Group::GL);
  std::vector<bool> seen(l, false);
  for (const json& v : vs) {
    check_keys(v, {"id", "dim", "group"}, "vertex");
    const std::size_t id = need_size(need(v, "id", "vertex"), "vertex id");
    if (id < 1 || id > l || seen[id - 1]) throw SchemaError("vertex ids must be 1.." + std::to_string(l) + " without repeats");
    seen[id - 1] = true;
    s.dims[id - 1] = need_size(need(v, "dim", "vertex"), "vertex dim");
    s.groups[id - 1] = parse_group(need_string(need(v, "group", "vertex"), "vertex group"));
  }
  const json& as = need(j, "arrows", "setting");
  if (!as.is_array()) throw SchemaError("arrows must be an array");
  std::set<std::string> ids;
  for (const json& a : as) {
    check_keys(a, {"id", "head", "tail", "form"}, "arrow");
    Arrow x;
    x.id = need_string(need(a, "id", "arrow"), "arrow id");
    if (x.id.empty() || x.id.find(' ') != std::string::npos || x.id.ends_with("^T"))
      throw SchemaError("bad arrow id '" + x.id + "'");
    if (!ids.insert(x.id).second) throw SchemaError("duplicate arrow id '" + x.id + "'");
    x.head = need_size(need(a, "head", "arrow"), "arrow head");
    x.tail = need_size(need(a, "tail", "arrow"), "arrow tail");
    if (x.head < 1 || x.head > l || x.tail < 1 || x.tail > l) throw SchemaError("arrow " + x.id + " has an unknown vertex");
    x.form = a.contains("form") ? parse_form(need_string(a["form"], "arrow form")) : Form::M;
    s.quiver.arrows.push_back(std::move(x));
  }
  s.involution.resize(l);
  for (std::size_t v = 1; v <= l; ++v) s.involution[v - 1] = v;
  if (j.contains("involution")) {
    const json& inv = j["involution"];
    if (!inv.is_array()) throw SchemaError("involution must be an array of pairs");
    std::vector<bool> set(l, false);
    for (const json& p : inv) {
      if (!p.is_array() || p.size() != 2) throw SchemaError("involution entries must be pairs [v, i(v)]");
      const std::size_t a = need_size(p[0], "involution vertex"), b = need_size(p[1], "involution vertex");
      if (a < 1 || a > l || b < 1 || b > l) throw SchemaError("involution names an unknown vertex");
      if (set[a - 1] || (a != b && set[b - 1])) throw SchemaError("vertex listed twice in the involution");
      set[a - 1] = set[b - 1] = true;
      s.involution[a - 1] = b;
      s.involution[b - 1] = a;
    }
  }
  return s;
}

json to_json(const MixedQuiverSetting& s) {
  json vs = json::array(), as = json::array(), inv = json::array();
  for (std::size_t v = 1; v <= s.vertex_count(); ++v) {
    vs.push_back({{"id", v}, {"dim", s.n(v)}, {"group", std::string(to_string(s.g(v)))}});
    if (v <= s.i(v)) inv.push_back({v, s.i(v)});
  }
  for (const auto& a : s.quiver.arrows)
    if (!a.transpose_of)
      as.push_back({{"id", a.id}, {"head", a.head}, {"tail", a.tail}, {"form", std::string(to_string(a.form))}});
  return {{"vertices", vs}, {"arrows", as}, {"involution", inv}};
}

Matrix matrix_from_json(const json& j, const Field& f) {
  if (!j.is_array()) throw SchemaError("a matrix must be an array of rows");
  const std::size_t rows = j.size();
  std::size_t cols = 0;
  std::vector<Scalar> entries;
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array()) throw SchemaError("matrix rows must be arrays");
    if (i == 0) cols = j[i].size();
    if (j[i].size() != cols) throw SchemaError("ragged matrix");
    for (const json& e : j[i]) {
      if (e.is_string()) entries.push_back(f.parse_scalar(e.get<std::string>()));
      else if (e.is_number_integer()) entries.push_back(f.from_int(e.get<long long>()));
      else throw SchemaError("matrix entries must be strings or integers");
    }
  }
  if (rows == 0) return Matrix(0, 0, f);
  return Matrix(rows, cols, std::move(entries));
}

json to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    out.push_back(std::move(row));
  }
  return out;
}

Representation representation_from_json(const json& j, const MixedQuiverSetting& s, const Field& f) {
  if (!j.is_object()) throw SchemaError("a representation must be an object keyed by arrow id");
  for (const auto& [key, value] : j.items())
    if (!s.quiver.find(key)) throw SchemaError("representation names unknown arrow '" + key + "'");
  Representation rep{f, {}};
  for (const auto& a : s.quiver.arrows) {
    if (a.transpose_of) continue;
    auto it = j.find(a.id);
    if (it == j.end()) throw SchemaError("representation is missing arrow '" + a.id + "'");
    Matrix m = matrix_from_json(*it, f);
    const std::size_t r = s.n(a.head), c = s.n(a.tail);
    if (m.rows() != r || (r > 0 && m.cols() != c))
      throw SchemaError("arrow " + a.id + " needs a " + std::to_string(r) + "x" + std::to_string(c) + " matrix");
    if (r == 0) m = Matrix(0, c, f);
    rep.arrows.push_back(std::move(m));
  }
  return rep;
}

json to_json(const MixedQuiverSetting& s, const Representation& rep) {
  json out = json::object();
  for (std::size_t a = 0; a < rep.arrows.size(); ++a) out[s.arrow(a).id] = to_json(rep.arrows[a]);
  return out;
}

Tableau tableau_from_json(const json& j) {
  check_keys(j, {"columns", "arrows"}, "tableau");
  Tableau t;
  const json& cs = need(j, "columns", "tableau");
  if (!cs.is_array()) throw SchemaError("tableau columns must be an array");
  for (const json& c : cs) t.columns.push_back(need_size(c, "column length"));
  const json& as = need(j, "arrows", "tableau");
  if (!as.is_array()) throw SchemaError("tableau arrows must be an array");
  for (const json& a : as) {
    check_keys(a, {"head", "tail", "slot"}, "tableau arrow");
    TableauArrow x;
    x.head = cell_from_json(need(a, "head", "tableau arrow"), "head");
    x.tail = cell_from_json(need(a, "tail", "tableau arrow"), "tail");
    x.slot = need_size(need(a, "slot", "tableau arrow"), "slot");
    t.arrows.push_back(x);
  }
  return t;
}

json to_json(const Tableau& t) {
  json as = json::array();
  for (const auto& a : t.arrows)
    as.push_back({{"head", {a.head.column, a.head.row}}, {"tail", {a.tail.column, a.tail.row}}, {"slot", a.slot}});
  return {{"columns", t.columns}, {"arrows", as}};
}

json word_to_json(const MixedQuiverSetting& s, const Word& w) { return word_to_names(s, w); }

Word word_from_json(const MixedQuiverSetting& s, const json& j) {
  if (!j.is_array()) throw SchemaError("a word must be an array of letter names");
  std::vector<std::string> names;
  for (const json& x : j) names.push_back(need_string(x, "letter"));
  return parse_word(s, names);
}

json to_json(const MixedQuiverSetting& s, const GeneratorDescriptor& d) {
  if (d.is_sigma()) return {{"kind", "sigma"}, {"id", d.id}, {"t", d.sigma().t}, {"word", word_to_json(s, d.sigma().word)}};
  const auto& b = d.bpf();
  json words = json::object();
  for (std::size_t k = 0; k < b.slot_words.size(); ++k) words[std::to_string(k + 1)] = word_to_json(s, b.slot_words[k]);
  json chars = json::array();
  for (const auto& [v, e] : b.column_characters) chars.push_back({{"vertex", v}, {"exponent", e}});
  json out{{"kind", "bpf"},       {"id", d.id},       {"tableau", to_json(b.tableau)}, {"slot_words", words},
           {"weight", b.weight}, {"characters", chars}};
  if (b.odd_so) out["odd_so"] = true;
  return out;
}

GeneratorDescriptor descriptor_from_json(const MixedQuiverSetting& s, const json& j) {
  if (!j.is_object()) throw SchemaError("a descriptor must be an object");
  const std::string kind = need_string(need(j, "kind", "descriptor"), "kind");
  if (kind == "sigma") {
    check_keys(j, {"kind", "id", "t", "word"}, "sigma descriptor");
    SigmaOfPath d;
    d.t = static_cast<unsigned>(need_size(need(j, "t", "sigma descriptor"), "t"));
    d.word = word_from_json(s, need(j, "word", "sigma descriptor"));
    return {sigma_id(s, d), d};
  }
  if (kind != "bpf") throw SchemaError("descriptor kind must be sigma or bpf");
  check_keys(j, {"kind", "id", "tableau", "slot_words", "weight", "characters", "odd_so"}, "bpf descriptor");
  BpfOfTableau b;
  b.tableau = tableau_from_json(need(j, "tableau", "bpf descriptor"));
  const json& words = need(j, "slot_words", "bpf descriptor");
  if (!words.is_object()) throw SchemaError("slot_words must be an object keyed by slot number");
  b.slot_words.resize(words.size());
  for (const auto& [key, value] : words.items()) {
    std::size_t slot = 0;
    try {
      slot = std::stoul(key);
    } catch (const std::exception&) {
      throw SchemaError("slot_words key '" + key + "' is not a slot number");
    }
    if (slot < 1 || slot > b.slot_words.size()) throw SchemaError("slot_words keys must be 1..s");
    b.slot_words[slot - 1] = word_from_json(s, value);
  }
  if (j.contains("weight"))
    for (const json& w : j["weight"]) b.weight.push_back(need_size(w, "weight"));
  if (j.contains("characters"))
    for (const json& c : j["characters"])
      b.column_characters.emplace_back(need_size(need(c, "vertex", "character"), "vertex"),
                                       need(c, "exponent", "character").get<int>());
  b.odd_so = j.value("odd_so", false);
  std::string id = j.contains("id") ? need_string(j["id"], "id") : std::string();
  if (id.empty() && b.weight.size() == s.vertex_count()) id = "bpf[" + tableau_signature(s, b) + "]";
  return {id, std::move(b)};
}

json to_json(const GeneratorSet& gs) {
  json ds = json::array();
  for (const auto& d : gs.descriptors) ds.push_back(to_json(gs.setting, d));
  json out{{"max_path_len", gs.max_len}, {"count", gs.descriptors.size()}, {"descriptors", ds}, {"notes", gs.notes}};
  out["max_weight"] = gs.max_weight ? json(*gs.max_weight) : json(nullptr);
  return out;
}

json to_json(const MixedQuiverSetting& s, const TracePolynomial& p) {
  json out = json::array();
  for (const auto& [mono, coeff] : p.terms()) {
    json symbols = json::array();
    for (const auto& sym : mono) symbols.push_back({{"level", sym.level}, {"word", word_to_json(s, sym.word)}});
    out.push_back({{"coeff", coeff.to_string()}, {"symbols", symbols}});
  }
  return out;
}

TracePolynomial trace_polynomial_from_json(const MixedQuiverSetting& s, const json& j, const Field& f) {
  if (!j.is_array()) throw SchemaError("a trace polynomial must be an array of terms");
  TracePolynomial p(f);
  for (const json& term : j) {
    check_keys(term, {"coeff", "symbols"}, "trace polynomial term");
    TracePolynomial::Monomial m;
    for (const json& sym : need(term, "symbols", "term")) {
      check_keys(sym, {"level", "word"}, "trace symbol");
      m.push_back({static_cast<unsigned>(need_size(need(sym, "level", "symbol"), "level")),
                   word_from_json(s, need(sym, "word", "symbol"))});
    }
    p.add_term(std::move(m), f.parse_scalar(need_string(need(term, "coeff", "term"), "coeff")));
  }
  return p;
}

json to_json(const Fingerprint& fp) {
  json out = json::array();
  for (const auto& [id, v] : fp.values) out.push_back({{"id", id}, {"value", scalar_json(v)}});
  return out;
}

json to_json(const Separation& sep) {
  json out{{"verdict", sep.equal ? "equal" : "distinguished"}, {"descriptors_checked", sep.descriptors_checked},
           {"max_path_len", sep.max_len}};
  out["max_weight"] = sep.max_weight ? json(*sep.max_weight) : json(nullptr);
  if (!sep.equal) {
    out["distinguished_by"] = *sep.distinguished_by;
    out["values"] = {scalar_json(sep.values->first), scalar_json(sep.values->second)};
  }
  out["caveats"] = sep.caveats;
  return out;
}

json to_json(const InvarianceReport& r) {
  json ds = json::array();
  for (const auto& d : r.descriptors) {
    json x{{"id", d.id}, {"passed", d.passed}, {"failed", d.failed}, {"covariant", d.covariant},
           {"failure_seeds", d.failure_seeds}};
    if (d.error) x["error"] = *d.error;
    ds.push_back(std::move(x));
  }
  return {{"trials", r.trials}, {"seed", r.seed},          {"field", r.field.name()},
          {"mode", sample_mode_name(r.mode)}, {"failures", r.failures}, {"descriptors", ds}};
}

json to_json(const IdentityReport& r) {
  json cs = json::array();
  for (const auto& c : r.cases)
    cs.push_back({{"name", c.name}, {"trials", c.trials}, {"passed", c.passed}, {"failure_seeds", c.failure_seeds}});
  json out{{"family", r.family}, {"trials", r.trials}, {"seed", r.seed}, {"field", r.field.name()},
           {"ok", r.ok()},       {"cases", cs}};
  if (r.n) out["n"] = r.n;
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

}  // namespace qi
