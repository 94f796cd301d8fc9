#include "qi/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>

#include "qi/error.hpp"
#include "qi/json_io.hpp"
#include "qi/tableaux.hpp"

namespace qi {

namespace {

bool all_forms_m(const MixedQuiverSetting& s) {
  return std::all_of(s.quiver.arrows.begin(), s.quiver.arrows.end(), [](const Arrow& a) { return a.form == Form::M; });
}

bool identity_involution(const MixedQuiverSetting& s) {
  for (std::size_t v = 1; v <= s.vertex_count(); ++v)
    if (s.i(v) != v) return false;
  return true;
}

bool all_groups(const MixedQuiverSetting& s, std::initializer_list<Group> allowed) {
  return std::all_of(s.groups.begin(), s.groups.end(), [&](Group g) {
    return std::find(allowed.begin(), allowed.end(), g) != allowed.end();
  });
}

bool is_bipartite(const Quiver& q) {
  std::vector<bool> head(q.vertex_count, false), tail(q.vertex_count, false);
  for (const auto& a : q.arrows) {
    head[a.head - 1] = true;
    tail[a.tail - 1] = true;
  }
  for (std::size_t v = 0; v < q.vertex_count; ++v)
    if (head[v] && tail[v]) return false;
  return true;
}

std::size_t need_weight(const std::optional<std::size_t>& w, const std::string& family) {
  if (!w) throw SchemaError("--max-weight is required: the " + family + " generators include tableaux");
  return *w;
}

struct Options {
  std::string setting, rep, rep2, tableau, family, field = "rational";
  std::optional<std::size_t> max_len, max_weight, n;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  bool verbose = false;
};

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

json caps(const Enumeration& e) {
  json c{{"family", e.family}, {"max_path_len", e.set.max_len}, {"normalized", e.normalized}};
  c["max_weight"] = e.set.max_weight ? json(*e.set.max_weight) : json(nullptr);
  return c;
}

Enumeration enumerate_from(const Options& o, const MixedQuiverSetting& s, const Field& f) {
  if (!o.max_len) throw SchemaError("--max-path-len is required");
  return enumerate_for(s, *o.max_len, o.max_weight, f.characteristic());
}

int cmd_validate(const Options& o, std::ostream& out, std::ostream& err) {
  const Field f = Field::parse(o.field);
  const MixedQuiverSetting s = setting_from_json(read_json_file(o.setting));
  const auto v = validate_setting(s, f.characteristic());
  json j{{"command", "validate"}, {"valid", !v.has_value()}, {"field", f.name()}};
  if (v) {
    j["violation"] = {{"condition", v->condition}, {"message", v->message}};
  } else {
    j["normalized"] = is_normalized(s);
    j["vertices"] = s.vertex_count();
    j["arrows"] = s.quiver.arrows.size();
  }
  emit(out, j);
  if (o.verbose) err << (v ? "invalid: condition " + v->condition + ": " + v->message : std::string("ok")) << '\n';
  return v ? 2 : 0;
}

int cmd_enumerate(const Options& o, std::ostream& out, std::ostream& err) {
  const Field f = Field::parse(o.field);
  const MixedQuiverSetting s = setting_from_json(read_json_file(o.setting));
  const Enumeration e = enumerate_from(o, s, f);
  json j = to_json(e.set);
  j["command"] = "enumerate";
  j["family"] = e.family;
  j["normalized"] = e.normalized;
  if (e.normalized) j["setting"] = to_json(e.set.setting);
  emit(out, j);
  if (o.verbose) err << e.family << ": " << e.set.descriptors.size() << " descriptors\n";
  return 0;
}

int cmd_eval(const Options& o, std::ostream& out, std::ostream& err) {
  const Field f = Field::parse(o.field);
  const MixedQuiverSetting s = setting_from_json(read_json_file(o.setting));
  const Representation rep = representation_from_json(read_json_file(o.rep), s, f);
  require_valid(s, f.characteristic());
  check_representation(s, rep);
  const Enumeration e = enumerate_from(o, s, f);
  const Fingerprint fp = fingerprint(e.set.setting, rep, e.set.descriptors);
  emit(out, {{"command", "eval"}, {"field", f.name()}, {"caps", caps(e)}, {"values", to_json(fp)}});
  if (o.verbose) err << fp.values.size() << " values\n";
  return 0;
}

int cmd_compare(const Options& o, std::ostream& out, std::ostream& err) {
  const Field f = Field::parse(o.field);
  const MixedQuiverSetting s = setting_from_json(read_json_file(o.setting));
  const Representation a = representation_from_json(read_json_file(o.rep), s, f);
  const Representation b = representation_from_json(read_json_file(o.rep2), s, f);
  require_valid(s, f.characteristic());
  check_representation(s, a);
  check_representation(s, b);
  const Enumeration e = enumerate_from(o, s, f);
  const Separation sep = separate(e.set, a, b);
  json j = to_json(sep);
  j["command"] = "compare";
  j["field"] = f.name();
  j["caps"] = caps(e);
  emit(out, j);
  if (o.verbose) err << (sep.equal ? "equal under the capped set" : "distinguished by " + *sep.distinguished_by) << '\n';
  return 0;
}

int cmd_identities(const Options& o, std::ostream& out, std::ostream& err) {
  IdentityOptions io;
  io.family = o.family;
  io.n = o.n;
  io.trials = o.trials;
  io.seed = o.seed;
  io.field = Field::parse(o.field);
  const IdentityReport r = check_identities(io);
  json j = to_json(r);
  j["command"] = "check-identities";
  emit(out, j);
  if (o.verbose)
    for (const auto& c : r.cases) err << c.name << ": " << c.passed << "/" << c.trials << '\n';
  return 0;
}

int cmd_bpf(const Options& o, std::ostream& out, std::ostream& err) {
  const Field f = Field::parse(o.field);
  const Tableau t = tableau_from_json(read_json_file(o.tableau));
  validate_tableau(t);
  const json mj = read_json_file(o.rep);
  if (!mj.is_array()) throw SchemaError("the matrices file must be an array with one matrix per slot");
  TableauWithSubstitution tws{t, {}};
  for (const json& m : mj) tws.matrices.push_back(matrix_from_json(m, f));
  validate_tws(tws);
  const Scalar v = bpf(tws);
  emit(out, {{"command", "bpf-eval"}, {"field", f.name()}, {"value", v.to_string()}});
  if (o.verbose) err << "bpf = " << v.to_string() << '\n';
  return 0;
}

}  // namespace

Enumeration enumerate_for(const MixedQuiverSetting& s, std::size_t max_len, std::optional<std::size_t> max_weight,
                          std::uint32_t characteristic) {
  require_valid(s, characteristic);
  Enumeration e;
  if (identity_involution(s) && all_forms_m(s)) {
    if (all_groups(s, {Group::GL})) {
      e.family = "quiver";
      e.set = quiver_invariant_generators(s.quiver, s.dims, max_len);
      return e;
    }
    if (all_groups(s, {Group::SL}) && is_bipartite(s.quiver)) {
      e.family = "bipartite";
      e.set = bipartite_semiinvariant_tableaux(s.quiver, s.dims, need_weight(max_weight, e.family));
      return e;
    }
    const bool loops_only = std::all_of(s.quiver.arrows.begin(), s.quiver.arrows.end(),
                                        [](const Arrow& a) { return a.is_loop(); });
    if (s.vertex_count() == 1 && loops_only && !s.quiver.arrows.empty() &&
        all_groups(s, {Group::O, Group::SO, Group::Sp})) {
      e.family = "matrix";
      e.set = matrix_invariant_generators(s.g(1), s.n(1), s.quiver.arrows.size(), max_len, characteristic);
      e.set.setting = s;
      return e;
    }
  }
  const MixedQuiverSetting t = is_normalized(s) ? s : normalize_setting(s);
  e.normalized = !is_normalized(s);
  if (all_groups(t, {Group::GL, Group::O, Group::Sp})) {
    e.family = "supermixed";
    e.set = supermixed_generators(t, max_len);
  } else {
    e.family = "general";
    e.set = general_generators(t, max_len, need_weight(max_weight, e.family));
  }
  return e;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariants of mixed quiver representations", "qi"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* c) {
    c->add_option("--field", o.field, "rational or fp:<odd prime>");
    c->add_flag("--verbose", o.verbose, "human summary on standard error");
  };
  auto caps_flags = [&](CLI::App* c) {
    c->add_option("--max-path-len", o.max_len, "cap on path length");
    c->add_option("--max-weight", o.max_weight, "cap on total tableau weight");
  };
  auto* validate = app.add_subcommand("validate", "check the conditions of a setting");
  validate->add_option("--setting", o.setting)->required();
  common(validate);
  auto* enumerate = app.add_subcommand("enumerate", "list generator descriptors");
  enumerate->add_option("--setting", o.setting)->required();
  caps_flags(enumerate);
  common(enumerate);
  auto* eval = app.add_subcommand("eval", "fingerprint a representation");
  eval->add_option("--setting", o.setting)->required();
  eval->add_option("--rep", o.rep)->required();
  caps_flags(eval);
  common(eval);
  auto* compare = app.add_subcommand("compare", "separate two representations");
  compare->add_option("--setting", o.setting)->required();
  compare->add_option("--rep", o.rep)->required();
  compare->add_option("--rep2", o.rep2)->required();
  caps_flags(compare);
  common(compare);
  auto* identities = app.add_subcommand("check-identities", "verify an identity family on random instances");
  identities->add_option("--family", o.family)->required();
  identities->add_option("--n", o.n, "matrix size");
  identities->add_option("--trials", o.trials);
  identities->add_option("--seed", o.seed);
  common(identities);
  auto* bpf_eval = app.add_subcommand("bpf-eval", "evaluate bpf of a tableau with substitution");
  bpf_eval->add_option("--tableau", o.tableau)->required();
  bpf_eval->add_option("--rep", o.rep, "JSON array of slot matrices")->required();
  common(bpf_eval);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  try {
    if (*validate) return cmd_validate(o, out, err);
    if (*enumerate) return cmd_enumerate(o, out, err);
    if (*eval) return cmd_eval(o, out, err);
    if (*compare) return cmd_compare(o, out, err);
    if (*identities) return cmd_identities(o, out, err);
    return cmd_bpf(o, out, err);
  } catch (const SchemaError& e) {
    err << "schema error: " << e.what() << '\n';
    return 1;
  } catch (const json::exception& e) {
    err << "schema error: " << e.what() << '\n';
    return 1;
  } catch (const PreconditionError& e) {
    err << "precondition: " << e.what() << '\n';
    return 2;
  } catch (const ArithmeticError& e) {
    err << "arithmetic: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace qi
