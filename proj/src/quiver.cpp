#include "qi/quiver.hpp"

#include "qi/error.hpp"
#include "qi/linalg.hpp"

namespace qi {

namespace {

constexpr int kSampleRetries = 64;

bool is_orthogonal(Group g) { return g == Group::O || g == Group::SO; }

Matrix random_matrix(std::size_t r, std::size_t c, const Field& f, Rng& rng, long long bound) {
  Matrix m(r, c, f);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = random_scalar(rng, f, bound);
  return m;
}

Matrix random_symmetric(std::size_t n, const Field& f, Rng& rng, long long bound, bool skew) {
  Matrix m(n, n, f);
  for (std::size_t i = 0; i < n; ++i) {
    if (!skew) m(i, i) = random_scalar(rng, f, bound);
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = random_scalar(rng, f, bound);
      m(j, i) = skew ? -m(i, j) : m(i, j);
    }
  }
  return m;
}

Matrix sample_gl(std::size_t n, const Field& f, Rng& rng) {
  for (int attempt = 0; attempt < kSampleRetries; ++attempt) {
    Matrix m = random_matrix(n, n, f, rng, 3);
    if (!determinant(m).is_zero()) return m;
  }
  throw ArithmeticError("could not sample an invertible matrix");
}

Matrix sample_sl(std::size_t n, const Field& f, Rng& rng) {
  // Lower unitriangular times upper unitriangular, then a random row swap with a sign fix.
  Matrix lo = Matrix::identity(n, f), up = Matrix::identity(n, f);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) lo(i, j) = random_scalar(rng, f, 2);
    for (std::size_t j = i + 1; j < n; ++j) up(i, j) = random_scalar(rng, f, 2);
  }
  Matrix g = lo * up;
  if (n >= 2) {
    std::size_t a = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long long>(n) - 1));
    std::size_t b = (a + 1) % n;
    for (std::size_t j = 0; j < n; ++j) std::swap(g(a, j), g(b, j));
    for (std::size_t j = 0; j < n; ++j) g(a, j) = -g(a, j);
  }
  return g;
}

// (E - S)(E + S)^{-1}
std::optional<Matrix> cayley(const Matrix& s) {
  const Matrix e = Matrix::identity(s.rows(), s.field());
  const Matrix plus = e + s;
  if (determinant(plus).is_zero()) return std::nullopt;
  return (e - s) * inverse(plus);
}

Matrix sample_so(std::size_t n, const Field& f, Rng& rng) {
  for (int attempt = 0; attempt < kSampleRetries; ++attempt) {
    if (auto g = cayley(random_symmetric(n, f, rng, 3, true))) return *g;
  }
  throw ArithmeticError("degenerate Cayley input for SO(" + std::to_string(n) + ") after retries");
}

Matrix sample_o(std::size_t n, const Field& f, Rng& rng) {
  Matrix g = sample_so(n, f, rng);
  if (n > 0 && uniform_int(rng, 0, 1) == 1) {
    for (std::size_t i = 0; i < n; ++i) g(i, 0) = -g(i, 0);
  }
  return g;
}

Matrix sample_sp(std::size_t n, const Field& f, Rng& rng) {
  const Matrix j = Matrix::symplectic_unit(n, f);
  for (int attempt = 0; attempt < kSampleRetries; ++attempt) {
    // S = -J M with M symmetric, so J S = M is symmetric.
    Matrix s = -(j * random_symmetric(n, f, rng, 3, false));
    if (auto g = cayley(s)) return *g;
  }
  throw ArithmeticError("degenerate Cayley input for Sp(" + std::to_string(n) + ") after retries");
}

Matrix sample_component(Group g, std::size_t n, const Field& f, Rng& rng) {
  switch (g) {
    case Group::GL: return sample_gl(n, f, rng);
    case Group::SL: return sample_sl(n, f, rng);
    case Group::O: return sample_o(n, f, rng);
    case Group::SO: return sample_so(n, f, rng);
    case Group::Sp: return sample_sp(n, f, rng);
  }
  return sample_gl(n, f, rng);
}

std::string vertex_text(std::size_t v) { return "vertex " + std::to_string(v); }

}  // namespace

std::string_view to_string(Group g) {
  switch (g) {
    case Group::GL: return "GL";
    case Group::O: return "O";
    case Group::Sp: return "Sp";
    case Group::SL: return "SL";
    case Group::SO: return "SO";
  }
  return "?";
}

std::string_view to_string(Form f) {
  switch (f) {
    case Form::M: return "M";
    case Form::SPlus: return "S+";
    case Form::SMinus: return "S-";
    case Form::LPlus: return "L+";
    case Form::LMinus: return "L-";
  }
  return "?";
}

Group parse_group(std::string_view s) {
  for (Group g : {Group::GL, Group::O, Group::Sp, Group::SL, Group::SO})
    if (to_string(g) == s) return g;
  throw SchemaError("unknown group label '" + std::string(s) + "'");
}

Form parse_form(std::string_view s) {
  for (Form f : {Form::M, Form::SPlus, Form::SMinus, Form::LPlus, Form::LMinus})
    if (to_string(f) == s) return f;
  throw SchemaError("unknown form label '" + std::string(s) + "'");
}

std::optional<std::size_t> Quiver::find(std::string_view id) const {
  for (std::size_t a = 0; a < arrows.size(); ++a)
    if (arrows[a].id == id) return a;
  return std::nullopt;
}

MixedQuiverSetting MixedQuiverSetting::plain(Quiver q, std::vector<std::size_t> dims) {
  MixedQuiverSetting s;
  const std::size_t l = q.vertex_count;
  s.quiver = std::move(q);
  s.dims = std::move(dims);
  s.groups.assign(l, Group::GL);
  s.involution.resize(l);
  for (std::size_t v = 1; v <= l; ++v) s.involution[v - 1] = v;
  return s;
}

bool MixedQuiverSetting::is_double() const {
  for (const auto& a : quiver.arrows)
    if (a.transpose_of) return true;
  return false;
}

bool MixedQuiverSetting::has_group(Group g) const {
  for (Group x : groups)
    if (x == g) return true;
  return false;
}

std::optional<Violation> validate_setting(const MixedQuiverSetting& s, std::uint32_t characteristic) {
  const std::size_t l = s.vertex_count();
  if (s.dims.size() != l || s.groups.size() != l || s.involution.size() != l) {
    return Violation{"structure", "dims, groups and involution must have one entry per vertex"};
  }
  for (std::size_t v = 1; v <= l; ++v) {
    if (s.n(v) == 0) return Violation{"structure", "dimension of " + vertex_text(v) + " must be positive"};
    if (s.i(v) < 1 || s.i(v) > l) return Violation{"structure", "involution of " + vertex_text(v) + " out of range"};
  }
  for (const auto& a : s.quiver.arrows) {
    if (a.head < 1 || a.head > l || a.tail < 1 || a.tail > l) {
      return Violation{"structure", "arrow " + a.id + " has an endpoint out of range"};
    }
  }
  for (std::size_t v = 1; v <= l; ++v) {
    if (s.g(v) == Group::Sp && s.n(v) % 2 != 0) {
      return Violation{"a", vertex_text(v) + " is Sp with odd dimension " + std::to_string(s.n(v))};
    }
  }
  for (std::size_t v = 1; v <= l; ++v) {
    if (is_orthogonal(s.g(v)) && characteristic == 2) {
      return Violation{"b", vertex_text(v) + " is orthogonal over a field of characteristic 2"};
    }
  }
  for (std::size_t v = 1; v <= l; ++v) {
    if (s.i(s.i(v)) != v) return Violation{"c", "involution is not an involution at " + vertex_text(v)};
  }
  for (std::size_t v = 1; v <= l; ++v) {
    if (s.n(s.i(v)) != s.n(v)) return Violation{"d", "n_i(v) != n_v at " + vertex_text(v)};
  }
  for (std::size_t v = 1; v <= l; ++v) {
    Group g = s.g(v);
    if ((g == Group::O || g == Group::Sp || g == Group::SO) && s.i(v) != v) {
      return Violation{"e", vertex_text(v) + " carries " + std::string(to_string(g)) + " but i(v) != v"};
    }
  }
  // A doubled setting is still checked against its own conditions.
  for (const auto& a : s.quiver.arrows) {
    if (a.form != Form::M && s.n(a.head) != s.n(a.tail)) {
      return Violation{"f", "arrow " + a.id + " has a form but n_head != n_tail"};
    }
  }
  for (const auto& a : s.quiver.arrows) {
    if (a.is_loop() && (a.form == Form::SPlus || a.form == Form::SMinus) && !is_orthogonal(s.g(a.head))) {
      return Violation{"g", "symmetric/skew loop " + a.id + " at a vertex that is not O or SO"};
    }
  }
  for (const auto& a : s.quiver.arrows) {
    if (a.is_loop() && (a.form == Form::LPlus || a.form == Form::LMinus) && s.g(a.head) != Group::Sp) {
      return Violation{"h", "L-form loop " + a.id + " at a vertex that is not Sp"};
    }
  }
  for (const auto& a : s.quiver.arrows) {
    if (!a.is_loop() && a.form != Form::M &&
        (s.i(a.head) != a.tail || (a.form != Form::SPlus && a.form != Form::SMinus))) {
      return Violation{"i", "non-loop arrow " + a.id + " with form " + std::string(to_string(a.form)) +
                                " must join partner vertices and be S+ or S-"};
    }
  }
  return std::nullopt;
}

void require_valid(const MixedQuiverSetting& s, std::uint32_t characteristic) {
  if (auto v = validate_setting(s, characteristic)) {
    throw PreconditionError("invalid mixed quiver setting, condition " + v->condition + ": " + v->message);
  }
}

bool is_normalized(const MixedQuiverSetting& s) {
  for (std::size_t v = 1; v <= s.vertex_count(); ++v) {
    if ((s.g(v) == Group::GL || s.g(v) == Group::SL) && s.i(v) == v) return false;
  }
  return true;
}

MixedQuiverSetting normalize_setting(const MixedQuiverSetting& s) {
  MixedQuiverSetting out = s;
  const std::size_t l = s.vertex_count();
  for (std::size_t v = 1; v <= l; ++v) {
    if ((s.g(v) == Group::GL || s.g(v) == Group::SL) && s.i(v) == v) {
      const std::size_t mirror = ++out.quiver.vertex_count;
      out.dims.push_back(s.n(v));
      out.groups.push_back(s.g(v));
      out.involution.push_back(v);
      out.involution[v - 1] = mirror;
    }
  }
  return out;
}

MixedQuiverSetting double_quiver(const MixedQuiverSetting& s) {
  if (s.is_double()) throw PreconditionError("double_quiver is defined on base settings only");
  MixedQuiverSetting out = s;
  for (std::size_t a = 0; a < s.quiver.arrows.size(); ++a) {
    const Arrow& x = s.quiver.arrows[a];
    if (x.form != Form::M) continue;
    out.quiver.arrows.push_back(Arrow{x.id + "^T", s.i(x.tail), s.i(x.head), Form::M, a});
  }
  return out;
}

std::size_t letter_head(const MixedQuiverSetting& s, Letter l) {
  const Arrow& a = s.arrow(l.arrow);
  return l.transposed ? s.i(a.tail) : a.head;
}

std::size_t letter_tail(const MixedQuiverSetting& s, Letter l) {
  const Arrow& a = s.arrow(l.arrow);
  return l.transposed ? s.i(a.head) : a.tail;
}

std::string letter_name(const MixedQuiverSetting& s, Letter l) {
  return s.arrow(l.arrow).id + (l.transposed ? "^T" : "");
}

Letter parse_letter(const MixedQuiverSetting& s, std::string_view name) {
  bool transposed = false;
  std::string_view base = name;
  if (name.ends_with("^T")) {
    transposed = true;
    base = name.substr(0, name.size() - 2);
  }
  auto a = s.quiver.find(base);
  if (!a || s.arrow(*a).transpose_of) throw SchemaError("unknown arrow '" + std::string(name) + "'");
  if (transposed && s.arrow(*a).form != Form::M) {
    throw PreconditionError("arrow " + std::string(base) + " has form " +
                            std::string(to_string(s.arrow(*a).form)) + " and no formal transpose");
  }
  return Letter{*a, transposed};
}

void check_representation(const MixedQuiverSetting& s, const Representation& rep) {
  if (rep.arrows.size() != s.quiver.arrows.size()) {
    throw PreconditionError("representation has " + std::to_string(rep.arrows.size()) +
                            " matrices for " + std::to_string(s.quiver.arrows.size()) + " arrows");
  }
  for (std::size_t a = 0; a < rep.arrows.size(); ++a) {
    const Arrow& x = s.arrow(a);
    const Matrix& h = rep.arrows[a];
    if (h.rows() != s.n(x.head) || h.cols() != s.n(x.tail)) {
      throw PreconditionError("arrow " + x.id + " needs a " + std::to_string(s.n(x.head)) + "x" +
                              std::to_string(s.n(x.tail)) + " matrix");
    }
    if (!(h.field() == rep.field)) throw PreconditionError("arrow " + x.id + ": field mismatch");
    bool ok = true;
    switch (x.form) {
      case Form::M: break;
      case Form::SPlus: ok = h.is_symmetric(); break;
      case Form::SMinus: ok = h.is_skew(); break;
      case Form::LPlus: ok = (h * Matrix::symplectic_unit(h.rows(), rep.field)).is_symmetric(); break;
      case Form::LMinus: ok = (h * Matrix::symplectic_unit(h.rows(), rep.field)).is_skew(); break;
    }
    if (!ok) {
      throw PreconditionError("arrow " + x.id + " violates its form " + std::string(to_string(x.form)));
    }
  }
}

Representation sample_representation(const MixedQuiverSetting& s, const Field& f, Rng& rng,
                                      long long bound) {
  Representation rep{f, {}};
  rep.arrows.reserve(s.quiver.arrows.size());
  for (const auto& x : s.quiver.arrows) {
    const std::size_t r = s.n(x.head), c = s.n(x.tail);
    switch (x.form) {
      case Form::M: rep.arrows.push_back(random_matrix(r, c, f, rng, bound)); break;
      case Form::SPlus: rep.arrows.push_back(random_symmetric(r, f, rng, bound, false)); break;
      case Form::SMinus: rep.arrows.push_back(random_symmetric(r, f, rng, bound, true)); break;
      // h J = S  <=>  h = -S J, since J^{-1} = -J.
      case Form::LPlus:
        rep.arrows.push_back(-(random_symmetric(r, f, rng, bound, false) * Matrix::symplectic_unit(r, f)));
        break;
      case Form::LMinus:
        rep.arrows.push_back(-(random_symmetric(r, f, rng, bound, true) * Matrix::symplectic_unit(r, f)));
        break;
    }
  }
  return rep;
}

Matrix phi_D_value(const MixedQuiverSetting& s, Letter l, const Representation& rep) {
  if (l.arrow >= rep.arrows.size()) throw PreconditionError("letter refers to a missing arrow");
  const Matrix& h = rep.arrows[l.arrow];
  if (!l.transposed) return h;
  const Arrow& a = s.arrow(l.arrow);
  if (a.form != Form::M) {
    throw PreconditionError("arrow " + a.id + " has form " + std::string(to_string(a.form)) +
                            " and no formal transpose");
  }
  Matrix t = h.transpose();
  if (s.g(a.tail) == Group::Sp) t = Matrix::symplectic_unit(s.n(a.tail), rep.field) * t;
  if (s.g(a.head) == Group::Sp) t = t * Matrix::symplectic_unit(s.n(a.head), rep.field);
  return t;
}

Matrix component(const MixedQuiverSetting& s, const GroupElement& g, std::size_t v) {
  const std::size_t w = s.i(v);
  if (v <= w) {
    const auto& m = g.stored.at(v - 1);
    if (!m) throw PreconditionError("group element lacks the component at " + vertex_text(v));
    return *m;
  }
  const auto& m = g.stored.at(w - 1);
  if (!m) throw PreconditionError("group element lacks the component at " + vertex_text(w));
  return inverse(*m).transpose();
}

GroupElement identity_element(const MixedQuiverSetting& s, const Field& f) {
  GroupElement g;
  g.stored.resize(s.vertex_count());
  for (std::size_t v = 1; v <= s.vertex_count(); ++v) {
    if (v <= s.i(v)) g.stored[v - 1] = Matrix::identity(s.n(v), f);
  }
  return g;
}

GroupElement compose(const MixedQuiverSetting& s, const GroupElement& g, const GroupElement& h) {
  GroupElement out;
  out.stored.resize(s.vertex_count());
  for (std::size_t v = 1; v <= s.vertex_count(); ++v) {
    if (v <= s.i(v)) out.stored[v - 1] = component(s, g, v) * component(s, h, v);
  }
  return out;
}

std::optional<std::string> check_group_element(const MixedQuiverSetting& s, const GroupElement& g) {
  if (g.stored.size() != s.vertex_count()) return "group element has the wrong number of components";
  for (std::size_t v = 1; v <= s.vertex_count(); ++v) {
    if (v > s.i(v)) {
      if (g.stored[v - 1]) return "component stored at derived " + vertex_text(v);
      continue;
    }
    if (!g.stored[v - 1]) return "missing component at " + vertex_text(v);
    const Matrix& m = *g.stored[v - 1];
    if (m.rows() != s.n(v) || !m.is_square()) return "component at " + vertex_text(v) + " has the wrong shape";
    const Field& f = m.field();
    const Matrix e = Matrix::identity(s.n(v), f);
    const Scalar det = determinant(m);
    if (det.is_zero()) return "component at " + vertex_text(v) + " is singular";
    const Group grp = s.g(v);
    if ((grp == Group::O || grp == Group::SO) && !(m * m.transpose() == e)) {
      return "component at " + vertex_text(v) + " is not orthogonal";
    }
    if (grp == Group::Sp) {
      const Matrix j = Matrix::symplectic_unit(s.n(v), f);
      if (!(m.transpose() * j * m == j)) return "component at " + vertex_text(v) + " is not symplectic";
    }
    if ((grp == Group::SL || grp == Group::SO) && !det.is_one()) {
      return "component at " + vertex_text(v) + " has determinant " + det.to_string();
    }
  }
  return std::nullopt;
}

GroupElement sample_group_element(const MixedQuiverSetting& s, const Field& f, Rng& rng, SampleMode mode) {
  if (f.characteristic() == 2) throw PreconditionError("characteristic 2 is not supported");
  GroupElement g;
  g.stored.resize(s.vertex_count());
  for (std::size_t v = 1; v <= s.vertex_count(); ++v) {
    if (v > s.i(v)) continue;
    Group grp = s.g(v);
    if (mode == SampleMode::relaxed) {
      if (grp == Group::SL) grp = Group::GL;
      if (grp == Group::SO) grp = Group::O;
    }
    g.stored[v - 1] = sample_component(grp, s.n(v), f, rng);
  }
  return g;
}

Representation act(const MixedQuiverSetting& s, const GroupElement& g, const Representation& rep) {
  check_representation(s, rep);
  std::vector<Matrix> comp, comp_inv;
  comp.reserve(s.vertex_count());
  comp_inv.reserve(s.vertex_count());
  for (std::size_t v = 1; v <= s.vertex_count(); ++v) {
    comp.push_back(component(s, g, v));
    comp_inv.push_back(inverse(comp.back()));
  }
  Representation out{rep.field, {}};
  out.arrows.reserve(rep.arrows.size());
  for (std::size_t a = 0; a < rep.arrows.size(); ++a) {
    const Arrow& x = s.arrow(a);
    out.arrows.push_back(comp[x.head - 1] * rep.arrows[a] * comp_inv[x.tail - 1]);
  }
  return out;
}

}  // namespace qi
