#include "qi/invariant_eval.hpp"

#include "qi/berkowitz.hpp"
#include "qi/error.hpp"
#include "qi/linalg.hpp"
#include "qi/parallel.hpp"
#include "qi/random.hpp"

namespace qi {

namespace {

Matrix closed_path_value(const MixedQuiverSetting& s, const Representation& rep, const Word& w) {
  require_composable(s, w);
  if (!is_closed(s, w)) throw PreconditionError("word " + word_to_string(s, w) + " is not closed");
  return path_value(s, rep, w);
}

Scalar evaluate_bpf(const MixedQuiverSetting& s, const BpfOfTableau& b, const Representation& rep) {
  TableauWithSubstitution tws{b.tableau, {}};
  tws.matrices.reserve(b.slot_words.size());
  for (const Word& w : b.slot_words) tws.matrices.push_back(path_value(s, rep, w));
  if (b.tableau.arrows.empty()) return rep.field.one();
  return bpf(tws);
}

// a + b eps with eps^2 = 0.
struct Dual {
  Scalar a, b;
  friend Dual operator+(const Dual& x, const Dual& y) { return {x.a + y.a, x.b + y.b}; }
  friend Dual operator*(const Dual& x, const Dual& y) { return {x.a * y.a, x.a * y.b + x.b * y.a}; }
  Dual operator-() const { return {-a, -b}; }
};

Representation zero_like(const MixedQuiverSetting& s, const Field& f) {
  Representation r{f, {}};
  for (const auto& x : s.quiver.arrows) r.arrows.push_back(Matrix::zero(s.n(x.head), s.n(x.tail), f));
  return r;
}

// Directional derivative of sigma_t(path value) along `dir`.
Scalar sigma_derivative(const MixedQuiverSetting& s, const SigmaOfPath& d, const Representation& rep,
                        const Representation& dir) {
  require_composable(s, d.word);
  if (!is_closed(s, d.word)) throw PreconditionError("word " + word_to_string(s, d.word) + " is not closed");
  Matrix value = phi_D_value(s, d.word.front(), rep);
  Matrix slope = phi_D_value(s, d.word.front(), dir);
  for (std::size_t k = 1; k < d.word.size(); ++k) {
    const Matrix v = phi_D_value(s, d.word[k], rep);
    const Matrix e = phi_D_value(s, d.word[k], dir);
    slope = slope * v + value * e;
    value = value * v;
  }
  const std::size_t n = value.rows();
  if (d.t > n) return rep.field.zero();
  std::vector<Dual> grid;
  grid.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) grid.push_back({value(i, j), slope(i, j)});
  const Dual zero{rep.field.zero(), rep.field.zero()}, one{rep.field.one(), rep.field.zero()};
  const auto c = berkowitz(grid, n, zero, one);
  // det(lambda E - A) = sum c_k lambda^(n-k), c_k = (-1)^k sigma_k
  return d.t % 2 == 0 ? c[d.t].b : -c[d.t].b;
}

// Linear coefficient of lambda -> value(rep + lambda dir), by exact interpolation.
Scalar bpf_derivative(const MixedQuiverSetting& s, const BpfOfTableau& b, const Representation& rep,
                      const Representation& dir) {
  std::size_t degree = 0;
  for (const auto& a : b.tableau.arrows) degree += b.slot_words.at(a.slot - 1).size();
  if (degree == 0) return rep.field.zero();
  const Field& f = rep.field;
  if (f.is_prime() && f.modulus() <= degree) throw PreconditionError("field too small for interpolation");
  std::vector<Scalar> xs, ys;
  for (std::size_t k = 0; k <= degree; ++k) {
    const Scalar lambda = f.from_int(static_cast<long long>(k));
    Representation r = rep;
    for (std::size_t a = 0; a < r.arrows.size(); ++a) r.arrows[a] += dir.arrows[a] * lambda;
    xs.push_back(lambda);
    ys.push_back(evaluate_bpf(s, b, r));
  }
  // p'(0) = sum_k y_k L_k'(0)
  Scalar out = f.zero();
  for (std::size_t k = 0; k <= degree; ++k) {
    Scalar denom = f.one();
    for (std::size_t j = 0; j <= degree; ++j)
      if (j != k) denom *= xs[k] - xs[j];
    // L_k(x) = prod_{j != k} (x - x_j) / denom; coefficient of x in the numerator
    Scalar linear = f.zero();
    for (std::size_t m = 0; m <= degree; ++m) {
      if (m == k) continue;
      Scalar term = f.one();
      for (std::size_t j = 0; j <= degree; ++j)
        if (j != k && j != m) term *= -xs[j];
      linear += term;
    }
    out += ys[k] * linear / denom;
  }
  return out;
}

}  // namespace

Scalar evaluate_descriptor(const MixedQuiverSetting& s, const GeneratorDescriptor& d, const Representation& rep) {
  if (d.is_sigma()) {
    const auto& sg = d.sigma();
    return sigma(closed_path_value(s, rep, sg.word), sg.t);
  }
  return evaluate_bpf(s, d.bpf(), rep);
}

Fingerprint fingerprint(const MixedQuiverSetting& s, const Representation& rep,
                        const std::vector<GeneratorDescriptor>& descriptors) {
  std::vector<Scalar> values(descriptors.size());
  parallel_for(descriptors.size(), [&](std::size_t k) { values[k] = evaluate_descriptor(s, descriptors[k], rep); });
  Fingerprint fp;
  fp.values.reserve(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) fp.values.emplace_back(descriptors[k].id, std::move(values[k]));
  return fp;
}

Separation separate(const GeneratorSet& gs, const Representation& a, const Representation& b) {
  if (!(a.field == b.field)) throw PreconditionError("representations over different fields");
  Separation out;
  out.max_len = gs.max_len;
  out.max_weight = gs.max_weight;
  for (const auto& d : gs.descriptors) {
    ++out.descriptors_checked;
    Scalar x = evaluate_descriptor(gs.setting, d, a);
    Scalar y = evaluate_descriptor(gs.setting, d, b);
    if (!(x == y)) {
      out.equal = false;
      out.distinguished_by = d.id;
      out.values = std::make_pair(std::move(x), std::move(y));
      return out;
    }
  }
  out.caveats.push_back("equal only up to the capped descriptor set; completeness needs every generator");
  out.caveats.push_back("invariants separate closed orbits: equal values identify semisimple representations only");
  return out;
}

Scalar character(const MixedQuiverSetting& s, const BpfOfTableau& b, const GroupElement& g) {
  const Field f = [&] {
    for (const auto& m : g.stored)
      if (m) return m->field();
    return Field::rational();
  }();
  Scalar chi = f.one();
  for (const auto& [v, e] : b.column_characters) {
    const Scalar d = determinant(component(s, g, v));
    chi *= e >= 0 ? d.pow(static_cast<unsigned>(e)) : d.inverse().pow(static_cast<unsigned>(-e));
  }
  return chi;
}

InvarianceReport invariance_suite(const MixedQuiverSetting& s, const std::vector<GeneratorDescriptor>& descriptors,
                                  const InvarianceOptions& options) {
  require_valid(s, options.field.characteristic());
  const std::size_t m = descriptors.size();
  // outcome[trial][descriptor]: 0 pass, 1 covariant pass, 2 fail, 3 error
  std::vector<std::vector<int>> outcome(options.trials, std::vector<int>(m, 0));
  std::vector<std::vector<std::string>> errors(options.trials, std::vector<std::string>(m));
  parallel_for(options.trials, [&](std::size_t k) {
    Rng rng(derive_seed(options.seed, k));
    const Representation rep = sample_representation(s, options.field, rng, options.bound);
    const GroupElement g = sample_group_element(s, options.field, rng, options.mode);
    const Representation moved = act(s, g, rep);
    for (std::size_t j = 0; j < m; ++j) {
      try {
        const auto& d = descriptors[j];
        const Scalar chi = d.is_sigma() ? options.field.one() : character(s, d.bpf(), g);
        const Scalar before = evaluate_descriptor(s, d, rep);
        const Scalar after = evaluate_descriptor(s, d, moved);
        if (!(after == chi * before)) outcome[k][j] = 2;
        else outcome[k][j] = chi.is_one() ? 0 : 1;
      } catch (const std::exception& e) {
        outcome[k][j] = 3;
        errors[k][j] = e.what();
      }
    }
  });
  InvarianceReport report;
  report.trials = options.trials;
  report.seed = options.seed;
  report.field = options.field;
  report.mode = options.mode;
  for (std::size_t j = 0; j < m; ++j) {
    DescriptorReport r;
    r.id = descriptors[j].id;
    for (std::size_t k = 0; k < options.trials; ++k) {
      switch (outcome[k][j]) {
        case 0: ++r.passed; break;
        case 1: ++r.passed; ++r.covariant; break;
        default:
          ++r.failed;
          r.failure_seeds.push_back(derive_seed(options.seed, k));
          if (outcome[k][j] == 3 && !r.error) r.error = errors[k][j];
      }
    }
    report.failures += r.failed;
    report.descriptors.push_back(std::move(r));
  }
  return report;
}

std::vector<Representation> coordinate_directions(const MixedQuiverSetting& s, const Field& f) {
  std::vector<Representation> out;
  const Representation zero = zero_like(s, f);
  for (std::size_t a = 0; a < s.quiver.arrows.size(); ++a) {
    const Arrow& x = s.arrow(a);
    const std::size_t r = s.n(x.head), c = s.n(x.tail);
    auto push = [&](Matrix m) {
      Representation d = zero;
      d.arrows[a] = std::move(m);
      out.push_back(std::move(d));
    };
    if (x.form == Form::M) {
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
          Matrix m = Matrix::zero(r, c, f);
          m(i, j) = f.one();
          push(std::move(m));
        }
      continue;
    }
    const bool skew = x.form == Form::SMinus || x.form == Form::LMinus;
    const bool twisted = x.form == Form::LPlus || x.form == Form::LMinus;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = skew ? i + 1 : i; j < r; ++j) {
        Matrix m = Matrix::zero(r, r, f);
        m(i, j) = f.one();
        m(j, i) = skew ? -f.one() : f.one();
        // h J = S  <=>  h = -S J
        if (twisted) m = -(m * Matrix::symplectic_unit(r, f));
        push(std::move(m));
      }
  }
  return out;
}

std::size_t jacobian_rank(const MixedQuiverSetting& s, const std::vector<GeneratorDescriptor>& descriptors,
                          const Representation& rep) {
  check_representation(s, rep);
  const auto dirs = coordinate_directions(s, rep.field);
  if (descriptors.empty() || dirs.empty()) return 0;
  Matrix jac = Matrix::zero(descriptors.size(), dirs.size(), rep.field);
  parallel_for(descriptors.size(), [&](std::size_t i) {
    const auto& d = descriptors[i];
    for (std::size_t j = 0; j < dirs.size(); ++j)
      jac(i, j) = d.is_sigma() ? (d.sigma().t == 0 ? rep.field.zero() : sigma_derivative(s, d.sigma(), rep, dirs[j]))
                               : bpf_derivative(s, d.bpf(), rep, dirs[j]);
  });
  return rank(jac);
}

}  // namespace qi
