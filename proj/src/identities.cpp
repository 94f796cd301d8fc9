#include "qi/identities.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "qi/error.hpp"
#include "qi/linalg.hpp"
#include "qi/parallel.hpp"
#include "qi/random.hpp"
#include "qi/tableaux.hpp"
#include "qi/trace_algebra.hpp"

namespace qi {

namespace {

constexpr long long kBound = 4;

Matrix random_matrix(Rng& rng, std::size_t r, std::size_t c, const Field& f) {
  Matrix m(r, c, f);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = random_scalar(rng, f, kBound);
  return m;
}

MixedQuiverSetting loops(Group g, std::size_t n, std::size_t d) {
  MixedQuiverSetting s;
  s.quiver.vertex_count = 1;
  for (std::size_t k = 1; k <= d; ++k) s.quiver.arrows.push_back({"X" + std::to_string(k), 1, 1, Form::M, std::nullopt});
  s.dims = {n};
  s.groups = {g};
  s.involution = {1};
  return s;
}

Scalar nonzero_coefficient(Rng& rng, const Field& f) {
  Scalar c = f.zero();
  while (c.is_zero()) c = random_scalar(rng, f, 3);
  return c;
}

Word random_word(Rng& rng, std::size_t d, std::size_t max_len, bool transposes) {
  const std::size_t len = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<long long>(max_len)));
  Word w;
  for (std::size_t k = 0; k < len; ++k) {
    Letter l{static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long long>(d) - 1)), false};
    if (transposes) l.transposed = uniform_int(rng, 0, 1) == 1;
    w.push_back(l);
  }
  return w;
}

std::vector<Summand> random_summands(Rng& rng, const Field& f, std::size_t count, bool transposes) {
  std::vector<Summand> out;
  for (std::size_t k = 0; k < count; ++k) out.push_back({nonzero_coefficient(rng, f), random_word(rng, 2, 2, transposes)});
  return out;
}

Matrix combination(const MixedQuiverSetting& s, const Representation& rep, const std::vector<Summand>& xs) {
  Matrix m = Matrix::zero(s.n(1), s.n(1), rep.field);
  for (const auto& [c, w] : xs) m += path_value(s, rep, w) * c;
  return m;
}

class Runner {
 public:
  explicit Runner(const IdentityOptions& o, std::size_t n) : o_(o) {
    report_.family = o.family;
    report_.n = n;
    report_.trials = o.trials;
    report_.seed = o.seed;
    report_.field = o.field;
  }

  // `holds` gets a generator seeded for the trial and returns whether the identity held.
  void run(std::string name, const std::function<bool(Rng&)>& holds) {
    const std::size_t index = report_.cases.size();
    IdentityCase c;
    c.name = std::move(name);
    c.trials = o_.trials;
    std::vector<char> ok(o_.trials, 0);
    std::vector<std::uint64_t> seeds(o_.trials);
    for (std::size_t k = 0; k < o_.trials; ++k) seeds[k] = derive_seed(derive_seed(o_.seed, index), k);
    parallel_for(o_.trials, [&](std::size_t k) {
      Rng rng(seeds[k]);
      ok[k] = holds(rng) ? 1 : 0;
    });
    for (std::size_t k = 0; k < o_.trials; ++k) {
      if (ok[k]) ++c.passed;
      else c.failure_seeds.push_back(seeds[k]);
    }
    report_.cases.push_back(std::move(c));
  }

  IdentityReport take() { return std::move(report_); }

 private:
  const IdentityOptions& o_;
  IdentityReport report_;
};

std::string tr_name(unsigned t, unsigned r) { return "sigma_" + std::to_string(t) + "," + std::to_string(r); }

void amitsur(Runner& run, std::size_t n, const Field& f) {
  const auto s = loops(Group::GL, n, 2);
  for (unsigned t = 1; t <= n + 1; ++t) {
    run.run("sigma_" + std::to_string(t) + " of a sum of three words", [&, t](Rng& rng) {
      const auto xs = random_summands(rng, f, 3, false);
      const Representation rep = sample_representation(s, f, rng, kBound);
      return evaluate(amitsur_expand(t, xs, Equivalence::cyclic, f, &s), s, rep) == sigma(combination(s, rep, xs), t);
    });
  }
}

void power(Runner& run, std::size_t n, const Field& f) {
  const auto s = loops(Group::GL, n, 1);
  for (unsigned l = 2; l <= 3; ++l)
    for (unsigned t = 1; t <= n; ++t) {
      run.run("sigma_" + std::to_string(t) + "(A^" + std::to_string(l) + ")", [&, t, l](Rng& rng) {
        const Representation rep = sample_representation(s, f, rng, kBound);
        Matrix p = rep.arrows[0];
        for (unsigned k = 1; k < l; ++k) p = p * rep.arrows[0];
        return evaluate(power_reduce(t, l, {Letter{0, false}}, f), s, rep) == sigma(p, t);
      });
    }
}

void sigma_tr(Runner& run, std::size_t n, const Field& f) {
  const auto s = sigma_tr_setting(n);
  for (unsigned r = 0; 2 * r <= n + 1; ++r) {
    const unsigned t = static_cast<unsigned>(n + 1 - 2 * r);
    const TracePolynomial p = sigma_tr_symbolic(t, r, f);
    run.run(tr_name(t, r) + " vanishes at n=" + std::to_string(n), [&, p](Rng& rng) {
      return evaluate(p, s, sample_representation(s, f, rng, kBound)).is_zero();
    });
  }
  for (unsigned r = 0; 2 * r <= n; ++r) {
    const unsigned t = static_cast<unsigned>(n - 2 * r);
    const TracePolynomial p = sigma_tr_symbolic(t, r, f);
    run.run(tr_name(t, r) + " equals DP_" + std::to_string(r) + "," + std::to_string(r), [&, p, t, r](Rng& rng) {
      const Representation rep = sample_representation(s, f, rng, kBound);
      return evaluate(p, s, rep) == sigma_tr_via_dp(t, r, rep.arrows[0], rep.arrows[1], rep.arrows[2]);
    });
  }
}

void relations_a(Runner& run, std::size_t n, const Field& f) {
  const auto s = loops(Group::GL, n, 2);
  for (unsigned t = 1; t <= n; ++t) {
    run.run("sigma_" + std::to_string(t) + "(ab) - sigma_" + std::to_string(t) + "(ba)", [&, t](Rng& rng) {
      RelationContext ctx;
      ctx.setting = &s;
      ctx.field = f;
      ctx.t = t;
      ctx.alpha = random_word(rng, 2, 3, false);
      ctx.beta = random_word(rng, 2, 3, false);
      return relation_instance(RelationKind::a, ctx).is_zero();
    });
  }
}

void relations_b(Runner& run, std::size_t n, const Field& f) {
  const auto s = loops(Group::O, n, 2);
  for (unsigned t = static_cast<unsigned>(n + 1); t <= n + 2; ++t) {
    run.run("sigma_" + std::to_string(t) + " of a sum, n=" + std::to_string(n), [&, t](Rng& rng) {
      RelationContext ctx;
      ctx.setting = &s;
      ctx.field = f;
      ctx.t = t;
      ctx.xs = random_summands(rng, f, 3, true);
      const TracePolynomial p = relation_instance(RelationKind::b, ctx);
      return evaluate(p, s, sample_representation(s, f, rng, kBound)).is_zero();
    });
  }
}

void relations_c(Runner& run, std::size_t n, const Field& f) {
  const auto s = loops(Group::O, n, 2);
  for (unsigned r = 0; 2 * r <= n + 1; ++r) {
    const unsigned t = static_cast<unsigned>(n + 1 - 2 * r);
    run.run(tr_name(t, r) + " of linear combinations, n=" + std::to_string(n), [&, t, r](Rng& rng) {
      RelationContext ctx;
      ctx.setting = &s;
      ctx.field = f;
      ctx.t = t;
      ctx.r = r;
      ctx.xs = random_summands(rng, f, 2, true);
      ctx.ys = random_summands(rng, f, 2, true);
      ctx.zs = random_summands(rng, f, 2, true);
      const TracePolynomial p = relation_instance(RelationKind::c, ctx);
      return evaluate(p, s, sample_representation(s, f, rng, kBound)).is_zero();
    });
  }
}

void dp_equivariance(Runner& run, const Field& f) {
  run.run("DP_0,0 = det", [&](Rng& rng) {
    const std::size_t t = static_cast<std::size_t>(uniform_int(rng, 1, 6));
    const Matrix x = random_matrix(rng, t, t, f);
    return dp(0, 0, x, Matrix(), Matrix()) == determinant(x);
  });
  run.run("t=0: DP = P(Y) P(Z)", [&](Rng& rng) {
    const std::size_t r = static_cast<std::size_t>(uniform_int(rng, 1, 3));
    const std::size_t s = static_cast<std::size_t>(uniform_int(rng, 1, 3));
    const Matrix y = random_matrix(rng, 2 * r, 2 * r, f), z = random_matrix(rng, 2 * s, 2 * s, f);
    return dp(r, s, Matrix(2 * r, 2 * s, f), y, z) == generalized_pfaffian(y) * generalized_pfaffian(z);
  });
  auto draw = [&](Rng& rng) {
    std::size_t t = 0, r = 0, s = 0;
    do {
      t = static_cast<std::size_t>(uniform_int(rng, 0, 4));
      r = static_cast<std::size_t>(uniform_int(rng, 0, 3));
      s = static_cast<std::size_t>(uniform_int(rng, 0, 3));
    } while (t + 2 * r > 6 || t + 2 * s > 6 || t + r + s == 0);
    return std::array<std::size_t, 3>{t, r, s};
  };
  run.run("DP(gX, gYg^T, Z) = det(g) DP(X, Y, Z)", [&](Rng& rng) {
    const auto [t, r, s] = draw(rng);
    const std::size_t a = t + 2 * r, b = t + 2 * s;
    const Matrix x = random_matrix(rng, a, b, f), y = random_matrix(rng, a, a, f), z = random_matrix(rng, b, b, f);
    const Matrix g = random_matrix(rng, a, a, f);
    return dp(r, s, g * x, g * y * g.transpose(), z) == determinant(g) * dp(r, s, x, y, z);
  });
  run.run("DP(Xh, Y, h^TZh) = det(h) DP(X, Y, Z)", [&](Rng& rng) {
    const auto [t, r, s] = draw(rng);
    const std::size_t a = t + 2 * r, b = t + 2 * s;
    const Matrix x = random_matrix(rng, a, b, f), y = random_matrix(rng, a, a, f), z = random_matrix(rng, b, b, f);
    const Matrix h = random_matrix(rng, b, b, f);
    return dp(r, s, x * h, y, h.transpose() * z * h) == determinant(h) * dp(r, s, x, y, z);
  });
}

void pf_square(Runner& run, std::size_t n, const Field& f) {
  if (n % 2) throw PreconditionError("pf-square needs even n, got " + std::to_string(n));
  run.run("P(X)^2 = det(X - X^T), n=" + std::to_string(n), [&](Rng& rng) {
    const Matrix x = random_matrix(rng, n, n, f);
    const Scalar p = generalized_pfaffian(x);
    return p * p == determinant(x - x.transpose());
  });
}

void bpf_examples(Runner& run, std::size_t n, const Field& f) {
  if (n % 2 == 0) {
    run.run("pfaffian tableau = P(X), n=" + std::to_string(n), [&](Rng& rng) {
      const Matrix x = random_matrix(rng, n, n, f);
      return bpf(TableauWithSubstitution{pfaffian_tableau({n / 2}), {x}}) == generalized_pfaffian(x);
    });
  }
  run.run("determinant tableau = det(X), n=" + std::to_string(n), [&](Rng& rng) {
    const Matrix x = random_matrix(rng, n, n, f);
    return bpf(TableauWithSubstitution{determinant_tableau({n}), {x}}) == determinant(x);
  });
  for (std::size_t k = 1; k < n; ++k) {
    run.run("(X, E) tableau = sigma_" + std::to_string(k) + "(X), n=" + std::to_string(n), [&, k](Rng& rng) {
      const Matrix x = random_matrix(rng, n, n, f);
      return bpf(TableauWithSubstitution{determinant_tableau({k, n - k}), {x, Matrix::identity(n, f)}}) == sigma(x, k);
    });
  }
}

}  // namespace

bool IdentityReport::ok() const {
  return std::all_of(cases.begin(), cases.end(), [](const IdentityCase& c) { return c.passed == c.trials; });
}

const std::vector<std::string>& identity_families() {
  static const std::vector<std::string> names{"amitsur",     "power",       "sigma-tr",        "relations-a", "relations-b",
                                              "relations-c", "dp-equivariance", "pf-square", "bpf-examples"};
  return names;
}

IdentityReport check_identities(const IdentityOptions& o) {
  const auto& names = identity_families();
  if (std::find(names.begin(), names.end(), o.family) == names.end())
    throw SchemaError("unknown identity family '" + o.family + "'");
  std::size_t n = o.n.value_or(0);
  if (!o.n) {
    if (o.family == "sigma-tr" || o.family == "relations-a" || o.family == "relations-b" ||
        o.family == "relations-c")
      n = 2;
    else if (o.family == "pf-square" || o.family == "bpf-examples")
      n = 4;
    else
      n = 3;
  }
  if (n == 0) throw PreconditionError("n must be positive");
  if (n > 8) throw PreconditionError("n is capped at 8 for identity checks");
  Runner run(o, o.family == "dp-equivariance" ? 0 : n);
  const Field& f = o.field;
  if (o.family == "amitsur") amitsur(run, n, f);
  else if (o.family == "power") power(run, n, f);
  else if (o.family == "sigma-tr") sigma_tr(run, n, f);
  else if (o.family == "relations-a") relations_a(run, n, f);
  else if (o.family == "relations-b") relations_b(run, n, f);
  else if (o.family == "relations-c") relations_c(run, n, f);
  else if (o.family == "dp-equivariance") dp_equivariance(run, f);
  else if (o.family == "pf-square") pf_square(run, n, f);
  else bpf_examples(run, n, f);
  return run.take();
}

}  // namespace qi
