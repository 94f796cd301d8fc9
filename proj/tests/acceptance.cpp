// Acceptance run: one line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "oracles.hpp"
#include "qi/error.hpp"
#include "qi/identities.hpp"
#include "qi/invariant_eval.hpp"
#include "qi/linalg.hpp"
#include "qi/trace_algebra.hpp"
#include "random_tableaux.hpp"
#include "settings.hpp"

using namespace qi;

namespace {

const Field Q = Field::rational();

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

using Term = std::pair<long, std::vector<std::pair<unsigned, Word>>>;

TracePolynomial build(const std::vector<Term>& terms, Equivalence eq) {
  TracePolynomial p(Q);
  for (const auto& [c, factors] : terms) {
    TracePolynomial m = TracePolynomial::constant(Q.from_int(c));
    for (const auto& [level, w] : factors) m *= TracePolynomial::symbol(Q, level, canonical(w, eq));
    p += m;
  }
  return p;
}

void identity_family(Outcome& out, const std::string& family, std::size_t n, std::size_t trials, std::uint64_t seed) {
  IdentityOptions o;
  o.family = family;
  o.n = n;
  o.trials = trials;
  o.seed = seed;
  const IdentityReport r = check_identities(o);
  for (const auto& c : r.cases)
    out.require(c.passed == c.trials, family + ": " + c.name + " " + std::to_string(c.passed) + "/" +
                                          std::to_string(c.trials));
}

Outcome formulas() {
  Outcome out;
  const Letter a{0, false}, b{1, false};
  const TracePolynomial got = amitsur_expand(2, {{Q.one(), {a}}, {Q.one(), {b}}}, Equivalence::cyclic, Q);
  const auto cyc = Equivalence::cyclic;
  out.require(got == build({{1, {{2, {a}}}}, {1, {{2, {b}}}}, {1, {{1, {a}}, {1, {b}}}}, {-1, {{1, {a, b}}}}}, cyc),
              "four-term sigma_2 expansion");
  out.require(power_reduce(1, 2, {a}, Q) == build({{1, {{1, {a}}, {1, {a}}}}, {-2, {{2, {a}}}}}, cyc),
              "tr(A^2) = tr(A)^2 - 2 sigma_2(A)");
  const Letter x = sigma_tr_x(), y = sigma_tr_y(), z = sigma_tr_z(), zt = z.transpose(), yt = y.transpose();
  const auto eq = Equivalence::cyclic_transpose;
  out.require(sigma_tr_symbolic(0, 1) == build({{-1, {{1, {y, z}}}}, {1, {{1, {y, zt}}}}}, eq), "sigma_0,1");
  out.require(sigma_tr_symbolic(1, 1) == build({{-1, {{1, {x}}, {1, {y, z}}}},
                                                {1, {{1, {x}}, {1, {y, zt}}}},
                                                {1, {{1, {x, y, z}}}},
                                                {-1, {{1, {x, y, zt}}}},
                                                {-1, {{1, {x, yt, z}}}},
                                                {1, {{1, {x, yt, zt}}}}},
                                               eq),
              "sigma_1,1");
  for (unsigned t = 1; t <= 4; ++t)
    out.require(sigma_tr_symbolic(t, 0) == TracePolynomial::symbol(Q, t, {x}), "sigma_t,0 = sigma_t(X)");
  return out;
}

Outcome bpf_canonical() {
  Outcome out;
  Rng rng(2002);
  const std::size_t sizes[] = {2, 4, 6};
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = sizes[k % 3];
    const Matrix m = oracle::random_rational_matrix(rng, n, n);
    out.require(bpf({pfaffian_tableau({n / 2}), {m}}) == generalized_pfaffian(m), "pfaffian tableau");
    out.require(bpf({determinant_tableau({n}), {m}}) == determinant(m), "determinant tableau");
    for (std::size_t j = 1; j < n; ++j)
      out.require(bpf({determinant_tableau({j, n - j}), {m, Matrix::identity(n, Q)}}) == sigma(m, j), "(X, E) tableau");
  }
  return out;
}

Outcome bplp_round_trip() {
  Outcome out;
  Rng rng(3003);
  for (int k = 0; k < 100; ++k) {
    const auto tws = fixtures::with_random_matrices(fixtures::random_tableau(rng, 8), rng);
    const Bplp f = bplp_from_tableau(tws);
    const auto again = tableau_from_bplp(f.r, f.blocks, tws.tableau.columns);
    const Scalar value = evaluate_bplp(f, tws.tableau.columns);
    out.require(bpf(again.tws) == Q.from_int(again.sign) * value, "bpf(tableau_from_bplp(f)) = sign f");
    out.require(bpf(tws) == Q.from_int(f.sign) * value, "bplp_from_tableau sign");
  }
  return out;
}

Outcome dp_properties() {
  Outcome out;
  identity_family(out, "dp-equivariance", 3, 100, 4004);
  return out;
}

Outcome sigma_tr_cross() {
  Outcome out;
  Rng rng(5005);
  for (unsigned t = 0; t <= 5; ++t)
    for (unsigned r = 0; t + 2 * r <= 5; ++r) {
      if (t + r == 0) continue;
      const std::size_t n = t + 2 * r;
      const auto s = sigma_tr_setting(n);
      const TracePolynomial p = sigma_tr_symbolic(t, r);
      for (int k = 0; k < 50; ++k) {
        const Representation rep = sample_representation(s, Q, rng, 3);
        out.require(evaluate(p, s, rep) == sigma_tr_via_dp(t, r, rep.arrows[0], rep.arrows[1], rep.arrows[2]),
                    "sigma_" + std::to_string(t) + "," + std::to_string(r) + " = DP");
      }
      // lambda expansion with t0 = t
      const Representation rep = sample_representation(s, Q, rng, 3);
      for (long lambda : {-3L, -1L, 0L, 2L, 5L}) {
        const Scalar l = Q.from_int(lambda);
        Scalar sum = Q.zero();
        for (unsigned u = 0; u <= t; ++u) sum += l.pow(t - u) * evaluate(sigma_tr_symbolic(u, r), s, rep);
        const Matrix shifted = rep.arrows[0] + Matrix::identity(n, Q) * l;
        out.require(dp(r, r, shifted, rep.arrows[1], rep.arrows[2]) == sum, "lambda expansion");
      }
    }
  return out;
}

Outcome relations() {
  Outcome out;
  for (std::size_t n : {2u, 3u}) identity_family(out, "relations-a", n, 100, 6000 + n);
  for (std::size_t n : {2u, 3u}) identity_family(out, "relations-b", n, 100, 6100 + n);
  for (std::size_t n : {1u, 2u, 3u}) identity_family(out, "relations-c", n, 100, 6200 + n);
  return out;
}

void suite(Outcome& out, const std::string& name, const MixedQuiverSetting& s, const std::vector<GeneratorDescriptor>& ds,
           SampleMode mode, bool expect_covariance) {
  InvarianceOptions o;
  o.trials = 50;
  o.seed = 7007;
  o.mode = mode;
  const InvarianceReport r = invariance_suite(s, ds, o);
  std::size_t covariant = 0;
  for (const auto& d : r.descriptors) covariant += d.covariant;
  out.require(!ds.empty(), name + ": no descriptors");
  out.require(r.failures == 0, name + ": " + std::to_string(r.failures) + " failures");
  if (expect_covariance) out.require(covariant > 0, name + ": no determinant covariance observed");
}

Outcome invariance() {
  Outcome out;
  using fixtures::arrow;
  for (auto [g, n] : {std::pair{Group::GL, 3u}, {Group::O, 3u}, {Group::SO, 3u}, {Group::SO, 2u}, {Group::Sp, 2u}}) {
    const auto gs = matrix_invariant_generators(g, n, 2, g == Group::GL ? 4 : 3);
    suite(out, "matrix " + std::string(to_string(g)) + "(" + std::to_string(n) + ")", gs.setting, gs.descriptors,
          SampleMode::strict, false);
  }
  const auto so2 = matrix_invariant_generators(Group::SO, 2, 2, 2);
  suite(out, "SO(2) under O(2)", so2.setting, so2.descriptors, SampleMode::relaxed, true);

  const Quiver q{2, {arrow("a", 2, 1), arrow("b", 1, 2), arrow("c", 1, 1)}};
  const auto qg = quiver_invariant_generators(q, {2, 3}, 4);
  suite(out, "quiver", qg.setting, qg.descriptors, SampleMode::strict, false);

  const auto tri = fixtures::triangle(2, 3);
  suite(out, "supermixed GL/O", tri, supermixed_generators(tri, 4).descriptors, SampleMode::strict, false);
  MixedQuiverSetting spo;
  spo.quiver = {2, {arrow("a", 2, 1), arrow("b", 1, 2), arrow("c", 1, 1)}};
  spo.dims = {2, 3};
  spo.groups = {Group::Sp, Group::O};
  spo.involution = {1, 2};
  suite(out, "supermixed Sp/O", spo, supermixed_generators(spo, 4).descriptors, SampleMode::strict, false);

  const auto ex2 = fixtures::five_vertex(2, 2, 3);
  const auto general = general_generators(ex2, 3, 3);
  suite(out, "general (GL, SL, O)", ex2, general.descriptors, SampleMode::strict, false);
  suite(out, "general under GL at SL", ex2, general.descriptors, SampleMode::relaxed, true);
  const auto so_loops = fixtures::loops(Group::SO, 2, 1);
  suite(out, "general SO(2)", so_loops, general_generators(so_loops, 3, 1).descriptors, SampleMode::strict, false);

  const Quiver zz{3, {arrow("alpha", 1, 2), arrow("beta", 3, 2)}};
  const auto bip = bipartite_semiinvariant_tableaux(zz, {1, 2, 1}, 3);
  suite(out, "bipartite SL", bip.setting, bip.descriptors, SampleMode::strict, false);
  suite(out, "bipartite under GL", bip.setting, bip.descriptors, SampleMode::relaxed, true);
  return out;
}

Outcome ex1_structure() {
  Outcome out;
  const auto all = matrix_invariant_generators(Group::GL, 2, 2, 3);
  GeneratorSet five{all.setting, {}, 3, std::nullopt, {}};
  for (const char* id : {"sigma1(X1)", "sigma1(X2)", "sigma1(X1 X2)", "sigma2(X1)", "sigma2(X2)"})
    for (const auto& d : all.descriptors)
      if (d.id == id) five.descriptors.push_back(d);
  out.require(five.descriptors.size() == 5, "five generators present");
  Rng rng(8008);
  const auto& s = five.setting;
  out.require(jacobian_rank(s, five.descriptors, sample_representation(s, Q, rng)) == 5, "Jacobian rank 5");
  auto diag = [&](long a, long b) { return Matrix::diagonal({Q.from_int(a), Q.from_int(b)}); };
  auto draw = [&] { return uniform_int(rng, -9, 9); };
  for (int k = 0; k < 10; ++k) {
    long a1 = draw(), a2 = draw(), b1 = draw(), b2 = draw();
    long c1 = draw(), c2 = draw(), d1 = draw(), d2 = draw();
    // the pairs are conjugate exactly when they agree up to swapping the diagonal positions
    while ((a1 == c1 && a2 == c2 && b1 == d1 && b2 == d2) || (a1 == c2 && a2 == c1 && b1 == d2 && b2 == d1)) c1 = draw();
    const Representation x{Q, {diag(a1, a2), diag(b1, b2)}}, y{Q, {diag(c1, c2), diag(d1, d2)}};
    out.require(!separate(five, x, y).equal, "non-conjugate diagonal pair separated");
  }
  for (int k = 0; k < 10; ++k) {
    const Representation x = sample_representation(s, Q, rng);
    const GroupElement g = sample_group_element(s, Q, rng);
    out.require(separate(five, x, act(s, g, x)).equal, "conjugate pair not separated");
  }
  return out;
}

Outcome degenerate() {
  Outcome out;
  const auto gs = matrix_invariant_generators(Group::GL, 2, 1, 6);
  const Representation nil{Q, {Matrix::from_ints({{0, 1}, {0, 0}}, Q)}};
  const Representation zero{Q, {Matrix::zero(2, 2, Q)}};
  const auto sep = separate(gs, nil, zero);
  out.require(sep.equal && sep.descriptors_checked == gs.descriptors.size(), "nilpotent vs zero equal");
  out.require(!sep.caveats.empty(), "caveats carried");
  using fixtures::arrow;
  const Quiver chain{3, {arrow("a", 2, 1), arrow("b", 3, 2), arrow("c", 3, 1)}};
  out.require(quiver_invariant_generators(chain, {2, 3, 1}, 5).descriptors.empty(), "acyclic quiver gives nothing");
  return out;
}

struct Criterion {
  int number;
  const char* name;
  double limit_seconds;  // 0: no runtime bound
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "formula reproduction", 1, formulas},
      {2, "bpf canonical cases", 30, bpf_canonical},
      {3, "b.p.l.p. round trip", 60, bplp_round_trip},
      {4, "DP properties", 60, dp_properties},
      {5, "sigma_tr cross-oracle", 120, sigma_tr_cross},
      {6, "relation families", 60, relations},
      {7, "invariance suites", 300, invariance},
      {8, "GL(2) two-matrix structure", 0, ex1_structure},
      {9, "degenerate and semantic checks", 0, degenerate},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
      o.ok = false;
      if (o.detail.empty()) o.detail = "over the time limit";
    }
    char timing[64];
    if (c.limit_seconds > 0) std::snprintf(timing, sizeof timing, "%.2f s, limit %.0f s", secs, c.limit_seconds);
    else std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::printf("%s  %d  %-32s (%s, exact)%s%s\n", o.ok ? "PASS" : "FAIL", c.number, c.name, timing,
                o.ok ? "" : ": ", o.detail.c_str());
    std::fflush(stdout);
    if (!o.ok) ++failed;
  }
  std::printf("%d/9 criteria passed\n", 9 - failed);
  return failed == 0 ? 0 : 1;
}
