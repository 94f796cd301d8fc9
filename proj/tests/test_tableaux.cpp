#include <catch_amalgamated.hpp>

#include <map>

#include "oracles.hpp"
#include "random_tableaux.hpp"
#include "qi/error.hpp"
#include "qi/linalg.hpp"
#include "qi/tableaux.hpp"
#include "qi/trace_algebra.hpp"

using namespace qi;

namespace {

const Field Q = Field::rational();

Matrix rand_m(Rng& rng, std::size_t r, std::size_t c, const Field& f = Q) {
  return oracle::random_matrix(rng, r, c, f, 4);
}

}  // namespace

TEST_CASE("tableau validation") {
  Tableau t = pfaffian_tableau({2});
  CHECK_NOTHROW(validate_tableau(t));
  Tableau gap = t;
  gap.arrows.pop_back();
  CHECK_THROWS_AS(validate_tableau(gap), PreconditionError);
  Tableau twice = t;
  twice.arrows[1].tail = {1, 2};
  CHECK_THROWS_AS(validate_tableau(twice), PreconditionError);
  Tableau slots = t;
  slots.arrows[1].slot = 3;
  CHECK_THROWS_AS(validate_tableau(slots), PreconditionError);
  Tableau mixed{{2, 2}, {{{2, 1}, {1, 1}, 1}, {{1, 2}, {2, 2}, 1}}};
  CHECK_THROWS_AS(validate_tableau(mixed), PreconditionError);
  Tableau out{{2}, {{{1, 3}, {1, 1}, 1}}};
  CHECK_THROWS_AS(validate_tableau(out), PreconditionError);
  Rng rng(31);
  auto tws = fixtures::with_random_matrices(determinant_tableau({2}), rng);
  tws.matrices[0] = rand_m(rng, 2, 3);
  CHECK_THROWS_AS(bpf(tws), PreconditionError);
}

TEST_CASE("bpf0 of the small worked tableaux") {
  Matrix x = Matrix::from_ints({{1, 7}, {-3, 2}}, Q);
  TableauWithSubstitution pf{pfaffian_tableau({1}), {x}};
  CHECK(bpf0(pf) == Q.from_int(7 - (-3)));
  CHECK(bpf0_reference(pf) == Q.from_int(10));
  TableauWithSubstitution det{determinant_tableau({2}), {x}};
  CHECK(bpf0(det) == Q.from_int(2) * determinant(x));
  CHECK(bpf(det) == determinant(x));
  TableauWithSubstitution zero{determinant_tableau({1, 1}), {x, Matrix(2, 2, Q)}};
  CHECK(bpf0(zero).is_zero());
}

TEST_CASE("reference and memoized bpf0 agree") {
  Rng rng(32);
  for (int trial = 0; trial < 60; ++trial) {
    auto tws = fixtures::with_random_matrices(fixtures::random_tableau(rng, 8), rng);
    CHECK(bpf0(tws) == bpf0_reference(tws));
  }
  const Field f = Field::prime(13);
  for (int trial = 0; trial < 20; ++trial) {
    auto tws = fixtures::with_random_matrices(fixtures::random_tableau(rng, 8), rng, f);
    CHECK(bpf0(tws) == bpf0_reference(tws));
  }
}

TEST_CASE("the worked tableaux give P, det and sigma_k") {
  Rng rng(33);
  for (std::size_t n : {2u, 4u, 6u}) {
    Matrix x = rand_m(rng, n, n);
    CHECK(bpf(TableauWithSubstitution{pfaffian_tableau({n / 2}), {x}}) == generalized_pfaffian(x));
  }
  for (std::size_t n : {1u, 2u, 3u, 4u}) {
    Matrix x = rand_m(rng, n, n);
    CHECK(bpf(TableauWithSubstitution{determinant_tableau({n}), {x}}) == determinant(x));
    for (std::size_t k = 1; k < n; ++k) {
      TableauWithSubstitution tws{determinant_tableau({k, n - k}), {x, Matrix::identity(n, Q)}};
      CHECK(bpf(tws) == sigma(x, k));
    }
  }
  Matrix x = rand_m(rng, 6, 6), y = rand_m(rng, 6, 6);
  CHECK(bpf(TableauWithSubstitution{pfaffian_tableau({1, 2}), {x, y}}) == partial_linearization_pf({1, 2}, {x, y}));
  Matrix u = rand_m(rng, 3, 3), v = rand_m(rng, 3, 3);
  CHECK(bpf(TableauWithSubstitution{determinant_tableau({1, 2}), {u, v}}) == partial_linearization_det({1, 2}, {u, v}));
}

TEST_CASE("bpf of integer data is integral, also mod p") {
  Rng rng(34);
  const Field f = Field::prime(3);
  for (int trial = 0; trial < 20; ++trial) {
    auto tws = fixtures::with_random_matrices(fixtures::random_tableau(rng, 8), rng);
    Scalar over_q = bpf(tws);
    CHECK(over_q.rational().get_den() == 1);
    TableauWithSubstitution reduced{tws.tableau, {}};
    for (const auto& m : tws.matrices) reduced.matrices.push_back(m.convert(f));
    CHECK(bpf(reduced) == f.convert(over_q));
  }
  // p = 3 divides c_T = 3! here, so the lift route is needed.
  Matrix x = Matrix::from_ints({{1, 2, 0}, {0, 1, 1}, {2, 0, 1}}, f);
  CHECK(bpf(TableauWithSubstitution{determinant_tableau({3}), {x}}) == determinant(x));
}

TEST_CASE("bpf0 scales by a^{r_j} and ignores slot names") {
  Rng rng(35);
  for (int trial = 0; trial < 20; ++trial) {
    auto tws = fixtures::with_random_matrices(fixtures::random_tableau(rng, 8), rng);
    const auto r = tws.tableau.slot_multiplicities();
    const Scalar base = bpf0(tws);
    const std::size_t j = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long long>(r.size()) - 1));
    auto scaled = tws;
    scaled.matrices[j] *= Q.from_int(-2);
    CHECK(bpf0(scaled) == base * Q.from_int(-2).pow(static_cast<unsigned>(r[j])));
    // reverse the slot numbering and the arrow order
    auto renamed = tws;
    const std::size_t s = r.size();
    for (auto& a : renamed.tableau.arrows) a.slot = s + 1 - a.slot;
    std::reverse(renamed.tableau.arrows.begin(), renamed.tableau.arrows.end());
    std::reverse(renamed.matrices.begin(), renamed.matrices.end());
    CHECK(bpf(renamed) == bpf(tws));
  }
}

TEST_CASE("b.p.l.p. to tableau on the worked example") {
  Rng rng(36);
  Matrix x1 = rand_m(rng, 5, 3), x2 = rand_m(rng, 5, 5), x3 = rand_m(rng, 3, 3);
  auto built = tableau_from_bplp({1, 2, 1}, {{1, 2, x1}, {1, 1, x2}, {2, 2, x3}}, {5, 3});
  const auto& arrows = built.tws.tableau.arrows;
  REQUIRE(arrows.size() == 4);
  CHECK(arrows[0].tail == Cell{1, 1});
  CHECK(arrows[0].head == Cell{2, 1});
  CHECK(arrows[1].tail == Cell{1, 2});
  CHECK(arrows[1].head == Cell{1, 3});
  CHECK(arrows[2].tail == Cell{1, 4});
  CHECK(arrows[2].head == Cell{1, 5});
  CHECK(arrows[3].tail == Cell{2, 2});
  CHECK(arrows[3].head == Cell{2, 3});
  CHECK(built.tws.tableau.slot_multiplicities() == std::vector<std::size_t>{1, 2, 1});
  CHECK(built.sign == 1);
  Bplp back = bplp_from_tableau(built.tws);
  CHECK(back.r == std::vector<std::size_t>{1, 2, 1});
  CHECK(back.blocks[0].p == 1);
  CHECK(back.blocks[0].q == 2);
  CHECK(back.blocks[1].p == 1);
  CHECK(back.blocks[1].q == 1);
  CHECK(back.blocks[2].p == 2);
  CHECK(back.blocks[2].q == 2);
  CHECK(bpf(built.tws) == Q.from_int(built.sign) * evaluate_bplp(back, {5, 3}));
  CHECK_THROWS_AS(tableau_from_bplp({2, 2, 1}, {{1, 2, x1}, {1, 1, x2}, {2, 2, x3}}, {5, 3}), PreconditionError);
}

TEST_CASE("single pfaffian block gives the pfaffian tableau") {
  Rng rng(37);
  Matrix x = rand_m(rng, 4, 4);
  auto built = tableau_from_bplp({2}, {{1, 1, x}}, {4});
  CHECK(built.sign == 1);
  const Tableau expect = pfaffian_tableau({2});
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(built.tws.tableau.arrows[i].head == expect.arrows[i].head);
    CHECK(built.tws.tableau.arrows[i].tail == expect.arrows[i].tail);
  }
  Matrix d = rand_m(rng, 3, 3);
  auto det = tableau_from_bplp({3}, {{1, 2, d}}, {3, 3});
  CHECK(det.sign == -1);
  CHECK(bpf(det.tws) == determinant(d));
}

TEST_CASE("tableau and b.p.l.p. round trip") {
  Rng rng(38);
  for (int trial = 0; trial < 40; ++trial) {
    auto tws = fixtures::with_random_matrices(fixtures::random_tableau(rng, 8), rng);
    Bplp f = bplp_from_tableau(tws);
    CHECK(bpf(tws) == Q.from_int(f.sign) * evaluate_bplp(f, tws.tableau.columns));
    auto again = tableau_from_bplp(f.r, f.blocks, tws.tableau.columns);
    CHECK(bpf(again.tws) == Q.from_int(again.sign) * evaluate_bplp(f, tws.tableau.columns));
  }
}

TEST_CASE("determinant-pfaffian properties") {
  Rng rng(39);
  Matrix x = rand_m(rng, 3, 3);
  CHECK(dp(0, 0, x, Matrix(), Matrix()) == determinant(x));
  Matrix y = rand_m(rng, 4, 4), z = rand_m(rng, 2, 2);
  CHECK(dp(2, 1, Matrix(4, 2, Q), y, z) == generalized_pfaffian(y) * generalized_pfaffian(z));
  CHECK_THROWS_AS(dp(1, 1, rand_m(rng, 3, 2), rand_m(rng, 3, 3), rand_m(rng, 3, 3)), PreconditionError);
  for (auto [t, r, s] : {std::tuple{1u, 1u, 1u}, {2u, 1u, 0u}, {1u, 0u, 1u}, {1u, 1u, 2u}, {2u, 0u, 1u}}) {
    const std::size_t a = t + 2 * r, b = t + 2 * s;
    Matrix xx = rand_m(rng, a, b), yy = rand_m(rng, a, a), zz = rand_m(rng, b, b);
    Matrix g = rand_m(rng, a, a), h = rand_m(rng, b, b);
    const Scalar base = dp(r, s, xx, yy, zz);
    CHECK(dp(r, s, g * xx, g * yy * g.transpose(), zz) == determinant(g) * base);
    CHECK(dp(r, s, xx * h, yy, h.transpose() * zz * h) == determinant(h) * base);
  }
}

TEST_CASE("sigma_tr agrees with the determinant-pfaffian") {
  Rng rng(40);
  for (unsigned t = 0; t <= 5; ++t) {
    for (unsigned r = 0; t + 2 * r <= 5; ++r) {
      if (t + r == 0) continue;
      const std::size_t n = t + 2 * r;
      const auto s = sigma_tr_setting(n);
      const TracePolynomial p = sigma_tr_symbolic(t, r);
      for (int trial = 0; trial < 3; ++trial) {
        Representation rep = sample_representation(s, Q, rng, 3);
        CHECK(evaluate(p, s, rep) == sigma_tr_via_dp(t, r, rep.arrows[0], rep.arrows[1], rep.arrows[2]));
      }
    }
  }
}

TEST_CASE("lambda expansion of the determinant-pfaffian") {
  Rng rng(41);
  for (auto [t0, r] : {std::pair{1u, 1u}, {2u, 1u}, {0u, 2u}, {3u, 0u}}) {
    const std::size_t n = t0 + 2 * r;
    const auto s = sigma_tr_setting(n);
    Representation rep = sample_representation(s, Q, rng, 3);
    for (long lambda : {-2L, 0L, 1L, 3L, 5L}) {
      Matrix shifted = rep.arrows[0] + Matrix::identity(n, Q) * Q.from_int(lambda);
      Scalar sum = Q.zero();
      for (unsigned t = 0; t <= t0; ++t)
        sum += Q.from_int(lambda).pow(t0 - t) * evaluate(sigma_tr_symbolic(t, r), s, rep);
      CHECK(dp(r, r, shifted, rep.arrows[1], rep.arrows[2]) == sum);
    }
  }
}
