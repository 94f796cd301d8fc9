#include <catch_amalgamated.hpp>

#include <set>

#include "oracles.hpp"
#include "qi/error.hpp"
#include "qi/linalg.hpp"
#include "qi/paths.hpp"
#include "qi/trace_algebra.hpp"
#include "settings.hpp"

using namespace qi;

namespace {

const Field Q = Field::rational();

// Number of closed words of length exactly k at any vertex: trace of the k-th power of the adjacency matrix.
std::size_t closed_walks(const Alphabet& a, std::size_t k) {
  const std::size_t l = a.setting.vertex_count();
  std::vector<std::vector<std::size_t>> adj(l, std::vector<std::size_t>(l, 0));
  for (const Letter& x : a.letters) ++adj[letter_head(a.setting, x) - 1][letter_tail(a.setting, x) - 1];
  auto pow = adj;
  for (std::size_t step = 1; step < k; ++step) {
    std::vector<std::vector<std::size_t>> next(l, std::vector<std::size_t>(l, 0));
    for (std::size_t i = 0; i < l; ++i)
      for (std::size_t j = 0; j < l; ++j)
        for (std::size_t m = 0; m < l; ++m) next[i][j] += pow[i][m] * adj[m][j];
    pow = next;
  }
  std::size_t tr = 0;
  for (std::size_t i = 0; i < l; ++i) tr += pow[i][i];
  return tr;
}

}  // namespace

TEST_CASE("closed words on d loops") {
  for (std::size_t d : {1u, 2u, 3u}) {
    auto s = fixtures::loops(Group::O, 2, d);
    auto words = enumerate_closed_paths(Alphabet::plain(s), 2);
    CHECK(words.size() == d + d * d);
  }
  auto s = fixtures::loops(Group::O, 2, 2);
  CHECK(enumerate_closed_paths(Alphabet::doubled(s), 2).size() == 4 + 16);
}

TEST_CASE("acyclic quivers have no closed words") {
  auto s = MixedQuiverSetting::plain({3, {fixtures::arrow("a", 2, 1), fixtures::arrow("b", 3, 2)}}, {1, 2, 3});
  CHECK(enumerate_closed_paths(Alphabet::plain(s), 6).empty());
  CHECK(enumerate_path_classes(Alphabet::plain(s), 6, Equivalence::cyclic, true).empty());
  CHECK(enumerate_paths(Alphabet::plain(s), 3, 1, 3).size() == 1);
  CHECK_THROWS_AS(enumerate_closed_paths(Alphabet::plain(s), 0), PreconditionError);
}

TEST_CASE("closed word counts agree with adjacency traces") {
  for (auto s : {fixtures::five_vertex(2, 2, 2), fixtures::triangle(2, 3), sigma_tr_setting(2)}) {
    for (const Alphabet& a : {Alphabet::plain(s), Alphabet::doubled(s)}) {
      auto words = enumerate_closed_paths(a, 5);
      std::vector<std::size_t> by_len(6, 0);
      for (const Word& w : words) {
        CHECK(is_closed(s, w));
        ++by_len[w.size()];
      }
      for (std::size_t k = 1; k <= 5; ++k) CHECK(by_len[k] == closed_walks(a, k));
      CHECK(std::set<Word>(words.begin(), words.end()).size() == words.size());
    }
  }
}

TEST_CASE("class sizes partition the closed words") {
  auto s = sigma_tr_setting(2);
  Alphabet a = Alphabet::doubled(s);
  for (Equivalence eq : {Equivalence::cyclic, Equivalence::cyclic_transpose}) {
    auto classes = enumerate_path_classes(a, 4, eq, false);
    std::size_t total = 0;
    for (const auto& c : classes) {
      CHECK(canonical(c.representative, eq) == c.representative);
      total += c.size;
    }
    CHECK(total == enumerate_closed_paths(a, 4).size());
  }
}

TEST_CASE("words at vertex 1 of the sigma_tr quiver") {
  auto s = sigma_tr_setting(2);
  const Letter x = sigma_tr_x(), y = sigma_tr_y(), z = sigma_tr_z();
  CHECK(is_closed(s, {x}));
  CHECK(is_closed(s, {y, z}));
  CHECK(is_closed(s, {x, y, z}));
  CHECK_FALSE(is_composable(s, {y, y}));
  CHECK(is_closed(s, {y, z.transpose()}));
  CHECK_FALSE(is_composable(s, {x, x.transpose()}));
  CHECK(is_closed(s, {x.transpose()}) == true);
  CHECK(word_head(s, {x.transpose()}) == 2);
  auto classes = enumerate_path_classes(Alphabet::doubled(s), 2, Equivalence::cyclic_transpose, true, 1);
  std::set<Word> reps;
  for (const auto& c : classes) {
    CHECK(word_head(s, c.representative) == 1);
    reps.insert(c.representative);
  }
  CHECK(reps.count({x}));
  CHECK(reps.count({y, z.transpose()}));
  CHECK(reps.size() == 3);
  CHECK(reps.count({y, z}));
}

TEST_CASE("primitive roots") {
  const Letter x{0, false}, y{1, false};
  auto [root, k] = primitive_root({x, y, x, y, x, y});
  CHECK(root == Word{x, y});
  CHECK(k == 3);
  CHECK(is_primitive({x, y, y}));
  CHECK_FALSE(is_primitive({x, x}));
  CHECK(primitive_root({x}).second == 1);
}

TEST_CASE("canonical forms") {
  const Letter x = sigma_tr_x(), y = sigma_tr_y(), z = sigma_tr_z();
  CHECK(canonical_cyclic({y, x}) == Word{x, y});
  CHECK(canonical_cyclic({z, x, y}) == Word{x, y, z});
  // Y Z and its transpose Z^T Y^T lie in one class.
  CHECK(canonical_cyclic_transpose({y, z}) == canonical_cyclic_transpose({z.transpose(), y.transpose()}));
  CHECK(canonical_cyclic_transpose({y, z}) == canonical_cyclic_transpose({y.transpose(), z.transpose()}));
  CHECK(canonical_cyclic_transpose({y, z}) != canonical_cyclic_transpose({y, z.transpose()}));
  const Word w{x, y, x.transpose(), z};
  CHECK(canonical_cyclic_transpose(w) == canonical_cyclic_transpose(transpose_word(w)));
  CHECK(canonical_cyclic_transpose(w) == canonical_cyclic_transpose(rotate(transpose_word(w), 2)));
  CHECK(canonical_cyclic(w) != canonical_cyclic(transpose_word(w)));
  CHECK(class_size(w, Equivalence::cyclic) == 4);
  CHECK(class_size(w, Equivalence::cyclic_transpose) == 8);
  CHECK(class_size({x, x}, Equivalence::cyclic) == 1);
  CHECK(class_size({x, x.transpose()}, Equivalence::cyclic_transpose) == 2);
}

TEST_CASE("canonical representatives are orbit minima") {
  Rng rng(11);
  const Letter a{0, false}, b{0, true}, c{1, false};
  const std::vector<Letter> pool{a, b, c};
  for (int trial = 0; trial < 200; ++trial) {
    Word w(1 + qi::uniform_int(rng, 0, 6));
    for (auto& l : w) l = pool[qi::uniform_int(rng, 0, 2)];
    Word best = w;
    for (std::size_t k = 0; k < w.size(); ++k) best = std::min(best, rotate(w, k));
    CHECK(canonical_cyclic(w) == best);
    Word t = transpose_word(w);
    for (std::size_t k = 0; k < t.size(); ++k) best = std::min(best, rotate(t, k));
    CHECK(canonical_cyclic_transpose(w) == best);
  }
}

TEST_CASE("multidegree and letter degree") {
  auto s = sigma_tr_setting(2);
  const Letter x = sigma_tr_x(), y = sigma_tr_y(), z = sigma_tr_z();
  const Word w{x, y, x.transpose(), z};
  CHECK(multidegree(s, w) == std::vector<std::size_t>{2, 1, 1});
  CHECK(degree_in(w, x) == 1);
  CHECK(degree_in(w, x.transpose()) == 1);
  CHECK(multidegree(s, {y, z.transpose()}) == std::vector<std::size_t>{0, 1, 1});
}

TEST_CASE("path values multiply and transpose") {
  Rng rng(12);
  auto s = fixtures::triangle(2, 3);
  Representation rep = sample_representation(s, Q, rng);
  const Letter a{0, false}, b{1, false}, c{2, false};
  // alpha: 3 -> 1, gamma: 2 -> 3, beta: 1 -> 2
  const Word w{a, c, b};
  REQUIRE(is_closed(s, w));
  CHECK(path_value(s, rep, w) == rep.arrows[0] * rep.arrows[2] * rep.arrows[1]);
  CHECK(path_value(s, rep, {a, c}) * path_value(s, rep, {b}) == path_value(s, rep, w));
  CHECK(path_value(s, rep, transpose_word({a, c})) == path_value(s, rep, {a, c}).transpose());
  CHECK_THROWS_AS(path_value(s, rep, transpose_word(w)), PreconditionError);
  CHECK_THROWS_AS(path_value(s, rep, {a, a}), PreconditionError);
  CHECK_THROWS_AS(path_value(s, rep, {}), PreconditionError);
}

TEST_CASE("word names round trip") {
  auto s = sigma_tr_setting(2);
  const Word w{sigma_tr_x(), sigma_tr_y(), sigma_tr_x().transpose(), sigma_tr_z()};
  CHECK(parse_word(s, word_to_names(s, w)) == w);
  CHECK_THROWS_AS(parse_word(s, {}), SchemaError);
  CHECK_THROWS(parse_word(s, {"W"}));
}
