#include <doctest.h>

#include <random>

#include "error.hpp"
#include "presentation.hpp"
#include "rewriting.hpp"

using namespace fillprobe;

namespace {

Word random_word(std::mt19937_64& rng, std::size_t gens, std::size_t max_len) {
  Word w;
  std::size_t n = rng() % (max_len + 1);
  for (std::size_t i = 0; i < n; ++i) {
    Letter x = static_cast<Letter>(rng() % gens + 1);
    w.push_back(rng() % 2 ? x : -x);
  }
  return w;
}

// Rewrites at a randomly chosen redex each step instead of the leftmost one.
Word reduce_randomly(Word w, const RewritingSystem& rws, std::mt19937_64& rng) {
  for (;;) {
    std::vector<std::pair<std::size_t, const RewriteRule*>> redexes;
    std::vector<std::size_t> cancels;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (rws.group_mode && w[i] == -w[i + 1]) cancels.push_back(i);
    for (const auto& rule : rws.rules)
      for (std::size_t i = 0; i + rule.lhs.size() <= w.size(); ++i)
        if (std::equal(rule.lhs.begin(), rule.lhs.end(), w.begin() + i)) redexes.emplace_back(i, &rule);
    if (redexes.empty() && cancels.empty()) return w;
    std::size_t pick = rng() % (redexes.size() + cancels.size());
    if (pick < cancels.size()) {
      w.erase(w.begin() + cancels[pick], w.begin() + cancels[pick] + 2);
    } else {
      auto [i, rule] = redexes[pick - cancels.size()];
      w.erase(w.begin() + i, w.begin() + i + rule->lhs.size());
      w.insert(w.begin() + i, rule->rhs.begin(), rule->rhs.end());
    }
  }
}

}  // namespace

TEST_CASE("shortlex ranks inverses right after generators") {
  CHECK(shortlex_less({1}, {-1}));
  CHECK(shortlex_less({-1}, {2}));
  CHECK(shortlex_less({2}, {1, 1}));
  CHECK_FALSE(shortlex_less({1, 2}, {1, 2}));
}

TEST_CASE("completion of the commutator presentation") {
  auto p = parse_presentation("a,b | a b a^-1 b^-1");
  auto rws = knuth_bendix_bounded(p);
  REQUIRE(rws.confluent());
  bool has_commute = false;
  for (const auto& r : rws.rules) has_commute |= (r.lhs == Word{2, 1} && r.rhs == Word{1, 2});
  CHECK(has_commute);
  CHECK(rws.rules.size() == 4);
  CHECK(normal_form({2, 1}, rws) == Word{1, 2});
  CHECK(normal_form({2, 1, -1}, rws) == Word{2});
}

TEST_CASE("free group completes with no rules") {
  auto rws = knuth_bendix_bounded(parse_presentation("a,b |"));
  CHECK(rws.confluent());
  CHECK(rws.rules.empty());
  CHECK(normal_form({1, 2, 1}, rws) == Word{1, 2, 1});
}

TEST_CASE("tiny budget leaves Baumslag-Solitar incomplete") {
  auto p = parse_presentation("a,t | t a t^-1 a^-1 a^-1");
  auto rws = knuth_bendix_bounded(p, {4, 64});
  CHECK(rws.status == RewritingStatus::kIncomplete);
  CHECK_THROWS_AS(normal_form({1}, rws), Error);
}

TEST_CASE("budget below the seed count is rejected") {
  auto p = parse_presentation("a,b | a^2, b^2");
  CHECK_THROWS_AS(knuth_bendix_bounded(p, {1, 64}), Error);
}

TEST_CASE("local confluence of small systems") {
  CHECK(check_local_confluence(make_rewriting_system(2, {})).empty());
  // Without implicit cancellation a lone commutation rule has no overlaps
  // that fail to join.
  auto commute = make_rewriting_system(2, {{{2, 1}, {1, 2}}}, false);
  CHECK(check_local_confluence(commute).empty());
  CHECK(commute.confluent());
  auto cube = make_rewriting_system(1, {{{1, 1}, {}}, {{1, 1, 1}, {1}}}, false);
  CHECK(check_local_confluence(cube).empty());
}

TEST_CASE("commutation alone is not complete once inverses cancel") {
  auto rws = make_rewriting_system(2, {{{2, 1}, {1, 2}}}, true);
  CHECK_FALSE(check_local_confluence(rws).empty());
  CHECK(rws.status == RewritingStatus::kIncomplete);
}

TEST_CASE("rules that do not decrease are rejected") {
  CHECK_THROWS_AS(make_rewriting_system(2, {{{1, 2}, {2, 1}}}), Error);
  CHECK_THROWS_AS(make_rewriting_system(1, {{{3}, {}}}), Error);
}

TEST_CASE("normal forms are idempotent, multiplicative and strategy independent") {
  const char* sources[] = {"a,b | a b a^-1 b^-1", "a,b,c | a b a^-1 b^-1, a c a^-1 c^-1, b c b^-1 c^-1",
                           "a,c,b,d | a b a^-1 b^-1 c d c^-1 d^-1", "a | a^5"};
  std::mt19937_64 rng(11);
  for (const char* src : sources) {
    auto p = parse_presentation(src);
    auto rws = knuth_bendix_bounded(p);
    REQUIRE(rws.confluent());
    for (int trial = 0; trial < 200; ++trial) {
      Word u = random_word(rng, p.generator_count(), 10);
      Word v = random_word(rng, p.generator_count(), 10);
      Word nu = normal_form(u, rws);
      CHECK(normal_form(nu, rws) == nu);
      CHECK(normal_form(concat(u, v), rws) == normal_form(concat(nu, v), rws));
      CHECK(reduce_randomly(u, rws, rng) == nu);
    }
  }
}
