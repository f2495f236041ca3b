#include <doctest.h>

#include <map>
#include <set>

#include "oracles.hpp"
#include "seqth/error.hpp"
#include "seqth/snake.hpp"

using namespace seqth;

namespace {

BinTree L() { return BinTree::leaf(); }
BinTree P(BinTree a, BinTree b) { return BinTree::pair(std::move(a), std::move(b)); }

}  // namespace

TEST_CASE("snake shape") {
  CHECK(is_snake({0}));
  CHECK(is_snake({2, 1, 0}));
  CHECK(is_snake({2, 3, 2, 1, 2, 1, 0}));
  CHECK_FALSE(is_snake({}));
  CHECK_FALSE(is_snake({1, 0}));
  CHECK_FALSE(is_snake({2, 1, 0, 1, 0}));
  CHECK_FALSE(is_snake({2, 0}));
  CHECK_FALSE(is_snake({2, 1}));
  CHECK_THROWS_AS(require_snake({2, 1}, "test"), DomainError);
}

TEST_CASE("Polish strings") {
  CHECK(is_polish("a"));
  CHECK(is_polish("babaa"));
  CHECK_FALSE(is_polish("ba"));
  CHECK_FALSE(is_polish(""));
  CHECK_FALSE(is_polish("aba"));
  CHECK_THROWS_AS(is_polish("bac"), ParseError);
  CHECK(in_polish_grammar("bbabaaa"));
  CHECK_FALSE(in_polish_grammar("abbaa"));
}

TEST_CASE("counting, grammar and naive recognition agree") {
  for (std::size_t len = 0; len <= 13; ++len) {
    for (std::uint32_t bits = 0; bits < (1U << len); ++bits) {
      std::string s(len, 'a');
      for (std::size_t i = 0; i < len; ++i) {
        if (bits >> i & 1U) s[i] = 'b';
      }
      const bool counting = is_polish(s);
      CHECK(counting == in_polish_grammar(s));
      if (len <= 11) CHECK(counting == oracle::polish_naive(s));
    }
  }
}

TEST_CASE("worked examples") {
  CHECK(tree_to_snake(L()) == Snake{0});
  CHECK(tree_to_polish(L()) == "a");
  CHECK(tree_to_polish(P(L(), P(L(), L()))) == "babaa");
  CHECK(tree_to_snake(P(L(), P(L(), L()))) == Snake{2, 1, 2, 1, 0});
  CHECK(tree_to_snake(P(P(L(), P(L(), L())), L())) == Snake{2, 3, 2, 3, 2, 1, 0});
  CHECK(polish_to_tree("bbabaaa") == P(P(L(), P(L(), L())), L()));
  CHECK(polish_to_snake("babaa") == Snake{2, 1, 2, 1, 0});
  CHECK(snake_to_polish({2, 3, 2, 3, 2, 1, 0}) == "bbabaaa");
  CHECK_THROWS_AS(polish_to_tree("ba"), ParseError);
  CHECK_THROWS_AS(snake_to_tree({2, 1}), DomainError);
}

TEST_CASE("tree enumeration and round trips") {
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto trees = trees_with_leaves(n);
    CHECK(trees.size() == oracle::catalan(n - 1));
    std::set<Snake> snakes;
    for (const auto& t : trees) {
      CHECK(t.leaves() == n);
      const std::string alpha = tree_to_polish(t);
      CHECK(alpha == oracle::polish(t));
      CHECK(polish_to_tree(alpha) == t);
      const Snake x = tree_to_snake(t);
      CHECK(is_snake(x));
      CHECK(x == oracle::snake_by_counts(alpha));
      CHECK(snake_to_tree(x) == t);
      snakes.insert(x);
    }
    CHECK(snakes.size() == trees.size());
  }
  CHECK(trees_up_to_leaves(4).size() == 1 + 1 + 2 + 5);
}

TEST_CASE("⊕ and the pairing") {
  CHECK(snake_oplus({0}, {0}) == Snake{2, 1, 0});
  CHECK(snake_oplus({2, 1, 0}, {0}) == Snake{2, 3, 2, 1, 0});
  CHECK(snake_oplus({2, 1, 0}, {0}) == tree_to_snake(P(P(L(), L()), L())));
  CHECK(snake_pair({0}, {0}) == Snake{2, 1, 0});
  CHECK_THROWS_AS(snake_oplus({1}, {0}), DomainError);

  const auto trees = trees_up_to_leaves(5);
  std::map<Snake, std::pair<Snake, Snake>> seen;
  for (const auto& a : trees) {
    for (const auto& b : trees) {
      const Snake x = tree_to_snake(a), y = tree_to_snake(b);
      const Snake pair = snake_pair(x, y);
      CHECK(tree_to_snake(P(a, b)) == snake_oplus(x, y));
      CHECK(pair == snake_oplus(x, y));
      const auto [it, fresh] = seen.emplace(pair, std::pair{x, y});
      CHECK(fresh);
    }
  }
}

TEST_CASE("subparts") {
  CHECK(snake_subpart({0}, {2, 3, 2, 1, 0}));
  CHECK(snake_subpart({2, 1, 0}, {2, 1, 2, 1, 0}));
  CHECK_FALSE(snake_subpart({2, 3, 2, 1, 0}, {2, 1, 2, 1, 0}));
  CHECK(snake_subpart({2, 1, 0}, {2, 1, 0}));
  CHECK(subtree(L(), P(L(), L())));
  CHECK(subtree(P(L(), L()), P(L(), P(L(), L()))));
  CHECK_FALSE(subtree(P(L(), L()), L()));

  const auto trees = trees_up_to_leaves(5);
  for (const auto& a : trees) {
    for (const auto& b : trees) {
      const auto subs = oracle::subterms(b);
      const bool by_oracle = std::find(subs.begin(), subs.end(), a) != subs.end();
      CHECK(subtree(a, b) == by_oracle);
      CHECK(snake_subpart(tree_to_snake(a), tree_to_snake(b)) == by_oracle);
    }
  }
}

TEST_CASE("text forms") {
  const BinTree t = P(P(L(), P(L(), L())), L());
  CHECK(to_string(t) == "(pair (pair bot (pair bot bot)) bot)");
  CHECK(parse_tree(to_string(t)) == t);
  CHECK(parse_tree("bot") == L());
  CHECK_THROWS_AS(parse_tree("(pair bot)"), ParseError);
  CHECK_THROWS_AS(parse_tree("(app e e)"), Error);
  CHECK(snake_to_string({2, 1, 0}) == "[2,1,0]");
  CHECK(parse_snake("[2,1,2,1,0]") == Snake{2, 1, 2, 1, 0});
  CHECK_THROWS_AS(parse_snake("[2,1]"), ParseError);
  CHECK_THROWS_AS(parse_snake("[2,1,0]@1"), Error);
}
