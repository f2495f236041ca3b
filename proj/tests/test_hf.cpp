#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "seqth/error.hpp"
#include "seqth/hf.hpp"

using namespace seqth;

namespace {

FiniteTree node(std::vector<FiniteTree> children) { return FiniteTree(std::move(children)); }
HFSet H(std::string_view text) { return parse_hf(text); }

std::vector<Snake> all_snakes_of_length(std::size_t len) {
  std::vector<Snake> out;
  if (len == 1) return {{0}};
  if (len % 2 == 0) return out;
  for (const auto& t : trees_with_leaves((len + 1) / 2)) out.push_back(tree_to_snake(t));
  return out;
}

}  // namespace

TEST_CASE("the F bijection") {
  CHECK(F_map(FiniteTree{}) == BinTree::leaf());
  CHECK(F_map(node({FiniteTree{}})) == BinTree::pair(BinTree::leaf(), BinTree::leaf()));
  CHECK(F_map(node({FiniteTree{}, FiniteTree{}})) ==
        BinTree::pair(BinTree::pair(BinTree::leaf(), BinTree::leaf()), BinTree::leaf()));
  CHECK_THROWS_AS(node({}), DomainError);

  for (std::size_t n = 1; n <= 8; ++n) {
    const auto trees = finite_trees_with_nodes(n);
    // Finite trees with n nodes are counted by C(n-1), like binary trees with n leaves.
    CHECK(trees.size() == oracle::catalan(n - 1));
    std::set<Snake> images;
    for (const auto& t : trees) {
      CHECK(t.nodes() == n);
      const BinTree b = F_map(t);
      CHECK(b.leaves() == n);
      CHECK(F_inv(b) == t);
      images.insert(tree_to_snake(b));
    }
    CHECK(images.size() == trees.size());
    for (const auto& b : trees_with_leaves(n)) CHECK(F_map(F_inv(b)) == b);
  }
}

TEST_CASE("the order on snakes") {
  CHECK(snake_less({0}, {2, 1, 0}));
  CHECK(snake_less({2, 1, 2, 1, 0}, {2, 3, 2, 1, 0}));
  CHECK_FALSE(snake_less({2, 1, 0}, {2, 1, 0}));

  std::vector<Snake> all;
  for (std::size_t len = 1; len <= 11; len += 2) {
    const auto level = all_snakes_of_length(len);
    all.insert(all.end(), level.begin(), level.end());
  }
  for (const auto& f : all) {
    CHECK_FALSE(snake_less(f, f));
    for (const auto& g : all) {
      if (f != g) CHECK(snake_less(f, g) != snake_less(g, f));
    }
  }
  // Transitivity on a slice small enough for the cubic loop.
  const std::size_t m = std::min<std::size_t>(all.size(), 60);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        if (snake_less(all[i], all[j]) && snake_less(all[j], all[k])) CHECK(snake_less(all[i], all[k]));
      }
    }
  }
}

TEST_CASE("cardinality and membership") {
  CHECK(cardinality({0}) == 0);
  CHECK(cardinality({2, 1, 0}) == 1);
  CHECK(cardinality({2, 3, 2, 1, 2, 1, 0}) == 2);

  const Snake f{2, 3, 2, 1, 2, 1, 0};
  CHECK(member_star({0}, f));
  CHECK(member_star({2, 1, 0}, f));
  CHECK_FALSE(member_star({2, 3, 2, 1, 0}, f));
  CHECK_FALSE(member_star({0}, {0}));

  CHECK(members({0}).empty());
  CHECK(members(f) == std::vector<Snake>{{0}, {2, 1, 0}});
}

TEST_CASE("a general snake that is not ordered") {
  const Snake x = polish_to_snake("bbabbbaaaababaa");
  CHECK(x == Snake{2, 3, 2, 3, 4, 5, 4, 3, 2, 1, 2, 1, 2, 1, 0});
  CHECK(decompose(x) == std::vector<Snake>{{2, 3, 4, 3, 2, 1, 0}, {2, 1, 2, 1, 0}});
  CHECK_FALSE(is_ordered_snake(x));
  CHECK_THROWS_AS(members(x), DomainError);
  CHECK_THROWS_AS(snake_to_hf(x), DomainError);
  // As a finite tree it reads as ⟨⟨⊥,⊥,⊥⟩,⟨⟨⊥⟩⟩⟩.
  const FiniteTree expected = node({node({FiniteTree{}, FiniteTree{}, FiniteTree{}}), node({node({FiniteTree{}})})});
  CHECK(F_inv(snake_to_tree(x)) == expected);
}

TEST_CASE("membership agrees with decomposition on ordered snakes") {
  std::vector<Snake> ordered;
  for (std::size_t len = 1; len <= 13; len += 2) {
    for (const auto& s : all_snakes_of_length(len)) {
      if (is_ordered_snake(s)) ordered.push_back(s);
    }
  }
  CHECK(ordered.size() > 10);
  for (const auto& f : ordered) {
    const auto ms = members(f);
    CHECK(ms.size() == cardinality(f));
    for (const auto& g : ordered) {
      const bool listed = std::find(ms.begin(), ms.end(), g) != ms.end();
      CHECK(member_star(g, f) == listed);
    }
  }
}

TEST_CASE("encoding sets") {
  CHECK(hf_to_snake(H("{}")) == Snake{0});
  CHECK(hf_to_snake(H("{{}}")) == Snake{2, 1, 0});
  CHECK(hf_to_snake(H("{{},{{}}}")) == Snake{2, 3, 2, 1, 2, 1, 0});
  CHECK(hf_to_snake(H("{{{}},{}}")) == Snake{2, 3, 2, 1, 2, 1, 0});
  CHECK(adjoin({0}, {0}) == Snake{2, 1, 0});
  CHECK(adjoin({2, 1, 0}, {0}) == Snake{2, 1, 0});
  CHECK(adjoin({2, 1, 0}, {2, 1, 0}) == Snake{2, 3, 2, 1, 2, 1, 0});
  CHECK(snake_to_hf({2, 3, 2, 1, 2, 1, 0}) == H("{{},{{}}}"));
}

TEST_CASE("stages") {
  CHECK(stage(0).size() == 1);
  CHECK(stage(1).size() == 2);
  CHECK(stage(2).size() == 4);
  CHECK(stage(3).size() == 16);
  CHECK_THROWS_AS(stage(5), DomainError);
  const auto sample = sample_stage(4, 50, 1);
  CHECK(sample.size() == 50);
  const auto v3 = stage(3);
  for (const auto& s : sample) {
    for (const auto& m : s.members()) CHECK(std::find(v3.begin(), v3.end(), m) != v3.end());
  }
  CHECK(sample_stage(4, 50, 1).front() == sample.front());
}

TEST_CASE("the encoding agrees with Ackermann coding") {
  std::set<Snake> seen;
  for (std::uint32_t n = 0; n < 1U << 12; ++n) {
    const HFSet s = oracle::ackermann_set(n);
    const Snake x = hf_to_snake(s);
    CHECK(is_ordered_snake(x));
    CHECK(oracle::ackermann_code(snake_to_hf(x)) == n);
    seen.insert(x);
  }
  CHECK(seen.size() == 1U << 12);
}

TEST_CASE("extensionality on V3") {
  const auto v = stage(3);
  for (const auto& x : v) {
    for (const auto& y : v) {
      bool same = true;
      for (const auto& z : v) same = same && x.contains(z) == y.contains(z);
      CHECK(same == (hf_to_snake(x) == hf_to_snake(y)));
    }
  }
}

TEST_CASE("set text") {
  CHECK(to_string(H("{ {{}} , {} }")) == "{{},{{}}}");
  CHECK(H("{{},{}}") == H("{{}}"));
  CHECK_THROWS_AS(parse_hf("{"), ParseError);
  CHECK_THROWS_AS(parse_hf("{}}"), ParseError);
  CHECK_THROWS_AS(parse_hf("{,}"), ParseError);
}
