#pragma once

// Full binary trees, their Polish notation over {a,b}, and the snake codec.

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "seqth/indexed.hpp"

namespace seqth {

/// Either the leaf ⊥ or a pair ⟨left, right⟩. Immutable with shared structure.
class BinTree {
 public:
  BinTree() = default;  // ⊥
  static BinTree leaf() { return {}; }
  static BinTree pair(BinTree left, BinTree right);

  bool is_leaf() const noexcept { return !node_; }
  const BinTree& left() const;
  const BinTree& right() const;
  std::size_t leaves() const noexcept;

  friend bool operator==(const BinTree& a, const BinTree& b);

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

using Snake = std::vector<Nat>;

bool is_snake(const Snake& x);
/// Throws DomainError if x is not a snake.
void require_snake(const Snake& x, std::string_view context);

/// Counting characterization: #b+1 = #a and every strict prefix has #a <= #b.
/// Throws ParseError on a character outside {a,b}.
bool is_polish(std::string_view alpha);
/// Membership in the inductive grammar a | bαβ, decided by recursive descent
/// with backtracking over every split.
bool in_polish_grammar(std::string_view alpha);

std::string tree_to_polish(const BinTree& t);
/// Throws ParseError for strings not in the grammar.
BinTree polish_to_tree(std::string_view alpha);

Snake polish_to_snake(std::string_view alpha);
std::string snake_to_polish(const Snake& x);

Snake tree_to_snake(const BinTree& t);
BinTree snake_to_tree(const Snake& x);

/// (2, x₁+1, …, xₙ+1, y₁, …, yₘ).
Snake snake_oplus(const Snake& x, const Snake& y);

/// R: x = [0], or x = y, or x is an up-step-entered shifted copy inside y.
bool snake_subpart(const Snake& x, const Snake& y);

/// ⟨f,g⟩ = 2/[0,0] ⌢ (f ⊕ 1/[0,n]) ⌢ g, built from indexed-sequence operations.
Snake snake_pair(const Snake& f, const Snake& g);

/// s is a subterm of t.
bool subtree(const BinTree& s, const BinTree& t);

/// Every binary tree with exactly n leaves (n >= 1), in a fixed order.
std::vector<BinTree> trees_with_leaves(std::size_t n);
/// Every binary tree with 1..n leaves, by leaf count.
std::vector<BinTree> trees_up_to_leaves(std::size_t n);

/// `bot` / `(pair t1 t2)`.
std::string to_string(const BinTree& t);
BinTree parse_tree(std::string_view text);

/// `[2,1,0]`.
std::string snake_to_string(const Snake& x);
/// Parses `[v0,...]` and checks the snake shape.
Snake parse_snake(std::string_view text);

}  // namespace seqth
