#pragma once

// Finite trees, hereditarily finite sets and their ordered-snake encoding.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "seqth/snake.hpp"

namespace seqth {

/// ⊥ or ⟨T₁, …, Tₙ⟩ with n >= 1.
class FiniteTree {
 public:
  FiniteTree() = default;  // ⊥
  /// Throws DomainError on an empty child list.
  explicit FiniteTree(std::vector<FiniteTree> children);

  bool is_empty() const noexcept { return children_.empty(); }
  const std::vector<FiniteTree>& children() const noexcept { return children_; }
  std::size_t nodes() const noexcept;

  friend bool operator==(const FiniteTree&, const FiniteTree&) = default;

 private:
  std::vector<FiniteTree> children_;
};

/// F(⊥) = ⊥, F(⟨T₁,…,Tₙ⟩) = ⟨…⟨⟨⊥,F(T₁)⟩,F(T₂)⟩…,F(Tₙ)⟩.
BinTree F_map(const FiniteTree& t);
FiniteTree F_inv(const BinTree& b);

/// Every finite tree with exactly n nodes (n >= 1).
std::vector<FiniteTree> finite_trees_with_nodes(std::size_t n);

/// f ≪ g: shorter first, then smaller at the first differing index.
bool snake_less(const Snake& f, const Snake& g);

/// For a snake bᵏaβ₁…βₖ, the blocks β₁…βₖ as snakes; empty for [0].
/// Throws DomainError on non-snakes.
std::vector<Snake> decompose(const Snake& x);

/// [0], or bᵏaβ₁…βₖ with β₁ ≪ … ≪ βₖ and every βᵢ itself ordered.
bool is_ordered_snake(const Snake& x);

/// Least j with f(j) = j. Throws DomainError if there is none.
std::size_t cardinality(const Snake& f);

/// g ∈★ f, read directly off the least-index conditions.
bool member_star(const Snake& g, const Snake& f);

/// The members of an ordered snake in ≪ order. Throws DomainError otherwise.
std::vector<Snake> members(const Snake& f);

/// A hereditarily finite set. Members are kept duplicate-free and sorted by
/// the ≪ order of their encodings, so equal sets are equal values.
class HFSet {
 public:
  HFSet();  // ∅
  explicit HFSet(std::vector<HFSet> members);

  const std::vector<HFSet>& members() const noexcept { return members_; }
  const Snake& snake() const noexcept { return snake_; }
  bool contains(const HFSet& x) const;

  friend bool operator==(const HFSet& a, const HFSet& b) { return a.snake_ == b.snake_; }

 private:
  std::vector<HFSet> members_;
  Snake snake_;
};

Snake hf_to_snake(const HFSet& s);
/// Throws DomainError unless x is an ordered snake.
HFSet snake_to_hf(const Snake& x);

/// The ordered snake of members(f) ∪ {g}.
Snake adjoin(const Snake& f, const Snake& g);

/// Cumulative stages: V(0) = {∅}, V(n+1) = P(V(n)); so |V(3)| = 16.
/// Throws DomainError for n > 4.
std::vector<HFSet> stage(std::size_t n);

/// `count` uniformly random subsets of stage(n-1), i.e. elements of stage(n).
/// Requires 1 <= n <= 4.
std::vector<HFSet> sample_stage(std::size_t n, std::size_t count, std::uint32_t seed);

/// `{}`, `{{},{{}}}`; members printed in canonical order.
std::string to_string(const HFSet& s);
/// Whitespace-insensitive; duplicates allowed.
HFSet parse_hf(std::string_view text);

}  // namespace seqth
