#pragma once

// Indexed sequences f : [m, n] → ℕ and the algebra on them.

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace seqth {

using Nat = unsigned;

class IndexedSeq {
 public:
  /// Domain [start, start + values.size() - 1]. Throws DomainError if empty.
  IndexedSeq(std::vector<Nat> values, std::size_t start = 0);

  std::size_t start() const noexcept { return start_; }
  std::size_t end() const noexcept { return start_ + values_.size() - 1; }  // n, inclusive
  std::size_t length() const noexcept { return values_.size(); }
  const std::vector<Nat>& values() const noexcept { return values_; }

  /// f(k) for k in [start, end]; DomainError otherwise.
  Nat operator()(std::size_t k) const;

  friend bool operator==(const IndexedSeq&, const IndexedSeq&) = default;

 private:
  std::vector<Nat> values_;
  std::size_t start_;
};

/// x/[0,n]: the constant sequence.
IndexedSeq const_seq(Nat x, std::size_t n);

/// f⁰ₖ: the values of f : [0,n] moved to [k, k+n].
IndexedSeq shift(const IndexedSeq& f, std::size_t k);

/// f ∘ g for f : [m,k], g : [k+1,n] giving [m,n].
IndexedSeq join(const IndexedSeq& f, const IndexedSeq& g);

/// Restriction of f to [lo, hi] ⊆ dom(f).
IndexedSeq restrict(const IndexedSeq& f, std::size_t lo, std::size_t hi);

IndexedSeq pointwise_add(const IndexedSeq& f, const IndexedSeq& g);
/// Truncated difference a ∸ b = max(a - b, 0).
IndexedSeq pointwise_monus(const IndexedSeq& f, const IndexedSeq& g);

/// f⌢g = f ∘ g⁰ₙ₊₁ for f : [0,n], g : [0,m]; domain [0, n+m+1].
IndexedSeq concat_indexed(const IndexedSeq& f, const IndexedSeq& g);

struct Split {
  IndexedSeq head;  // [0, k]
  IndexedSeq tail;  // [0, n ∸ (k+1)]
};

/// The unique g, h with f = g⌢h and dom(g) = [0,k]. Requires 0 <= k < n.
Split split(const IndexedSeq& f, std::size_t k);

namespace editor {
struct Equal {
  friend bool operator==(const Equal&, const Equal&) = default;
};
/// f = p⌢h and h⌢g = q.
struct MiddleLeft {
  IndexedSeq h;
  friend bool operator==(const MiddleLeft&, const MiddleLeft&) = default;
};
/// p = f⌢h and h⌢q = g.
struct MiddleRight {
  IndexedSeq h;
  friend bool operator==(const MiddleRight&, const MiddleRight&) = default;
};
}  // namespace editor

using EditorCase = std::variant<editor::Equal, editor::MiddleLeft, editor::MiddleRight>;

/// Given f⌢g = p⌢q, decides which of the three overlap cases holds.
/// Throws DomainError if f⌢g != p⌢q or any argument does not start at 0.
EditorCase editor_compare(const IndexedSeq& f, const IndexedSeq& g, const IndexedSeq& p, const IndexedSeq& q);

/// `[v0,v1,...]@start`; the `@0` suffix is omitted.
std::string to_string(const IndexedSeq& f);
IndexedSeq parse_indexed(std::string_view text);

}  // namespace seqth
