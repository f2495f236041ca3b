#pragma once

// The standard model of sequences: every value is a finite list of values.

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace seqth {

class Seq {
 public:
  Seq() = default;
  explicit Seq(std::vector<Seq> elements);

  const std::vector<Seq>& elements() const noexcept { return elements_; }
  std::size_t length() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }

  /// Total number of sequence nodes, the root included. size(()) == 1.
  std::size_t size() const noexcept { return size_; }

  friend bool operator==(const Seq&, const Seq&) = default;

 private:
  std::vector<Seq> elements_;
  std::size_t size_ = 1;
};

/// Enumeration order: size first, then element-wise under the same order.
std::strong_ordering compare(const Seq& a, const Seq& b);

struct SeqLess {
  bool operator()(const Seq& a, const Seq& b) const { return compare(a, b) < 0; }
};

/// s ⊢ t: t becomes the new last element of s.
Seq append(const Seq& s, const Seq& t);

/// s ∘ t: element lists juxtaposed.
Seq concat(const Seq& s, const Seq& t);

/// Prefixes of s, shortest first; always starts with () and ends with s.
std::vector<Seq> initial_segments(const Seq& s);

/// True iff s's element list is a prefix of t's, i.e. ∃r. s ∘ r = t.
bool is_prefix(const Seq& s, const Seq& t);

/// The r with s ∘ r == t, when s is a prefix of t.
Seq suffix_after(const Seq& s, const Seq& t);

/// Every Seq of size <= bound exactly once, in enumeration order.
std::vector<Seq> enumerate(std::size_t bound);

/// Every Seq of exactly the given size, in enumeration order.
std::vector<Seq> enumerate_exact(std::size_t size);

/// Balanced-parentheses literal, siblings separated by one space: `(() (()))`.
std::string to_string(const Seq& s);

/// Parses the literal form. Whitespace between siblings is optional.
/// Throws ParseError on unbalanced or trailing input.
Seq parse_seq(std::string_view text);

}  // namespace seqth
