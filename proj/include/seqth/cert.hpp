#pragma once

// Proof certificates for true Σ-sentences over the weak theory of sequences
// whose axioms are the three schemes
//   distinct sequerals name distinct sequences          (s̄ ≠ t̄),
//   sequeral concatenation                              (s̄ ∘ t̄ = st̄),
//   the prefixes of s̄ are exactly the sequerals of I(s) (x ⊑ s̄ → ⋁ x = t̄).
// A certificate mirrors the inductive argument that every true Σ-sentence is
// derivable from these schemes: each node carries the scheme instance data,
// and the checker recomputes every side condition from the node alone.

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "seqth/seq.hpp"
#include "seqth/sigma.hpp"
#include "seqth/syntax.hpp"

namespace seqth {

/// One instance of the concatenation scheme: s̄ ∘ t̄ = (s∘t)‾.
struct RewriteStep {
  Seq lhs;
  Seq rhs;
  Seq result;
  friend bool operator==(const RewriteStep&, const RewriteStep&) = default;
};

struct Normalization {
  Seq canon;
  std::vector<RewriteStep> trace;  // one step per ∘ node, innermost first
};

/// Rewrites a closed {e, ⊢, ∘} term to its sequeral. ⊢ needs no step since
/// s̄ ⊢ t̄ is literally the sequeral of s ⊢ t. Throws DomainError on open terms.
Normalization normalize_term(const Term& t);

/// Heap box with value semantics, for the recursive certificate nodes.
template <class T>
class Box {
 public:
  Box(T value) : ptr_(std::make_unique<T>(std::move(value))) {}  // NOLINT(google-explicit-constructor)
  Box(const Box& other) : ptr_(std::make_unique<T>(*other.ptr_)) {}
  Box(Box&&) noexcept = default;
  Box& operator=(const Box& other) {
    ptr_ = std::make_unique<T>(*other.ptr_);
    return *this;
  }
  Box& operator=(Box&&) noexcept = default;

  T& operator*() { return *ptr_; }
  const T& operator*() const { return *ptr_; }
  T* operator->() { return ptr_.get(); }
  const T* operator->() const { return ptr_.get(); }

  friend bool operator==(const Box& a, const Box& b) { return *a.ptr_ == *b.ptr_; }

 private:
  std::unique_ptr<T> ptr_;
};

struct Certificate;

struct EqNorm {
  Term lhs, rhs;
  Seq canon;
  friend bool operator==(const EqNorm&, const EqNorm&) = default;
};

struct NeqSequeral {
  Term lhs, rhs;
  Seq s, t;
  friend bool operator==(const NeqSequeral&, const NeqSequeral&) = default;
};

struct PrefixWitness {
  Term s, t;
  Seq r;
  friend bool operator==(const PrefixWitness&, const PrefixWitness&) = default;
};

struct NotPrefix {
  Term s, t;
  std::vector<Seq> segments;
  friend bool operator==(const NotPrefix&, const NotPrefix&) = default;
};

struct AndNode {
  Box<Certificate> left, right;
  friend bool operator==(const AndNode&, const AndNode&) = default;
};

struct OrLeft {
  Box<Certificate> sub;
  friend bool operator==(const OrLeft&, const OrLeft&) = default;
};

struct OrRight {
  Box<Certificate> sub;
  friend bool operator==(const OrRight&, const OrRight&) = default;
};

struct ExistsWitness {
  Seq witness;
  Box<Certificate> sub;
  friend bool operator==(const ExistsWitness&, const ExistsWitness&) = default;
};

struct BoundedAll {
  Seq bound_value;
  std::vector<Certificate> subs;  // one per initial segment, in order
  friend bool operator==(const BoundedAll&, const BoundedAll&) = default;
};

struct Certificate {
  std::variant<EqNorm, NeqSequeral, PrefixWitness, NotPrefix, AndNode, OrLeft, OrRight, ExistsWitness, BoundedAll> node;
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct ProofResult {
  Truth status = Truth::unknown;
  std::optional<Certificate> certificate;  // present iff status == yes
};

/// Builds a certificate for a closed Σ-sentence, searching ∃ witnesses of
/// size <= budget in enumeration order. `unknown` when the search runs out,
/// `no` when the sentence is refuted without unbounded search.
/// Throws DomainError on non-Σ or open input.
ProofResult prove_sigma(const Formula& f, std::size_t budget);

struct CheckResult {
  bool accepted = false;
  std::string reason;  // empty when accepted; otherwise "path: why"
  explicit operator bool() const { return accepted; }
};

/// Kernel: accepts iff the certificate's shape follows f and every side
/// condition recomputes.
CheckResult check_cert(const Certificate& cert, const Formula& f);

/// Stable JSON text (fixed field order, two-space indent).
std::string to_json(const Certificate& cert);
/// Throws ParseError on malformed JSON or an unknown node layout.
Certificate certificate_from_json(std::string_view text);

std::string_view node_name(const Certificate& cert);

}  // namespace seqth
