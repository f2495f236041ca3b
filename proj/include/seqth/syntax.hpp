#pragma once

// First-order syntax over three signatures:
//   sequences  {e, ⊢, ∘} with the ⊑ abbreviation,
//   trees      {⊥, ⟨·,·⟩, ⊑},
//   sets       {∈}.
// Terms and formulas are immutable trees with shared structure.

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "seqth/seq.hpp"

namespace seqth {

enum class Constant { e, bot };
enum class Op { app, cat, pair };  // ⊢, ∘, ⟨·,·⟩
enum class Rel { prefix, in, subtree };
enum class Connective { and_, or_, implies, iff };
enum class Signature { seq, tree, set };

class Term {
 public:
  enum class Kind { variable, constant, binary };

  static Term var(std::string name);
  static Term e();
  static Term bot();
  static Term app(Term lhs, Term rhs);
  static Term cat(Term lhs, Term rhs);
  static Term pair(Term lhs, Term rhs);
  static Term binary(Op op, Term lhs, Term rhs);

  Kind kind() const noexcept;
  bool is_var() const noexcept { return kind() == Kind::variable; }
  const std::string& name() const;  // variable only
  Constant constant() const;        // constant only
  Op op() const;                    // binary only
  const Term& lhs() const;
  const Term& rhs() const;

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

class Formula {
 public:
  enum class Kind { eq, rel, neg, binary, forall, exists, all_prefix };

  static Formula eq(Term lhs, Term rhs);
  static Formula rel(Rel r, Term lhs, Term rhs);
  static Formula prefix(Term lhs, Term rhs) { return rel(Rel::prefix, std::move(lhs), std::move(rhs)); }
  static Formula member(Term lhs, Term rhs) { return rel(Rel::in, std::move(lhs), std::move(rhs)); }
  static Formula neg(Formula f);
  static Formula binary(Connective c, Formula lhs, Formula rhs);
  static Formula conj(Formula lhs, Formula rhs) { return binary(Connective::and_, std::move(lhs), std::move(rhs)); }
  static Formula disj(Formula lhs, Formula rhs) { return binary(Connective::or_, std::move(lhs), std::move(rhs)); }
  static Formula implies(Formula lhs, Formula rhs) { return binary(Connective::implies, std::move(lhs), std::move(rhs)); }
  static Formula iff(Formula lhs, Formula rhs) { return binary(Connective::iff, std::move(lhs), std::move(rhs)); }
  static Formula forall(std::string var, Formula body);
  static Formula exists(std::string var, Formula body);
  /// ∀x⊑t[φ]. Throws DomainError if `var` occurs in `bound`.
  static Formula all_prefix(std::string var, Term bound, Formula body);

  Kind kind() const noexcept;
  // eq / rel
  Rel relation() const;
  const Term& lhs_term() const;
  const Term& rhs_term() const;
  // neg / binary / quantifiers
  Connective connective() const;
  const Formula& sub() const;  // neg, quantifier body
  const Formula& lhs() const;  // binary
  const Formula& rhs() const;  // binary
  const std::string& var() const;
  const Term& bound() const;  // all_prefix

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// ---- variables and substitution -------------------------------------------

std::set<std::string> free_vars(const Term& t);
std::set<std::string> free_vars(const Formula& f);
/// Every variable name occurring anywhere in f, bound or free.
std::set<std::string> all_vars(const Formula& f);
bool is_closed(const Term& t);
bool is_closed(const Formula& f);

/// Generates names `base1`, `base2`, ... that avoid a given set.
class FreshNames {
 public:
  explicit FreshNames(std::set<std::string> taken) : taken_(std::move(taken)) {}
  std::string next(std::string_view base);
  void reserve(const std::string& name) { taken_.insert(name); }

 private:
  std::set<std::string> taken_;
  std::size_t counter_ = 0;
};

Term substitute(const Term& t, const std::string& var, const Term& replacement);
/// Capture-avoiding: bound variables of f that clash with free variables of
/// the replacement are renamed.
Formula substitute(const Formula& f, const std::string& var, const Term& replacement);

// ---- signatures -------------------------------------------------------------

/// The single signature f's symbols belong to; nullopt when f uses only
/// variables and equality. Throws DomainError on mixed signatures.
std::optional<Signature> signature_of(const Formula& f);
std::optional<Signature> signature_of(const Term& t);

// ---- syntactic classes and translations -------------------------------------

/// The sequerals: canonical variable-free {e, ⊢} names for sequences.
Term sequeral(const Seq& s);

/// True iff f is generated by the Σ-clauses. Throws DomainError when f is
/// not over the sequence signature.
bool classify_sigma(const Formula& f);

/// φ^K. `klass` must have exactly one free variable (DomainError otherwise).
/// ∀x⊑t[φ] is treated as ∀x[x⊑t → φ] before relativizing.
Formula relativize(const Formula& f, const Formula& klass);

/// Replaces every s ⊑ t by ∃y[s∘y = t] and every ∀x⊑t[φ] by ∀x[x⊑t → φ].
Formula desugar_prefix(const Formula& f);

/// The direct interpretation τ of {∈} in the sequence language:
/// (u ∈ z)^τ = ∃v₁∃v₂[(v₁⊢u)∘v₂ = z]. Throws DomainError unless f is over {∈}.
Formula translate_ast(const Formula& f);

// ---- text format ------------------------------------------------------------

std::string to_string(const Term& t);
std::string to_string(const Formula& f);
Term parse_term(std::string_view text);
Formula parse_formula(std::string_view text);

}  // namespace seqth
