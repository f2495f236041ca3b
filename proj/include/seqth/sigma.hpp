#pragma once

// Truth in the standard model of sequences.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "seqth/seq.hpp"
#include "seqth/syntax.hpp"

namespace seqth {

using Env = std::map<std::string, Seq>;

/// Value of a term over {e, ⊢, ∘}. Throws DomainError on a variable not in
/// env or on a tree-signature symbol.
Seq eval_term(const Term& t, const Env& env = {});

/// u ∈τ y, i.e. ∃v₁v₂[(v₁⊢u)∘v₂ = y], decided by trying every split of y.
bool tau_member(const Seq& u, const Seq& y);

enum class Truth { yes, no, unknown };

struct Binding {
  std::string var;
  Seq value;
  friend bool operator==(const Binding&, const Binding&) = default;
};

/// Outcome of a budgeted Σ search. On `yes`, `witnesses` lists the value
/// chosen for every ∃ on the accepting path, in left-to-right order (bounded
/// ∀ contributes the witnesses of each instance, in segment order).
struct Verdict {
  Truth truth = Truth::unknown;
  std::vector<Binding> witnesses;
};

/// Semi-decides a closed Σ-sentence. Unbounded ∃ searches all values of
/// size <= budget; a failed search yields `unknown`, never `no`. `no` is only
/// reported when the falsity is established without unbounded search.
/// Throws DomainError when f is not a closed Σ-sentence.
Verdict eval_sigma(const Formula& f, std::size_t budget);

/// Evaluates an arbitrary formula in the truncation of the standard model to
/// values of size <= bound: ∀ and ∃ range over enumerate(bound), while terms,
/// ⊑ atoms and ∀x⊑t are computed exactly. `in` is read as τ-membership.
bool eval_bounded(const Formula& f, std::size_t bound, const Env& env = {});

std::string to_string(Truth t);

}  // namespace seqth
