#pragma once

// Exhaustive instantiation of axiom systems over bounded domains of the
// intended models.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace seqth {

enum class AxiomSystem {
  seq,             // Seq₁–Seq₅ over sequences of size <= bound
  seq_star,        // Seq₁, Seq₂, Seq*₃, Seq₄, Seq*₅
  seq_plus,        // Seq, Seq* and cancellation
  wseq,            // the three WSeq schemes, instances over sequences of size <= bound
  t_snakes,        // T₁–T₄ on snakes of trees with <= bound leaves
  ast_tau,         // AST₁, AST₂ with ∈ read as τ-membership, size <= bound
  ast_ext_snakes,  // AST₁–AST₃ on ordered snakes of the stage V(bound), bound <= 3
};

/// Names accepted: seq, seq-star, seq-plus, wseq, t-snakes, ast-tau,
/// ast-ext-snakes. Throws DomainError on anything else.
AxiomSystem parse_system(std::string_view name);
std::string to_string(AxiomSystem system);

struct AxiomResult {
  std::string id;
  std::size_t tuples = 0;                     // instances checked
  std::optional<std::string> counterexample;  // first failing instance
  bool pass() const { return !counterexample; }
};

struct AxiomReport {
  AxiomSystem system;
  std::size_t bound;
  std::vector<AxiomResult> results;

  bool all_pass() const;
  /// One line per axiom: `id PASS tuples=N` or `id FAIL <counterexample>`.
  std::string to_text() const;
};

AxiomReport check_axioms(AxiomSystem system, std::size_t bound);

}  // namespace seqth
