#include "seqth/axioms.hpp"

#include <map>

#include "seqth/error.hpp"
#include "seqth/hf.hpp"
#include "seqth/seq.hpp"
#include "seqth/sigma.hpp"
#include "seqth/snake.hpp"
#include "seqth/syntax.hpp"

namespace seqth {

namespace {

const std::map<std::string_view, AxiomSystem>& system_names() {
  static const std::map<std::string_view, AxiomSystem> names{
      {"seq", AxiomSystem::seq},           {"seq-star", AxiomSystem::seq_star},
      {"seq-plus", AxiomSystem::seq_plus}, {"wseq", AxiomSystem::wseq},
      {"t-snakes", AxiomSystem::t_snakes}, {"ast-tau", AxiomSystem::ast_tau},
      {"ast-ext-snakes", AxiomSystem::ast_ext_snakes},
  };
  return names;
}

// Instantiates a universal statement over every tuple of dom of the given
// arity, stopping at the first failing instance.
template <class T, class Render, class Pred>
AxiomResult for_all(std::string id, const std::vector<T>& dom, const std::vector<std::string>& names,
                    Render render, Pred holds) {
  AxiomResult result;
  result.id = std::move(id);
  if (dom.empty()) return result;
  std::vector<std::size_t> idx(names.size(), 0);
  std::vector<const T*> args(names.size(), &dom.front());
  for (;;) {
    ++result.tuples;
    if (!holds(args)) {
      std::string text;
      for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) text += ' ';
        text += names[i] + "=" + render(*args[i]);
      }
      result.counterexample = text;
      return result;
    }
    std::size_t i = names.size();
    for (; i > 0; --i) {
      auto& k = idx[i - 1];
      if (++k < dom.size()) {
        args[i - 1] = &dom[k];
        break;
      }
      k = 0;
      args[i - 1] = &dom.front();
    }
    if (i == 0) return result;
  }
}

std::string render_seq(const Seq& s) { return to_string(s); }

const Seq kEmpty{};

// ---- sequence axioms --------------------------------------------------------

AxiomResult seq1(const std::vector<Seq>& d) {
  return for_all("Seq1", d, {"x", "y"}, render_seq, [](auto& a) { return append(*a[0], *a[1]) != kEmpty; });
}

AxiomResult seq2(const std::vector<Seq>& d) {
  return for_all("Seq2", d, {"x1", "x2", "y1", "y2"}, render_seq, [](auto& a) {
    return append(*a[0], *a[1]) != append(*a[2], *a[3]) || (*a[0] == *a[2] && *a[1] == *a[3]);
  });
}

AxiomResult seq3(const std::vector<Seq>& d) {
  return for_all("Seq3", d, {"x"}, render_seq, [](auto& a) { return concat(*a[0], kEmpty) == *a[0]; });
}

AxiomResult seq4(const std::vector<Seq>& d) {
  return for_all("Seq4", d, {"x", "y", "z"}, render_seq, [](auto& a) {
    return concat(*a[0], append(*a[1], *a[2])) == append(concat(*a[0], *a[1]), *a[2]);
  });
}

AxiomResult seq5(const std::vector<Seq>& d) {
  return for_all("Seq5", d, {"x"}, render_seq, [](auto& a) {
    const Seq& x = *a[0];
    if (x == kEmpty) return true;
    // The witnesses are forced: y is x without its last element, z that element.
    const auto& el = x.elements();
    const Seq y(std::vector<Seq>(el.begin(), el.end() - 1));
    return append(y, el.back()) == x;
  });
}

AxiomResult seq_star3(const std::vector<Seq>& d) {
  return for_all("Seq*3", d, {"x"}, render_seq,
                 [](auto& a) { return concat(*a[0], kEmpty) == *a[0] && concat(kEmpty, *a[0]) == *a[0]; });
}

AxiomResult seq_star5(const std::vector<Seq>& d) {
  return for_all("Seq*5", d, {"x", "y", "z", "w"}, render_seq, [](auto& a) {
    const Seq &x = *a[0], &y = *a[1], &z = *a[2], &w = *a[3];
    const bool lhs = concat(x, y) == concat(z, w);
    // z = x∘u and x = z∘u each determine u as a suffix, so these are the only candidates.
    bool rhs = false;
    if (is_prefix(x, z)) {
      const Seq u = suffix_after(x, z);
      rhs = rhs || concat(u, w) == y;
    }
    if (is_prefix(z, x)) {
      const Seq u = suffix_after(z, x);
      rhs = rhs || concat(u, y) == w;
    }
    return lhs == rhs;
  });
}

AxiomResult seq_plus_c(const std::vector<Seq>& d) {
  return for_all("Seq+c", d, {"x", "y", "z"}, render_seq, [](auto& a) {
    const Seq &x = *a[0], &y = *a[1], &z = *a[2];
    const bool premise = concat(x, y) == concat(x, z) || concat(y, x) == concat(z, x);
    return !premise || y == z;
  });
}

// ---- WSeq schemes, one instance per tuple of sequences -----------------------

AxiomResult wseq1(const std::vector<Seq>& d) {
  return for_all("WSeq1", d, {"s", "t"}, render_seq, [](auto& a) {
    return *a[0] == *a[1] || eval_term(sequeral(*a[0])) != eval_term(sequeral(*a[1]));
  });
}

AxiomResult wseq2(const std::vector<Seq>& d) {
  return for_all("WSeq2", d, {"s", "t"}, render_seq, [](auto& a) {
    return eval_term(Term::cat(sequeral(*a[0]), sequeral(*a[1]))) == eval_term(sequeral(concat(*a[0], *a[1])));
  });
}

AxiomResult wseq3(const std::vector<Seq>& d) {
  // x ranges over the whole domain; every prefix of s is no larger than s.
  return for_all("WSeq3", d, {"s", "x"}, render_seq, [](auto& a) {
    const Seq& x = *a[1];
    if (!is_prefix(x, eval_term(sequeral(*a[0])))) return true;
    for (const auto& t : initial_segments(*a[0])) {
      if (x == eval_term(sequeral(t))) return true;
    }
    return false;
  });
}

// ---- AST under τ ------------------------------------------------------------

AxiomResult ast_tau1(const std::vector<Seq>& d) {
  return for_all("AST1", d, {"x"}, render_seq, [](auto& a) { return !tau_member(*a[0], kEmpty); });
}

AxiomResult ast_tau2(const std::vector<Seq>& d) {
  // z = x⊢y; members of z are members of x or y, so u over the domain is exhaustive.
  return for_all("AST2", d, {"x", "y", "u"}, render_seq, [](auto& a) {
    const Seq &x = *a[0], &y = *a[1], &u = *a[2];
    return tau_member(u, append(x, y)) == (tau_member(u, x) || u == y);
  });
}

// ---- T on snakes ------------------------------------------------------------

std::string render_snake(const Snake& s) { return snake_to_string(s); }

std::vector<AxiomResult> t_axioms(std::size_t leaves) {
  std::vector<Snake> d;
  for (const auto& t : trees_up_to_leaves(leaves)) d.push_back(tree_to_snake(t));
  const Snake bot{0};
  // Pairs are looked up by index, so T₂'s four-fold loop stays cheap.
  std::map<std::pair<const Snake*, const Snake*>, Snake> pairs;
  for (const auto& x : d) {
    for (const auto& y : d) pairs.emplace(std::pair{&x, &y}, snake_pair(x, y));
  }
  const auto pair_of = [&](const Snake* x, const Snake* y) -> const Snake& { return pairs.at({x, y}); };

  std::vector<AxiomResult> out;
  out.push_back(for_all("T1", d, {"x", "y"}, render_snake, [&](auto& a) { return pair_of(a[0], a[1]) != bot; }));
  out.push_back(for_all("T2", d, {"x1", "x2", "y1", "y2"}, render_snake, [&](auto& a) {
    return pair_of(a[0], a[1]) != pair_of(a[2], a[3]) || (*a[0] == *a[2] && *a[1] == *a[3]);
  }));
  out.push_back(for_all("T3", d, {"x"}, render_snake,
                        [&](auto& a) { return snake_subpart(*a[0], bot) == (*a[0] == bot); }));
  out.push_back(for_all("T4", d, {"x", "y", "z"}, render_snake, [&](auto& a) {
    const Snake& p = pair_of(a[1], a[2]);
    const bool rhs = *a[0] == p || snake_subpart(*a[0], *a[1]) || snake_subpart(*a[0], *a[2]);
    return snake_subpart(*a[0], p) == rhs;
  }));
  return out;
}

// ---- AST + EXT on ordered snakes ------------------------------------------

std::vector<AxiomResult> ast_ext_axioms(std::size_t n) {
  if (n > 3) throw DomainError("ast-ext-snakes: stage bound must be at most 3");
  std::vector<Snake> d;
  for (const auto& s : stage(n)) d.push_back(s.snake());
  const Snake empty{0};

  std::vector<AxiomResult> out;
  out.push_back(for_all("AST1", d, {"x"}, render_snake, [&](auto& a) { return !member_star(*a[0], empty); }));
  // V(n) is transitive, so quantifying u over it covers every member of x and of adjoin(x, y).
  out.push_back(for_all("AST2", d, {"x", "y", "u"}, render_snake, [&](auto& a) {
    const Snake z = adjoin(*a[0], *a[1]);
    return member_star(*a[2], z) == (member_star(*a[2], *a[0]) || *a[2] == *a[1]);
  }));
  out.push_back(for_all("AST3", d, {"x", "y"}, render_snake, [&](auto& a) {
    for (const auto& z : d) {
      if (member_star(z, *a[0]) != member_star(z, *a[1])) return true;
    }
    return *a[0] == *a[1];
  }));
  return out;
}

}  // namespace

AxiomSystem parse_system(std::string_view name) {
  const auto& names = system_names();
  if (auto it = names.find(name); it != names.end()) return it->second;
  std::string known;
  for (const auto& [n, _] : names) known += (known.empty() ? "" : ", ") + std::string(n);
  throw DomainError("unknown axiom system '" + std::string(name) + "' (known: " + known + ")");
}

std::string to_string(AxiomSystem system) {
  for (const auto& [name, s] : system_names()) {
    if (s == system) return std::string(name);
  }
  return "?";
}

bool AxiomReport::all_pass() const {
  for (const auto& r : results) {
    if (!r.pass()) return false;
  }
  return true;
}

std::string AxiomReport::to_text() const {
  std::string out;
  for (const auto& r : results) {
    out += r.id;
    out += r.pass() ? " PASS tuples=" + std::to_string(r.tuples) : " FAIL " + *r.counterexample;
    out += '\n';
  }
  return out;
}

AxiomReport check_axioms(AxiomSystem system, std::size_t bound) {
  AxiomReport report{system, bound, {}};
  auto& r = report.results;
  switch (system) {
    case AxiomSystem::seq: {
      const auto d = enumerate(bound);
      r = {seq1(d), seq2(d), seq3(d), seq4(d), seq5(d)};
      break;
    }
    case AxiomSystem::seq_star: {
      const auto d = enumerate(bound);
      r = {seq1(d), seq2(d), seq_star3(d), seq4(d), seq_star5(d)};
      break;
    }
    case AxiomSystem::seq_plus: {
      const auto d = enumerate(bound);
      r = {seq1(d), seq2(d), seq3(d), seq4(d), seq5(d), seq_star3(d), seq_star5(d), seq_plus_c(d)};
      break;
    }
    case AxiomSystem::wseq: {
      const auto d = enumerate(bound);
      r = {wseq1(d), wseq2(d), wseq3(d)};
      break;
    }
    case AxiomSystem::t_snakes: r = t_axioms(bound); break;
    case AxiomSystem::ast_tau: {
      const auto d = enumerate(bound);
      r = {ast_tau1(d), ast_tau2(d)};
      break;
    }
    case AxiomSystem::ast_ext_snakes: r = ast_ext_axioms(bound); break;
  }
  return report;
}

}  // namespace seqth
