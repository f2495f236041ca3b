#include "seqth/sigma.hpp"

#include "seqth/error.hpp"

namespace seqth {

Seq eval_term(const Term& t, const Env& env) {
  switch (t.kind()) {
    case Term::Kind::variable: {
      auto it = env.find(t.name());
      if (it == env.end()) throw DomainError("eval_term: open term, unbound variable " + t.name());
      return it->second;
    }
    case Term::Kind::constant:
      if (t.constant() != Constant::e) throw DomainError("eval_term: bot is not a sequence constant");
      return Seq{};
    case Term::Kind::binary:
      switch (t.op()) {
        case Op::app: return append(eval_term(t.lhs(), env), eval_term(t.rhs(), env));
        case Op::cat: return concat(eval_term(t.lhs(), env), eval_term(t.rhs(), env));
        case Op::pair: throw DomainError("eval_term: pair is not a sequence operation");
      }
  }
  throw DomainError("eval_term: malformed term");
}

bool tau_member(const Seq& u, const Seq& y) {
  // (v₁⊢u)∘v₂ = y forces v₁⊢u to be a nonempty prefix of y ending in u.
  const auto& elems = y.elements();
  for (std::size_t cut = 1; cut <= elems.size(); ++cut) {
    if (elems[cut - 1] == u) return true;
  }
  return false;
}

std::string to_string(Truth t) {
  switch (t) {
    case Truth::yes: return "TRUE";
    case Truth::no: return "FALSE";
    case Truth::unknown: return "UNKNOWN";
  }
  return "?";
}

namespace {

class SigmaSearch {
 public:
  explicit SigmaSearch(std::size_t budget) : candidates_(enumerate(budget)) {}

  Truth eval(const Formula& f, Env& env, std::vector<Binding>& witnesses) {
    switch (f.kind()) {
      case Formula::Kind::eq:
      case Formula::Kind::rel: return atom(f, env) ? Truth::yes : Truth::no;
      case Formula::Kind::neg: return atom(f.sub(), env) ? Truth::no : Truth::yes;
      case Formula::Kind::binary: {
        const auto mark = witnesses.size();
        const Truth left = eval(f.lhs(), env, witnesses);
        if (f.connective() == Connective::and_) {
          if (left == Truth::no) return drop(witnesses, mark, Truth::no);
          const Truth right = eval(f.rhs(), env, witnesses);
          if (right == Truth::no) return drop(witnesses, mark, Truth::no);
          if (left == Truth::yes && right == Truth::yes) return Truth::yes;
          return drop(witnesses, mark, Truth::unknown);
        }
        if (left == Truth::yes) return Truth::yes;
        witnesses.resize(mark);
        const Truth right = eval(f.rhs(), env, witnesses);
        if (right == Truth::yes) return Truth::yes;
        return drop(witnesses, mark, left == Truth::no && right == Truth::no ? Truth::no : Truth::unknown);
      }
      case Formula::Kind::exists: {
        const auto mark = witnesses.size();
        Scope scope(env, f.var());
        for (const auto& candidate : candidates_) {
          scope.bind(candidate);
          witnesses.push_back({f.var(), candidate});
          if (eval(f.sub(), env, witnesses) == Truth::yes) return Truth::yes;
          witnesses.resize(mark);
        }
        return Truth::unknown;
      }
      case Formula::Kind::all_prefix: {
        const auto mark = witnesses.size();
        const Seq bound = eval_term(f.bound(), env);
        Scope scope(env, f.var());
        Truth acc = Truth::yes;
        for (const auto& segment : initial_segments(bound)) {
          scope.bind(segment);
          const Truth t = eval(f.sub(), env, witnesses);
          if (t == Truth::no) return drop(witnesses, mark, Truth::no);
          if (t == Truth::unknown) acc = Truth::unknown;
        }
        return acc == Truth::yes ? acc : drop(witnesses, mark, acc);
      }
      case Formula::Kind::forall: break;
    }
    throw DomainError("eval_sigma: not a Σ-formula: " + to_string(f));
  }

 private:
  // Binds a variable for the lifetime of a quantifier, restoring any outer binding.
  class Scope {
   public:
    Scope(Env& env, const std::string& var) : env_(env), var_(var) {
      if (auto it = env.find(var); it != env.end()) saved_ = it->second;
    }
    ~Scope() {
      if (saved_) env_[var_] = *saved_;
      else env_.erase(var_);
    }
    void bind(const Seq& value) { env_[var_] = value; }

   private:
    Env& env_;
    std::string var_;
    std::optional<Seq> saved_;
  };

  static Truth drop(std::vector<Binding>& w, std::size_t mark, Truth t) {
    w.resize(mark);
    return t;
  }

  static bool atom(const Formula& f, const Env& env) {
    const Seq lhs = eval_term(f.lhs_term(), env);
    const Seq rhs = eval_term(f.rhs_term(), env);
    if (f.kind() == Formula::Kind::eq) return lhs == rhs;
    if (f.relation() == Rel::prefix) return is_prefix(lhs, rhs);
    throw DomainError("eval_sigma: relation outside the sequence signature");
  }

  std::vector<Seq> candidates_;
};

class BoundedModel {
 public:
  explicit BoundedModel(std::size_t bound) : domain_(enumerate(bound)) {}

  bool eval(const Formula& f, Env& env) const {
    switch (f.kind()) {
      case Formula::Kind::eq: return eval_term(f.lhs_term(), env) == eval_term(f.rhs_term(), env);
      case Formula::Kind::rel: {
        const Seq lhs = eval_term(f.lhs_term(), env);
        const Seq rhs = eval_term(f.rhs_term(), env);
        switch (f.relation()) {
          case Rel::prefix: return is_prefix(lhs, rhs);
          case Rel::in: return tau_member(lhs, rhs);
          case Rel::subtree: break;
        }
        throw DomainError("eval_bounded: subtree is not interpreted over sequences");
      }
      case Formula::Kind::neg: return !eval(f.sub(), env);
      case Formula::Kind::binary: {
        const bool l = eval(f.lhs(), env);
        switch (f.connective()) {
          case Connective::and_: return l && eval(f.rhs(), env);
          case Connective::or_: return l || eval(f.rhs(), env);
          case Connective::implies: return !l || eval(f.rhs(), env);
          case Connective::iff: return l == eval(f.rhs(), env);
        }
        break;
      }
      case Formula::Kind::forall:
      case Formula::Kind::exists: {
        const bool universal = f.kind() == Formula::Kind::forall;
        return over(env, f.var(), domain_, [&](Env& e) { return eval(f.sub(), e) == universal; }) ? universal
                                                                                                    : !universal;
      }
      case Formula::Kind::all_prefix: {
        const auto segments = initial_segments(eval_term(f.bound(), env));
        return over(env, f.var(), segments, [&](Env& e) { return eval(f.sub(), e); });
      }
    }
    throw DomainError("eval_bounded: malformed formula");
  }

 private:
  // True iff pred holds for every value bound to var.
  template <class Pred>
  static bool over(Env& env, const std::string& var, const std::vector<Seq>& values, Pred pred) {
    std::optional<Seq> saved;
    if (auto it = env.find(var); it != env.end()) saved = it->second;
    bool all = true;
    for (const auto& v : values) {
      env[var] = v;
      if (!pred(env)) {
        all = false;
        break;
      }
    }
    if (saved) env[var] = *saved;
    else env.erase(var);
    return all;
  }

  std::vector<Seq> domain_;
};

}  // namespace

Verdict eval_sigma(const Formula& f, std::size_t budget) {
  if (!classify_sigma(f)) throw DomainError("eval_sigma: not a Σ-formula: " + to_string(f));
  if (!is_closed(f)) throw DomainError("eval_sigma: formula has free variables: " + to_string(f));
  SigmaSearch search(budget);
  Env env;
  Verdict v;
  v.truth = search.eval(f, env, v.witnesses);
  if (v.truth != Truth::yes) v.witnesses.clear();
  return v;
}

bool eval_bounded(const Formula& f, std::size_t bound, const Env& env) {
  BoundedModel model(bound);
  Env local = env;
  return model.eval(f, local);
}

}  // namespace seqth
