#include "seqth/syntax.hpp"

#include <cctype>
#include <variant>

#include "seqth/error.hpp"

namespace seqth {

// ---- Term -------------------------------------------------------------------

struct Term::Node {
  Kind kind;
  std::string name;
  Constant constant = Constant::e;
  Op op = Op::app;
  std::optional<Term> lhs, rhs;
};

Term Term::var(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::variable;
  n->name = std::move(name);
  return Term(std::move(n));
}

Term Term::e() {
  static const Term t = [] {
    auto n = std::make_shared<Node>();
    n->kind = Kind::constant;
    n->constant = Constant::e;
    return Term(std::move(n));
  }();
  return t;
}

Term Term::bot() {
  static const Term t = [] {
    auto n = std::make_shared<Node>();
    n->kind = Kind::constant;
    n->constant = Constant::bot;
    return Term(std::move(n));
  }();
  return t;
}

Term Term::binary(Op op, Term lhs, Term rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::binary;
  n->op = op;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return Term(std::move(n));
}

Term Term::app(Term lhs, Term rhs) { return binary(Op::app, std::move(lhs), std::move(rhs)); }
Term Term::cat(Term lhs, Term rhs) { return binary(Op::cat, std::move(lhs), std::move(rhs)); }
Term Term::pair(Term lhs, Term rhs) { return binary(Op::pair, std::move(lhs), std::move(rhs)); }

Term::Kind Term::kind() const noexcept { return node_->kind; }

const std::string& Term::name() const {
  if (node_->kind != Kind::variable) throw DomainError("Term::name on a non-variable");
  return node_->name;
}

Constant Term::constant() const {
  if (node_->kind != Kind::constant) throw DomainError("Term::constant on a non-constant");
  return node_->constant;
}

Op Term::op() const {
  if (node_->kind != Kind::binary) throw DomainError("Term::op on a non-binary term");
  return node_->op;
}

const Term& Term::lhs() const {
  if (node_->kind != Kind::binary) throw DomainError("Term::lhs on a non-binary term");
  return *node_->lhs;
}

const Term& Term::rhs() const {
  if (node_->kind != Kind::binary) throw DomainError("Term::rhs on a non-binary term");
  return *node_->rhs;
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::variable: return a.name() == b.name();
    case Term::Kind::constant: return a.constant() == b.constant();
    case Term::Kind::binary: return a.op() == b.op() && a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
  return false;
}

// ---- Formula ----------------------------------------------------------------

struct Formula::Node {
  Kind kind;
  Rel rel = Rel::prefix;
  Connective conn = Connective::and_;
  std::optional<Term> t1, t2;
  std::optional<Formula> f1, f2;
  std::string var;
};

Formula Formula::eq(Term lhs, Term rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::eq;
  n->t1 = std::move(lhs);
  n->t2 = std::move(rhs);
  return Formula(std::move(n));
}

Formula Formula::rel(Rel r, Term lhs, Term rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::rel;
  n->rel = r;
  n->t1 = std::move(lhs);
  n->t2 = std::move(rhs);
  return Formula(std::move(n));
}

Formula Formula::neg(Formula f) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::neg;
  n->f1 = std::move(f);
  return Formula(std::move(n));
}

Formula Formula::binary(Connective c, Formula lhs, Formula rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::binary;
  n->conn = c;
  n->f1 = std::move(lhs);
  n->f2 = std::move(rhs);
  return Formula(std::move(n));
}

Formula Formula::forall(std::string var, Formula body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::forall;
  n->var = std::move(var);
  n->f1 = std::move(body);
  return Formula(std::move(n));
}

Formula Formula::exists(std::string var, Formula body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::exists;
  n->var = std::move(var);
  n->f1 = std::move(body);
  return Formula(std::move(n));
}

Formula Formula::all_prefix(std::string var, Term bound, Formula body) {
  if (free_vars(bound).count(var) != 0) {
    throw DomainError("all-prefix: bound variable " + var + " occurs in its bound " + to_string(bound));
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::all_prefix;
  n->var = std::move(var);
  n->t1 = std::move(bound);
  n->f1 = std::move(body);
  return Formula(std::move(n));
}

Formula::Kind Formula::kind() const noexcept { return node_->kind; }

Rel Formula::relation() const {
  if (node_->kind != Kind::rel) throw DomainError("Formula::relation on a non-relation");
  return node_->rel;
}

const Term& Formula::lhs_term() const {
  if (node_->kind != Kind::eq && node_->kind != Kind::rel) throw DomainError("Formula::lhs_term on a non-atom");
  return *node_->t1;
}

const Term& Formula::rhs_term() const {
  if (node_->kind != Kind::eq && node_->kind != Kind::rel) throw DomainError("Formula::rhs_term on a non-atom");
  return *node_->t2;
}

Connective Formula::connective() const {
  if (node_->kind != Kind::binary) throw DomainError("Formula::connective on a non-binary formula");
  return node_->conn;
}

const Formula& Formula::sub() const {
  if (!node_->f1 || node_->kind == Kind::binary) throw DomainError("Formula::sub on a formula without a single body");
  return *node_->f1;
}

const Formula& Formula::lhs() const {
  if (node_->kind != Kind::binary) throw DomainError("Formula::lhs on a non-binary formula");
  return *node_->f1;
}

const Formula& Formula::rhs() const {
  if (node_->kind != Kind::binary) throw DomainError("Formula::rhs on a non-binary formula");
  return *node_->f2;
}

const std::string& Formula::var() const {
  if (node_->kind != Kind::forall && node_->kind != Kind::exists && node_->kind != Kind::all_prefix) {
    throw DomainError("Formula::var on a non-quantifier");
  }
  return node_->var;
}

const Term& Formula::bound() const {
  if (node_->kind != Kind::all_prefix) throw DomainError("Formula::bound on a non-bounded quantifier");
  return *node_->t1;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::eq: return a.lhs_term() == b.lhs_term() && a.rhs_term() == b.rhs_term();
    case Formula::Kind::rel:
      return a.relation() == b.relation() && a.lhs_term() == b.lhs_term() && a.rhs_term() == b.rhs_term();
    case Formula::Kind::neg: return a.sub() == b.sub();
    case Formula::Kind::binary: return a.connective() == b.connective() && a.lhs() == b.lhs() && a.rhs() == b.rhs();
    case Formula::Kind::forall:
    case Formula::Kind::exists: return a.var() == b.var() && a.sub() == b.sub();
    case Formula::Kind::all_prefix: return a.var() == b.var() && a.bound() == b.bound() && a.sub() == b.sub();
  }
  return false;
}

// ---- variables --------------------------------------------------------------

namespace {

void collect(const Term& t, std::set<std::string>& out) {
  switch (t.kind()) {
    case Term::Kind::variable: out.insert(t.name()); break;
    case Term::Kind::constant: break;
    case Term::Kind::binary:
      collect(t.lhs(), out);
      collect(t.rhs(), out);
      break;
  }
}

void collect_free(const Formula& f, std::set<std::string>& bound, std::set<std::string>& out) {
  auto add_term = [&](const Term& t) {
    std::set<std::string> vs;
    collect(t, vs);
    for (const auto& v : vs)
      if (bound.count(v) == 0) out.insert(v);
  };
  switch (f.kind()) {
    case Formula::Kind::eq:
    case Formula::Kind::rel:
      add_term(f.lhs_term());
      add_term(f.rhs_term());
      break;
    case Formula::Kind::neg: collect_free(f.sub(), bound, out); break;
    case Formula::Kind::binary:
      collect_free(f.lhs(), bound, out);
      collect_free(f.rhs(), bound, out);
      break;
    case Formula::Kind::all_prefix: add_term(f.bound()); [[fallthrough]];
    case Formula::Kind::forall:
    case Formula::Kind::exists: {
      const bool fresh = bound.insert(f.var()).second;
      collect_free(f.sub(), bound, out);
      if (fresh) bound.erase(f.var());
      break;
    }
  }
}

void collect_all(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::eq:
    case Formula::Kind::rel:
      collect(f.lhs_term(), out);
      collect(f.rhs_term(), out);
      break;
    case Formula::Kind::neg: collect_all(f.sub(), out); break;
    case Formula::Kind::binary:
      collect_all(f.lhs(), out);
      collect_all(f.rhs(), out);
      break;
    case Formula::Kind::all_prefix: collect(f.bound(), out); [[fallthrough]];
    case Formula::Kind::forall:
    case Formula::Kind::exists:
      out.insert(f.var());
      collect_all(f.sub(), out);
      break;
  }
}

}  // namespace

std::set<std::string> free_vars(const Term& t) {
  std::set<std::string> out;
  collect(t, out);
  return out;
}

std::set<std::string> free_vars(const Formula& f) {
  std::set<std::string> bound, out;
  collect_free(f, bound, out);
  return out;
}

std::set<std::string> all_vars(const Formula& f) {
  std::set<std::string> out;
  collect_all(f, out);
  return out;
}

bool is_closed(const Term& t) { return free_vars(t).empty(); }
bool is_closed(const Formula& f) { return free_vars(f).empty(); }

std::string FreshNames::next(std::string_view base) {
  for (;;) {
    std::string candidate = std::string(base) + std::to_string(++counter_);
    if (taken_.insert(candidate).second) return candidate;
  }
}

Term substitute(const Term& t, const std::string& var, const Term& replacement) {
  switch (t.kind()) {
    case Term::Kind::variable: return t.name() == var ? replacement : t;
    case Term::Kind::constant: return t;
    case Term::Kind::binary:
      return Term::binary(t.op(), substitute(t.lhs(), var, replacement), substitute(t.rhs(), var, replacement));
  }
  return t;
}

namespace {

Formula subst(const Formula& f, const std::string& var, const Term& replacement,
              const std::set<std::string>& repl_vars, FreshNames& fresh) {
  switch (f.kind()) {
    case Formula::Kind::eq: return Formula::eq(substitute(f.lhs_term(), var, replacement), substitute(f.rhs_term(), var, replacement));
    case Formula::Kind::rel:
      return Formula::rel(f.relation(), substitute(f.lhs_term(), var, replacement), substitute(f.rhs_term(), var, replacement));
    case Formula::Kind::neg: return Formula::neg(subst(f.sub(), var, replacement, repl_vars, fresh));
    case Formula::Kind::binary:
      return Formula::binary(f.connective(), subst(f.lhs(), var, replacement, repl_vars, fresh),
                             subst(f.rhs(), var, replacement, repl_vars, fresh));
    case Formula::Kind::forall:
    case Formula::Kind::exists:
    case Formula::Kind::all_prefix: {
      const bool bounded = f.kind() == Formula::Kind::all_prefix;
      std::optional<Term> bound;
      if (bounded) bound = substitute(f.bound(), var, replacement);
      if (f.var() == var) {
        // var is shadowed below this binder; only the bound term is affected.
        return bounded ? Formula::all_prefix(f.var(), *bound, f.sub()) : f;
      }
      std::string bv = f.var();
      Formula body = f.sub();
      if (repl_vars.count(bv) != 0 && free_vars(f.sub()).count(var) != 0) {
        std::string renamed = fresh.next(bv);
        body = substitute(body, bv, Term::var(renamed));
        bv = renamed;
      }
      body = subst(body, var, replacement, repl_vars, fresh);
      if (bounded) return Formula::all_prefix(bv, *bound, body);
      return f.kind() == Formula::Kind::forall ? Formula::forall(bv, body) : Formula::exists(bv, body);
    }
  }
  return f;
}

}  // namespace

Formula substitute(const Formula& f, const std::string& var, const Term& replacement) {
  const auto repl_vars = free_vars(replacement);
  auto taken = all_vars(f);
  taken.insert(repl_vars.begin(), repl_vars.end());
  taken.insert(var);
  FreshNames fresh(std::move(taken));
  return subst(f, var, replacement, repl_vars, fresh);
}

// ---- signatures -------------------------------------------------------------

namespace {

std::string_view signature_name(Signature s) {
  switch (s) {
    case Signature::seq: return "{e, app, cat}";
    case Signature::tree: return "{bot, pair, subtree}";
    case Signature::set: return "{in}";
  }
  return "?";
}

void join(std::optional<Signature>& acc, Signature s) {
  if (acc && *acc != s) {
    throw DomainError("signature mismatch: symbols from " + std::string(signature_name(*acc)) + " and " +
                      std::string(signature_name(s)));
  }
  acc = s;
}

void term_signature(const Term& t, std::optional<Signature>& acc) {
  switch (t.kind()) {
    case Term::Kind::variable: break;
    case Term::Kind::constant: join(acc, t.constant() == Constant::e ? Signature::seq : Signature::tree); break;
    case Term::Kind::binary:
      join(acc, t.op() == Op::pair ? Signature::tree : Signature::seq);
      term_signature(t.lhs(), acc);
      term_signature(t.rhs(), acc);
      break;
  }
}

void formula_signature(const Formula& f, std::optional<Signature>& acc) {
  switch (f.kind()) {
    case Formula::Kind::rel:
      switch (f.relation()) {
        case Rel::prefix: join(acc, Signature::seq); break;
        case Rel::subtree: join(acc, Signature::tree); break;
        case Rel::in: join(acc, Signature::set); break;
      }
      [[fallthrough]];
    case Formula::Kind::eq:
      term_signature(f.lhs_term(), acc);
      term_signature(f.rhs_term(), acc);
      break;
    case Formula::Kind::neg: formula_signature(f.sub(), acc); break;
    case Formula::Kind::binary:
      formula_signature(f.lhs(), acc);
      formula_signature(f.rhs(), acc);
      break;
    case Formula::Kind::all_prefix:
      join(acc, Signature::seq);
      term_signature(f.bound(), acc);
      [[fallthrough]];
    case Formula::Kind::forall:
    case Formula::Kind::exists: formula_signature(f.sub(), acc); break;
  }
}

}  // namespace

std::optional<Signature> signature_of(const Term& t) {
  std::optional<Signature> acc;
  term_signature(t, acc);
  return acc;
}

std::optional<Signature> signature_of(const Formula& f) {
  std::optional<Signature> acc;
  formula_signature(f, acc);
  return acc;
}

// ---- classes and translations -----------------------------------------------

Term sequeral(const Seq& s) {
  Term t = Term::e();
  for (const auto& element : s.elements()) t = Term::app(t, sequeral(element));
  return t;
}

namespace {

bool is_atom(const Formula& f) { return f.kind() == Formula::Kind::eq || f.kind() == Formula::Kind::rel; }

bool sigma(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::eq:
    case Formula::Kind::rel: return true;
    case Formula::Kind::neg: return is_atom(f.sub());
    case Formula::Kind::binary:
      return (f.connective() == Connective::and_ || f.connective() == Connective::or_) && sigma(f.lhs()) && sigma(f.rhs());
    case Formula::Kind::exists: return sigma(f.sub());
    case Formula::Kind::all_prefix: return free_vars(f.bound()).count(f.var()) == 0 && sigma(f.sub());
    case Formula::Kind::forall: return false;
  }
  return false;
}

}  // namespace

bool classify_sigma(const Formula& f) {
  if (auto sig = signature_of(f); sig && *sig != Signature::seq) {
    throw DomainError("signature mismatch: Σ-formulas are over {e, app, cat}, got " + std::string(signature_name(*sig)));
  }
  return sigma(f);
}

namespace {

Formula relativize_impl(const Formula& f, const Formula& klass, const std::string& kvar) {
  auto in_class = [&](const std::string& x) { return substitute(klass, kvar, Term::var(x)); };
  switch (f.kind()) {
    case Formula::Kind::eq:
    case Formula::Kind::rel: return f;
    case Formula::Kind::neg: return Formula::neg(relativize_impl(f.sub(), klass, kvar));
    case Formula::Kind::binary:
      return Formula::binary(f.connective(), relativize_impl(f.lhs(), klass, kvar), relativize_impl(f.rhs(), klass, kvar));
    case Formula::Kind::forall:
      return Formula::forall(f.var(), Formula::implies(in_class(f.var()), relativize_impl(f.sub(), klass, kvar)));
    case Formula::Kind::exists:
      return Formula::exists(f.var(), Formula::conj(in_class(f.var()), relativize_impl(f.sub(), klass, kvar)));
    case Formula::Kind::all_prefix: {
      auto body = Formula::implies(Formula::prefix(Term::var(f.var()), f.bound()), relativize_impl(f.sub(), klass, kvar));
      return Formula::forall(f.var(), Formula::implies(in_class(f.var()), body));
    }
  }
  return f;
}

}  // namespace

Formula relativize(const Formula& f, const Formula& klass) {
  const auto kfree = free_vars(klass);
  if (kfree.size() != 1) {
    throw DomainError("relativize: a class must have exactly one free variable, got " + std::to_string(kfree.size()));
  }
  return relativize_impl(f, klass, *kfree.begin());
}

namespace {

Formula desugar(const Formula& f, FreshNames& fresh) {
  switch (f.kind()) {
    case Formula::Kind::eq: return f;
    case Formula::Kind::rel: {
      if (f.relation() != Rel::prefix) return f;
      auto y = fresh.next("y");
      return Formula::exists(y, Formula::eq(Term::cat(f.lhs_term(), Term::var(y)), f.rhs_term()));
    }
    case Formula::Kind::neg: return Formula::neg(desugar(f.sub(), fresh));
    case Formula::Kind::binary: return Formula::binary(f.connective(), desugar(f.lhs(), fresh), desugar(f.rhs(), fresh));
    case Formula::Kind::forall: return Formula::forall(f.var(), desugar(f.sub(), fresh));
    case Formula::Kind::exists: return Formula::exists(f.var(), desugar(f.sub(), fresh));
    case Formula::Kind::all_prefix: {
      auto guard = desugar(Formula::prefix(Term::var(f.var()), f.bound()), fresh);
      return Formula::forall(f.var(), Formula::implies(guard, desugar(f.sub(), fresh)));
    }
  }
  return f;
}

void require_set_term(const Term& t) {
  if (!t.is_var()) throw DomainError("translate_ast: term " + to_string(t) + " is not over {in}");
}

Formula tau(const Formula& f, const std::set<std::string>& taken) {
  switch (f.kind()) {
    case Formula::Kind::eq:
      require_set_term(f.lhs_term());
      require_set_term(f.rhs_term());
      return f;
    case Formula::Kind::rel: {
      if (f.relation() != Rel::in) throw DomainError("translate_ast: only the in relation is allowed");
      require_set_term(f.lhs_term());
      require_set_term(f.rhs_term());
      FreshNames fresh(taken);  // restarts per atom: v1, v2
      auto v1 = fresh.next("v");
      auto v2 = fresh.next("v");
      auto lhs = Term::cat(Term::app(Term::var(v1), f.lhs_term()), Term::var(v2));
      return Formula::exists(v1, Formula::exists(v2, Formula::eq(lhs, f.rhs_term())));
    }
    case Formula::Kind::neg: return Formula::neg(tau(f.sub(), taken));
    case Formula::Kind::binary: return Formula::binary(f.connective(), tau(f.lhs(), taken), tau(f.rhs(), taken));
    case Formula::Kind::forall: return Formula::forall(f.var(), tau(f.sub(), taken));
    case Formula::Kind::exists: return Formula::exists(f.var(), tau(f.sub(), taken));
    case Formula::Kind::all_prefix: throw DomainError("translate_ast: bounded prefix quantifier is not over {in}");
  }
  return f;
}

}  // namespace

Formula desugar_prefix(const Formula& f) {
  FreshNames fresh(all_vars(f));
  return desugar(f, fresh);
}

Formula translate_ast(const Formula& f) { return tau(f, all_vars(f)); }

// ---- printing ---------------------------------------------------------------

namespace {

void write(const Term& t, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::variable: out += t.name(); break;
    case Term::Kind::constant: out += t.constant() == Constant::e ? "e" : "bot"; break;
    case Term::Kind::binary:
      out += t.op() == Op::app ? "(app " : t.op() == Op::cat ? "(cat " : "(pair ";
      write(t.lhs(), out);
      out += ' ';
      write(t.rhs(), out);
      out += ')';
      break;
  }
}

const char* rel_name(Rel r) {
  switch (r) {
    case Rel::prefix: return "prefix";
    case Rel::in: return "in";
    case Rel::subtree: return "subtree";
  }
  return "?";
}

const char* connective_name(Connective c) {
  switch (c) {
    case Connective::and_: return "and";
    case Connective::or_: return "or";
    case Connective::implies: return "->";
    case Connective::iff: return "<->";
  }
  return "?";
}

void write(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::eq:
    case Formula::Kind::rel:
      out += '(';
      out += f.kind() == Formula::Kind::eq ? "=" : rel_name(f.relation());
      out += ' ';
      write(f.lhs_term(), out);
      out += ' ';
      write(f.rhs_term(), out);
      out += ')';
      break;
    case Formula::Kind::neg:
      out += "(not ";
      write(f.sub(), out);
      out += ')';
      break;
    case Formula::Kind::binary:
      out += '(';
      out += connective_name(f.connective());
      out += ' ';
      write(f.lhs(), out);
      out += ' ';
      write(f.rhs(), out);
      out += ')';
      break;
    case Formula::Kind::forall:
    case Formula::Kind::exists:
      out += f.kind() == Formula::Kind::forall ? "(forall " : "(exists ";
      out += f.var();
      out += ' ';
      write(f.sub(), out);
      out += ')';
      break;
    case Formula::Kind::all_prefix:
      out += "(all-prefix ";
      out += f.var();
      out += ' ';
      write(f.bound(), out);
      out += ' ';
      write(f.sub(), out);
      out += ')';
      break;
  }
}

}  // namespace

std::string to_string(const Term& t) {
  std::string out;
  write(t, out);
  return out;
}

std::string to_string(const Formula& f) {
  std::string out;
  write(f, out);
  return out;
}

// ---- parsing ----------------------------------------------------------------

namespace {

struct SExpr {
  std::string atom;  // empty for lists
  std::vector<SExpr> items;
  std::size_t offset = 0;
  bool is_list = false;
};

class SExprReader {
 public:
  explicit SExprReader(std::string_view text) : text_(text) {}

  SExpr read_all() {
    skip_ws();
    auto e = read();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("trailing input", pos_);
    return e;
  }

 private:
  static bool atom_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '>' || c == '<' || c == '=' ||
           c == '\'';
  }

  SExpr read() {
    SExpr e;
    e.offset = pos_;
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    if (text_[pos_] == '(') {
      ++pos_;
      e.is_list = true;
      for (;;) {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("missing ')'", pos_);
        if (text_[pos_] == ')') {
          ++pos_;
          return e;
        }
        e.items.push_back(read());
      }
    }
    if (text_[pos_] == ')') throw ParseError("unexpected ')'", pos_);
    while (pos_ < text_.size() && atom_char(text_[pos_])) e.atom.push_back(text_[pos_++]);
    if (e.atom.empty()) throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
    return e;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

const std::set<std::string>& reserved() {
  static const std::set<std::string> words = {"e",   "bot",    "app", "cat", "pair",   "=",      "prefix",
                                              "in",  "subtree", "not", "and", "or",     "->",     "<->",
                                              "exists", "forall", "all-prefix"};
  return words;
}

std::string identifier(const SExpr& e, const char* what) {
  if (e.is_list) throw ParseError(std::string("expected ") + what + ", got a list", e.offset);
  const auto& a = e.atom;
  const bool ok = (std::isalpha(static_cast<unsigned char>(a[0])) || a[0] == '_') && reserved().count(a) == 0 &&
                  a.find_first_of("-<>=") == std::string::npos;
  if (!ok) throw ParseError(std::string("expected ") + what + ", got '" + a + "'", e.offset);
  return a;
}

void expect_arity(const SExpr& e, std::size_t n) {
  if (e.items.size() != n) {
    throw ParseError("'" + e.items[0].atom + "' expects " + std::to_string(n - 1) + " arguments, got " +
                         std::to_string(e.items.size() - 1),
                     e.offset);
  }
}

Term to_term(const SExpr& e) {
  if (!e.is_list) {
    if (e.atom == "e") return Term::e();
    if (e.atom == "bot") return Term::bot();
    return Term::var(identifier(e, "a term"));
  }
  if (e.items.empty() || e.items[0].is_list) throw ParseError("expected a term constructor", e.offset);
  const auto& head = e.items[0].atom;
  Op op;
  if (head == "app") op = Op::app;
  else if (head == "cat") op = Op::cat;
  else if (head == "pair") op = Op::pair;
  else throw ParseError("unknown term constructor '" + head + "'", e.items[0].offset);
  expect_arity(e, 3);
  return Term::binary(op, to_term(e.items[1]), to_term(e.items[2]));
}

Formula to_formula(const SExpr& e) {
  if (!e.is_list || e.items.empty() || e.items[0].is_list) throw ParseError("expected a formula", e.offset);
  const auto& head = e.items[0].atom;
  if (head == "=") {
    expect_arity(e, 3);
    return Formula::eq(to_term(e.items[1]), to_term(e.items[2]));
  }
  if (head == "prefix" || head == "in" || head == "subtree") {
    expect_arity(e, 3);
    const Rel r = head == "prefix" ? Rel::prefix : head == "in" ? Rel::in : Rel::subtree;
    return Formula::rel(r, to_term(e.items[1]), to_term(e.items[2]));
  }
  if (head == "not") {
    expect_arity(e, 2);
    return Formula::neg(to_formula(e.items[1]));
  }
  if (head == "and" || head == "or" || head == "->" || head == "<->") {
    expect_arity(e, 3);
    const Connective c = head == "and"  ? Connective::and_
                         : head == "or" ? Connective::or_
                         : head == "->" ? Connective::implies
                                        : Connective::iff;
    return Formula::binary(c, to_formula(e.items[1]), to_formula(e.items[2]));
  }
  if (head == "exists" || head == "forall") {
    expect_arity(e, 3);
    auto v = identifier(e.items[1], "a variable");
    auto body = to_formula(e.items[2]);
    return head == "exists" ? Formula::exists(v, body) : Formula::forall(v, body);
  }
  if (head == "all-prefix") {
    expect_arity(e, 4);
    auto v = identifier(e.items[1], "a variable");
    auto bound = to_term(e.items[2]);
    if (free_vars(bound).count(v) != 0) throw ParseError("all-prefix variable " + v + " occurs in its bound", e.items[2].offset);
    return Formula::all_prefix(v, bound, to_formula(e.items[3]));
  }
  throw ParseError("unknown formula constructor '" + head + "'", e.items[0].offset);
}

}  // namespace

Term parse_term(std::string_view text) { return to_term(SExprReader(text).read_all()); }

Formula parse_formula(std::string_view text) { return to_formula(SExprReader(text).read_all()); }

}  // namespace seqth
