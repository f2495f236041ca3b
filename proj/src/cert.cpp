#include "seqth/cert.hpp"

#include <json.hpp>

#include "seqth/error.hpp"

namespace seqth {

namespace {

Seq normalize_into(const Term& t, std::vector<RewriteStep>& trace) {
  switch (t.kind()) {
    case Term::Kind::variable: throw DomainError("normalize_term: open term, variable " + t.name());
    case Term::Kind::constant:
      if (t.constant() != Constant::e) throw DomainError("normalize_term: bot is not a sequence constant");
      return Seq{};
    case Term::Kind::binary: {
      if (t.op() == Op::pair) throw DomainError("normalize_term: pair is not a sequence operation");
      Seq lhs = normalize_into(t.lhs(), trace);
      Seq rhs = normalize_into(t.rhs(), trace);
      if (t.op() == Op::app) return append(lhs, rhs);
      Seq result = concat(lhs, rhs);
      trace.push_back({std::move(lhs), std::move(rhs), result});
      return result;
    }
  }
  throw DomainError("normalize_term: malformed term");
}

// Canonical value of a closed term, or nullopt for an open or foreign term.
std::optional<Seq> value_of(const Term& t) {
  try {
    std::vector<RewriteStep> trace;
    return normalize_into(t, trace);
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

class Prover {
 public:
  explicit Prover(std::size_t budget) : candidates_(enumerate(budget)) {}

  Truth prove(const Formula& f, std::optional<Certificate>& out) {
    switch (f.kind()) {
      case Formula::Kind::eq: {
        const Seq l = normalize_term(f.lhs_term()).canon;
        const Seq r = normalize_term(f.rhs_term()).canon;
        if (l != r) return Truth::no;
        out = Certificate{EqNorm{f.lhs_term(), f.rhs_term(), l}};
        return Truth::yes;
      }
      case Formula::Kind::rel: {
        const Seq s = normalize_term(f.lhs_term()).canon;
        const Seq t = normalize_term(f.rhs_term()).canon;
        if (!is_prefix(s, t)) return Truth::no;
        out = Certificate{PrefixWitness{f.lhs_term(), f.rhs_term(), suffix_after(s, t)}};
        return Truth::yes;
      }
      case Formula::Kind::neg: {
        const Formula& a = f.sub();
        const Seq s = normalize_term(a.lhs_term()).canon;
        const Seq t = normalize_term(a.rhs_term()).canon;
        if (a.kind() == Formula::Kind::eq) {
          if (s == t) return Truth::no;
          out = Certificate{NeqSequeral{a.lhs_term(), a.rhs_term(), s, t}};
          return Truth::yes;
        }
        if (is_prefix(s, t)) return Truth::no;
        out = Certificate{NotPrefix{a.lhs_term(), a.rhs_term(), initial_segments(t)}};
        return Truth::yes;
      }
      case Formula::Kind::binary: {
        std::optional<Certificate> left, right;
        const Truth l = prove(f.lhs(), left);
        if (f.connective() == Connective::and_) {
          if (l == Truth::no) return Truth::no;
          const Truth r = prove(f.rhs(), right);
          if (r == Truth::no) return Truth::no;
          if (l != Truth::yes || r != Truth::yes) return Truth::unknown;
          out = Certificate{AndNode{std::move(*left), std::move(*right)}};
          return Truth::yes;
        }
        if (l == Truth::yes) {
          out = Certificate{OrLeft{std::move(*left)}};
          return Truth::yes;
        }
        const Truth r = prove(f.rhs(), right);
        if (r == Truth::yes) {
          out = Certificate{OrRight{std::move(*right)}};
          return Truth::yes;
        }
        return l == Truth::no && r == Truth::no ? Truth::no : Truth::unknown;
      }
      case Formula::Kind::exists:
        for (const auto& candidate : candidates_) {
          std::optional<Certificate> sub;
          if (prove(substitute(f.sub(), f.var(), sequeral(candidate)), sub) == Truth::yes) {
            out = Certificate{ExistsWitness{candidate, std::move(*sub)}};
            return Truth::yes;
          }
        }
        return Truth::unknown;
      case Formula::Kind::all_prefix: {
        const Seq bound = normalize_term(f.bound()).canon;
        std::vector<Certificate> subs;
        Truth acc = Truth::yes;
        for (const auto& segment : initial_segments(bound)) {
          std::optional<Certificate> sub;
          const Truth t = prove(substitute(f.sub(), f.var(), sequeral(segment)), sub);
          if (t == Truth::no) return Truth::no;
          if (t == Truth::unknown) acc = Truth::unknown;
          else if (acc == Truth::yes) subs.push_back(std::move(*sub));
        }
        if (acc != Truth::yes) return acc;
        out = Certificate{BoundedAll{bound, std::move(subs)}};
        return Truth::yes;
      }
      case Formula::Kind::forall: break;
    }
    throw DomainError("prove_sigma: not a Σ-formula: " + to_string(f));
  }

 private:
  std::vector<Seq> candidates_;
};

class Kernel {
 public:
  CheckResult check(const Certificate& c, const Formula& f, const std::string& path) {
    return std::visit([&](const auto& node) { return check_node(node, f, path); }, c.node);
  }

 private:
  static CheckResult reject(const std::string& path, const std::string& why) { return {false, path + ": " + why}; }
  static CheckResult accept() { return {true, {}}; }

  static CheckResult expect_kind(const Formula& f, Formula::Kind k, const std::string& path, std::string_view node) {
    if (f.kind() != k) return reject(path, std::string(node) + " does not match formula " + to_string(f));
    return accept();
  }

  // Both terms syntactically as in the formula, and both closed.
  static CheckResult same_terms(const Term& a, const Term& b, const Formula& atom, const std::string& path) {
    if (!(a == atom.lhs_term()) || !(b == atom.rhs_term())) {
      return reject(path, "terms " + to_string(a) + ", " + to_string(b) + " differ from formula " + to_string(atom));
    }
    return accept();
  }

  CheckResult check_node(const EqNorm& n, const Formula& f, const std::string& path) {
    if (auto r = expect_kind(f, Formula::Kind::eq, path, "EqNorm"); !r) return r;
    if (auto r = same_terms(n.lhs, n.rhs, f, path); !r) return r;
    const auto l = value_of(n.lhs), r = value_of(n.rhs);
    if (!l || !r) return reject(path, "EqNorm term is not a closed sequence term");
    if (*l != n.canon) return reject(path, "lhs normalizes to " + to_string(*l) + ", not " + to_string(n.canon));
    if (*r != n.canon) return reject(path, "rhs normalizes to " + to_string(*r) + ", not " + to_string(n.canon));
    return accept();
  }

  CheckResult check_node(const NeqSequeral& n, const Formula& f, const std::string& path) {
    if (f.kind() != Formula::Kind::neg || f.sub().kind() != Formula::Kind::eq) {
      return reject(path, "NeqSequeral does not match formula " + to_string(f));
    }
    if (auto r = same_terms(n.lhs, n.rhs, f.sub(), path); !r) return r;
    const auto l = value_of(n.lhs), r = value_of(n.rhs);
    if (!l || !r) return reject(path, "NeqSequeral term is not a closed sequence term");
    if (*l != n.s) return reject(path, "lhs normalizes to " + to_string(*l) + ", not " + to_string(n.s));
    if (*r != n.t) return reject(path, "rhs normalizes to " + to_string(*r) + ", not " + to_string(n.t));
    if (n.s == n.t) return reject(path, "sequerals are not distinct");
    return accept();
  }

  CheckResult check_node(const PrefixWitness& n, const Formula& f, const std::string& path) {
    if (f.kind() != Formula::Kind::rel || f.relation() != Rel::prefix) {
      return reject(path, "PrefixWitness does not match formula " + to_string(f));
    }
    if (auto r = same_terms(n.s, n.t, f, path); !r) return r;
    const auto s = value_of(n.s), t = value_of(n.t);
    if (!s || !t) return reject(path, "PrefixWitness term is not a closed sequence term");
    if (concat(*s, n.r) != *t) return reject(path, "s ∘ " + to_string(n.r) + " != " + to_string(*t));
    return accept();
  }

  CheckResult check_node(const NotPrefix& n, const Formula& f, const std::string& path) {
    if (f.kind() != Formula::Kind::neg || f.sub().kind() != Formula::Kind::rel || f.sub().relation() != Rel::prefix) {
      return reject(path, "NotPrefix does not match formula " + to_string(f));
    }
    if (auto r = same_terms(n.s, n.t, f.sub(), path); !r) return r;
    const auto s = value_of(n.s), t = value_of(n.t);
    if (!s || !t) return reject(path, "NotPrefix term is not a closed sequence term");
    if (n.segments != initial_segments(*t)) return reject(path, "segments are not the initial segments of " + to_string(*t));
    for (std::size_t i = 0; i < n.segments.size(); ++i) {
      if (n.segments[i] == *s) return reject(path + ".segments[" + std::to_string(i) + "]", "equals " + to_string(*s));
    }
    return accept();
  }

  CheckResult check_node(const AndNode& n, const Formula& f, const std::string& path) {
    if (f.kind() != Formula::Kind::binary || f.connective() != Connective::and_) {
      return reject(path, "AndNode does not match formula " + to_string(f));
    }
    if (auto r = check(*n.left, f.lhs(), path + ".and.left"); !r) return r;
    return check(*n.right, f.rhs(), path + ".and.right");
  }

  CheckResult check_node(const OrLeft& n, const Formula& f, const std::string& path) {
    if (f.kind() != Formula::Kind::binary || f.connective() != Connective::or_) {
      return reject(path, "OrLeft does not match formula " + to_string(f));
    }
    return check(*n.sub, f.lhs(), path + ".or.left");
  }

  CheckResult check_node(const OrRight& n, const Formula& f, const std::string& path) {
    if (f.kind() != Formula::Kind::binary || f.connective() != Connective::or_) {
      return reject(path, "OrRight does not match formula " + to_string(f));
    }
    return check(*n.sub, f.rhs(), path + ".or.right");
  }

  CheckResult check_node(const ExistsWitness& n, const Formula& f, const std::string& path) {
    if (auto r = expect_kind(f, Formula::Kind::exists, path, "ExistsWitness"); !r) return r;
    return check(*n.sub, substitute(f.sub(), f.var(), sequeral(n.witness)), path + ".exists[" + f.var() + "]");
  }

  CheckResult check_node(const BoundedAll& n, const Formula& f, const std::string& path) {
    if (auto r = expect_kind(f, Formula::Kind::all_prefix, path, "BoundedAll"); !r) return r;
    const auto bound = value_of(f.bound());
    if (!bound) return reject(path, "bound is not a closed sequence term");
    if (*bound != n.bound_value) return reject(path, "bound normalizes to " + to_string(*bound) + ", not " + to_string(n.bound_value));
    const auto segments = initial_segments(n.bound_value);
    if (n.subs.size() != segments.size()) {
      return reject(path, "expected " + std::to_string(segments.size()) + " instances, got " + std::to_string(n.subs.size()));
    }
    for (std::size_t i = 0; i < segments.size(); ++i) {
      const auto instance = substitute(f.sub(), f.var(), sequeral(segments[i]));
      if (auto r = check(n.subs[i], instance, path + ".all[" + std::to_string(i) + "]"); !r) return r;
    }
    return accept();
  }
};

// ---- JSON ---------------------------------------------------------------------

using Json = nlohmann::ordered_json;

Json encode(const Certificate& c) {
  return std::visit(
      [](const auto& n) -> Json {
        using N = std::decay_t<decltype(n)>;
        Json j;
        if constexpr (std::is_same_v<N, EqNorm>) {
          j["node"] = "EqNorm";
          j["lhs"] = to_string(n.lhs);
          j["rhs"] = to_string(n.rhs);
          j["canon"] = to_string(n.canon);
        } else if constexpr (std::is_same_v<N, NeqSequeral>) {
          j["node"] = "NeqSequeral";
          j["lhs"] = to_string(n.lhs);
          j["rhs"] = to_string(n.rhs);
          j["s"] = to_string(n.s);
          j["t"] = to_string(n.t);
        } else if constexpr (std::is_same_v<N, PrefixWitness>) {
          j["node"] = "PrefixWitness";
          j["s"] = to_string(n.s);
          j["t"] = to_string(n.t);
          j["r"] = to_string(n.r);
        } else if constexpr (std::is_same_v<N, NotPrefix>) {
          j["node"] = "NotPrefix";
          j["s"] = to_string(n.s);
          j["t"] = to_string(n.t);
          j["segments"] = Json::array();
          for (const auto& seg : n.segments) j["segments"].push_back(to_string(seg));
        } else if constexpr (std::is_same_v<N, AndNode>) {
          j["node"] = "AndNode";
          j["left"] = encode(*n.left);
          j["right"] = encode(*n.right);
        } else if constexpr (std::is_same_v<N, OrLeft>) {
          j["node"] = "OrLeft";
          j["sub"] = encode(*n.sub);
        } else if constexpr (std::is_same_v<N, OrRight>) {
          j["node"] = "OrRight";
          j["sub"] = encode(*n.sub);
        } else if constexpr (std::is_same_v<N, ExistsWitness>) {
          j["node"] = "ExistsWitness";
          j["witness"] = to_string(n.witness);
          j["sub"] = encode(*n.sub);
        } else {
          j["node"] = "BoundedAll";
          j["bound_value"] = to_string(n.bound_value);
          j["subs"] = Json::array();
          for (const auto& s : n.subs) j["subs"].push_back(encode(s));
        }
        return j;
      },
      c.node);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("certificate: missing field '") + key + "'", 0);
  return j.at(key);
}

std::string text_field(const Json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_string()) throw ParseError(std::string("certificate: field '") + key + "' must be a string", 0);
  return v.get<std::string>();
}

Seq seq_field(const Json& j, const char* key) { return parse_seq(text_field(j, key)); }
Term term_field(const Json& j, const char* key) { return parse_term(text_field(j, key)); }

Certificate decode(const Json& j) {
  const auto tag = text_field(j, "node");
  if (tag == "EqNorm") return {EqNorm{term_field(j, "lhs"), term_field(j, "rhs"), seq_field(j, "canon")}};
  if (tag == "NeqSequeral") {
    return {NeqSequeral{term_field(j, "lhs"), term_field(j, "rhs"), seq_field(j, "s"), seq_field(j, "t")}};
  }
  if (tag == "PrefixWitness") return {PrefixWitness{term_field(j, "s"), term_field(j, "t"), seq_field(j, "r")}};
  if (tag == "NotPrefix") {
    std::vector<Seq> segments;
    const auto& arr = field(j, "segments");
    if (!arr.is_array()) throw ParseError("certificate: 'segments' must be an array", 0);
    for (const auto& s : arr) {
      if (!s.is_string()) throw ParseError("certificate: segment must be a string", 0);
      segments.push_back(parse_seq(s.get<std::string>()));
    }
    return {NotPrefix{term_field(j, "s"), term_field(j, "t"), std::move(segments)}};
  }
  if (tag == "AndNode") return {AndNode{decode(field(j, "left")), decode(field(j, "right"))}};
  if (tag == "OrLeft") return {OrLeft{decode(field(j, "sub"))}};
  if (tag == "OrRight") return {OrRight{decode(field(j, "sub"))}};
  if (tag == "ExistsWitness") return {ExistsWitness{seq_field(j, "witness"), decode(field(j, "sub"))}};
  if (tag == "BoundedAll") {
    std::vector<Certificate> subs;
    const auto& arr = field(j, "subs");
    if (!arr.is_array()) throw ParseError("certificate: 'subs' must be an array", 0);
    for (const auto& s : arr) subs.push_back(decode(s));
    return {BoundedAll{seq_field(j, "bound_value"), std::move(subs)}};
  }
  throw ParseError("certificate: unknown node '" + tag + "'", 0);
}

}  // namespace

Normalization normalize_term(const Term& t) {
  Normalization n;
  n.canon = normalize_into(t, n.trace);
  return n;
}

ProofResult prove_sigma(const Formula& f, std::size_t budget) {
  if (!classify_sigma(f)) throw DomainError("prove_sigma: not a Σ-formula: " + to_string(f));
  if (!is_closed(f)) throw DomainError("prove_sigma: formula has free variables: " + to_string(f));
  ProofResult result;
  std::optional<Certificate> cert;
  result.status = Prover(budget).prove(f, cert);
  if (result.status == Truth::yes) result.certificate = std::move(cert);
  return result;
}

CheckResult check_cert(const Certificate& cert, const Formula& f) {
  try {
    return Kernel().check(cert, f, "root");
  } catch (const Error& e) {
    return {false, std::string("root: ") + e.what()};
  }
}

std::string to_json(const Certificate& cert) { return encode(cert).dump(2); }

Certificate certificate_from_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("certificate: ") + e.what(), e.byte == 0 ? 0 : e.byte - 1);
  }
  return decode(j);
}

std::string_view node_name(const Certificate& cert) {
  static constexpr std::string_view names[] = {"EqNorm",  "NeqSequeral", "PrefixWitness", "NotPrefix",  "AndNode",
                                               "OrLeft",  "OrRight",     "ExistsWitness", "BoundedAll"};
  return names[cert.node.index()];
}

}  // namespace seqth
