#include "oracles.hpp"

namespace oracle {

using seqth::BinTree;
using seqth::HFSet;
using seqth::Nat;
using seqth::Seq;

std::string word(const Seq& s) {
  std::string out = "(";
  for (const auto& e : s.elements()) out += word(e);
  return out + ")";
}

std::string word_append(const std::string& s, const std::string& t) { return s.substr(0, s.size() - 1) + t + ")"; }

std::string word_concat(const std::string& s, const std::string& t) {
  return s.substr(0, s.size() - 1) + t.substr(1);
}

std::vector<std::string> words_of_size(std::size_t n) {
  std::vector<std::string> out;
  const std::size_t len = 2 * n;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
    std::string w(len, ')');
    for (std::size_t i = 0; i < len; ++i) {
      if (bits >> (len - 1 - i) & 1U) w[i] = '(';
    }
    // Balanced, and the depth returns to zero only at the very end.
    long depth = 0;
    bool ok = true;
    for (std::size_t i = 0; i < len && ok; ++i) {
      depth += w[i] == '(' ? 1 : -1;
      ok = depth > 0 || (depth == 0 && i + 1 == len);
    }
    if (ok && depth == 0) out.push_back(w);
  }
  return out;
}

std::uint64_t catalan(std::size_t n) {
  std::uint64_t c = 1;
  for (std::size_t k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

bool polish_naive(const std::string& alpha) {
  if (alpha == "a") return true;
  if (alpha.size() < 3 || alpha[0] != 'b') return false;
  for (std::size_t cut = 2; cut < alpha.size(); ++cut) {
    if (polish_naive(alpha.substr(1, cut - 1)) && polish_naive(alpha.substr(cut))) return true;
  }
  return false;
}

std::string polish(const BinTree& t) {
  if (t.is_leaf()) return "a";
  return "b" + polish(t.left()) + polish(t.right());
}

seqth::Snake snake_by_counts(const std::string& alpha) {
  if (alpha == "a") return {0};
  seqth::Snake x;
  long nb = 0, na = 0;
  for (char c : alpha) {
    (c == 'b' ? nb : na) += 1;
    x.push_back(static_cast<Nat>(nb - na + 1));
  }
  return x;
}

std::vector<BinTree> subterms(const BinTree& t) {
  std::vector<BinTree> out{t};
  if (!t.is_leaf()) {
    for (const auto* child : {&t.left(), &t.right()}) {
      auto sub = subterms(*child);
      out.insert(out.end(), sub.begin(), sub.end());
    }
  }
  return out;
}

bool tau_by_definition(const Seq& u, const Seq& y) {
  const auto domain = seqth::enumerate(y.size());
  for (const auto& v1 : domain) {
    const Seq head = seqth::append(v1, u);
    if (head.size() > y.size()) continue;
    for (const auto& v2 : domain) {
      if (seqth::concat(head, v2) == y) return true;
    }
  }
  return false;
}

HFSet ackermann_set(std::uint32_t n) {
  std::vector<HFSet> members;
  for (std::uint32_t bit = 0; bit < 32; ++bit) {
    if (n >> bit & 1U) members.push_back(ackermann_set(bit));
  }
  return HFSet(std::move(members));
}

std::uint32_t ackermann_code(const HFSet& s) {
  std::uint32_t n = 0;
  for (const auto& m : s.members()) n |= std::uint32_t{1} << ackermann_code(m);
  return n;
}

namespace {

std::vector<Nat> cat(const std::vector<Nat>& a, const std::vector<Nat>& b) {
  auto out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

std::vector<std::vector<Nat>> words_over(std::size_t len, Nat max_value) {
  std::vector<std::vector<Nat>> out{{}};
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<std::vector<Nat>> next;
    for (const auto& w : out) {
      for (Nat v = 0; v <= max_value; ++v) {
        next.push_back(w);
        next.back().push_back(v);
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<EditorSolution> editor_solutions(const std::vector<Nat>& f, const std::vector<Nat>& g,
                                             const std::vector<Nat>& p, const std::vector<Nat>& q,
                                             std::size_t max_len, Nat max_value) {
  std::vector<EditorSolution> out;
  if (f == p && g == q) out.push_back({EditorKind::equal, {}});
  for (std::size_t len = 1; len <= max_len; ++len) {
    for (const auto& h : words_over(len, max_value)) {
      if (f == cat(p, h) && cat(h, g) == q) out.push_back({EditorKind::middle_left, h});
      if (p == cat(f, h) && cat(h, q) == g) out.push_back({EditorKind::middle_right, h});
    }
  }
  return out;
}

}  // namespace oracle
