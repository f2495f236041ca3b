#include "seqth/snake.hpp"

#include <algorithm>
#include <map>

#include "seqth/error.hpp"
#include "seqth/syntax.hpp"

namespace seqth {

struct BinTree::Node {
  BinTree left;
  BinTree right;
  std::size_t leaves;
};

BinTree BinTree::pair(BinTree left, BinTree right) {
  BinTree t;
  const std::size_t n = left.leaves() + right.leaves();
  t.node_ = std::make_shared<const Node>(Node{std::move(left), std::move(right), n});
  return t;
}

const BinTree& BinTree::left() const {
  if (!node_) throw DomainError("left of a leaf");
  return node_->left;
}

const BinTree& BinTree::right() const {
  if (!node_) throw DomainError("right of a leaf");
  return node_->right;
}

std::size_t BinTree::leaves() const noexcept { return node_ ? node_->leaves : 1; }

bool operator==(const BinTree& a, const BinTree& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_ || a.leaves() != b.leaves()) return false;
  return a.node_->left == b.node_->left && a.node_->right == b.node_->right;
}

bool is_snake(const Snake& x) {
  if (x.empty()) return false;
  if (x.size() == 1) return x[0] == 0;
  if (x.front() != 2 || x.back() != 0) return false;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    if (x[i] == 0) return false;
    if (x[i] + 1 != x[i + 1] && x[i + 1] + 1 != x[i]) return false;
  }
  return true;
}

void require_snake(const Snake& x, std::string_view context) {
  if (!is_snake(x)) throw DomainError(std::string(context) + ": not a snake: " + snake_to_string(x));
}

namespace {

void require_ab(std::string_view alpha) {
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] != 'a' && alpha[i] != 'b') throw ParseError(std::string("expected 'a' or 'b', got '") + alpha[i] + "'", i);
  }
}

}  // namespace

bool is_polish(std::string_view alpha) {
  require_ab(alpha);
  std::size_t na = 0;
  std::size_t nb = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (na > nb) return false;  // the prefix alpha[0, i) is strict
    (alpha[i] == 'a' ? na : nb) += 1;
  }
  return nb + 1 == na;
}

bool in_polish_grammar(std::string_view alpha) {
  require_ab(alpha);
  const std::size_t n = alpha.size();
  if (n == 0) return false;
  // in[i][len]: alpha.substr(i, len) ∈ P.
  std::vector<std::vector<char>> in(n + 1, std::vector<char>(n + 1, 0));
  for (std::size_t len = 1; len <= n; ++len) {
    for (std::size_t i = 0; i + len <= n; ++i) {
      if (len == 1) {
        in[i][1] = alpha[i] == 'a';
        continue;
      }
      if (alpha[i] != 'b') continue;
      for (std::size_t mid = 1; mid + 1 < len; ++mid) {
        if (in[i + 1][mid] && in[i + 1 + mid][len - 1 - mid]) {
          in[i][len] = 1;
          break;
        }
      }
    }
  }
  return in[0][n] != 0;
}

std::string tree_to_polish(const BinTree& t) {
  std::string out;
  std::vector<const BinTree*> todo{&t};
  while (!todo.empty()) {
    const BinTree* cur = todo.back();
    todo.pop_back();
    if (cur->is_leaf()) {
      out += 'a';
      continue;
    }
    out += 'b';
    todo.push_back(&cur->right());
    todo.push_back(&cur->left());
  }
  return out;
}

BinTree polish_to_tree(std::string_view alpha) {
  require_ab(alpha);
  // Reading right to left, every b combines the two most recent complete trees.
  std::vector<BinTree> stack;
  for (std::size_t i = alpha.size(); i-- > 0;) {
    if (alpha[i] == 'a') {
      stack.emplace_back();
      continue;
    }
    if (stack.size() < 2) throw ParseError("'b' without two following trees", i);
    BinTree left = std::move(stack.back());
    stack.pop_back();
    BinTree right = std::move(stack.back());
    stack.back() = BinTree::pair(std::move(left), std::move(right));
  }
  if (stack.size() != 1) throw ParseError(stack.empty() ? "empty Polish string" : "more than one tree", 0);
  return stack.front();
}

Snake polish_to_snake(std::string_view alpha) {
  if (!is_polish(alpha)) throw ParseError("not a Polish string: " + std::string(alpha), 0);
  if (alpha.size() == 1) return {0};
  Snake x{2};
  for (std::size_t i = 1; i < alpha.size(); ++i) x.push_back(alpha[i] == 'a' ? x.back() - 1 : x.back() + 1);
  return x;
}

std::string snake_to_polish(const Snake& x) {
  require_snake(x, "snake_to_polish");
  if (x.size() == 1) return "a";
  std::string out = "b";
  for (std::size_t i = 1; i < x.size(); ++i) out += x[i] > x[i - 1] ? 'b' : 'a';
  return out;
}

Snake tree_to_snake(const BinTree& t) { return polish_to_snake(tree_to_polish(t)); }

BinTree snake_to_tree(const Snake& x) { return polish_to_tree(snake_to_polish(x)); }

Snake snake_oplus(const Snake& x, const Snake& y) {
  require_snake(x, "snake_oplus");
  require_snake(y, "snake_oplus");
  Snake out{2};
  for (Nat v : x) out.push_back(v + 1);
  out.insert(out.end(), y.begin(), y.end());
  return out;
}

bool snake_subpart(const Snake& x, const Snake& y) {
  require_snake(x, "snake_subpart");
  require_snake(y, "snake_subpart");
  if (x == Snake{0} || x == y) return true;
  const std::size_t n = x.size() - 1;
  const Nat top = *std::max_element(y.begin(), y.end());
  for (std::size_t k = 0; k + n + 1 < y.size(); ++k) {
    if (y[k + 1] != y[k] + 1 || y[k + 1] != y[k + n + 1] + 2) continue;
    for (Nat l = 0; l <= top; ++l) {
      bool copy = true;
      for (std::size_t i = 0; i <= n && copy; ++i) copy = y[k + i + 1] == x[i] + l;
      if (copy) return true;
    }
  }
  return false;
}

Snake snake_pair(const Snake& f, const Snake& g) {
  const IndexedSeq lifted = pointwise_add(IndexedSeq(f), const_seq(1, f.size() - 1));
  return concat_indexed(concat_indexed(const_seq(2, 0), lifted), IndexedSeq(g)).values();
}

bool subtree(const BinTree& s, const BinTree& t) {
  if (s.leaves() > t.leaves()) return false;
  if (s == t) return true;
  return !t.is_leaf() && (subtree(s, t.left()) || subtree(s, t.right()));
}

std::vector<BinTree> trees_with_leaves(std::size_t n) {
  if (n == 0) return {};
  static std::map<std::size_t, std::vector<BinTree>> memo;
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  std::vector<BinTree> out;
  if (n == 1) {
    out.emplace_back();
  } else {
    for (std::size_t k = 1; k < n; ++k) {
      const auto lefts = trees_with_leaves(k);
      const auto rights = trees_with_leaves(n - k);
      for (const auto& l : lefts) {
        for (const auto& r : rights) out.push_back(BinTree::pair(l, r));
      }
    }
  }
  return memo.emplace(n, std::move(out)).first->second;
}

std::vector<BinTree> trees_up_to_leaves(std::size_t n) {
  std::vector<BinTree> out;
  for (std::size_t k = 1; k <= n; ++k) {
    auto level = trees_with_leaves(k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::string to_string(const BinTree& t) {
  if (t.is_leaf()) return "bot";
  return "(pair " + to_string(t.left()) + " " + to_string(t.right()) + ")";
}

namespace {

BinTree term_to_tree(const Term& t) {
  if (t.kind() == Term::Kind::constant && t.constant() == Constant::bot) return {};
  if (t.kind() == Term::Kind::binary && t.op() == Op::pair) {
    return BinTree::pair(term_to_tree(t.lhs()), term_to_tree(t.rhs()));
  }
  throw ParseError("tree text uses only bot and (pair t1 t2), got " + to_string(t), 0);
}

}  // namespace

BinTree parse_tree(std::string_view text) { return term_to_tree(parse_term(text)); }

std::string snake_to_string(const Snake& x) {
  std::string out = "[";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(x[i]);
  }
  return out + "]";
}

Snake parse_snake(std::string_view text) {
  const IndexedSeq f = parse_indexed(text);
  if (f.start() != 0) throw ParseError("a snake is indexed from 0", 0);
  if (!is_snake(f.values())) throw ParseError("not a snake: " + snake_to_string(f.values()), 0);
  return f.values();
}

}  // namespace seqth
