#include "seqth/hf.hpp"

#include <algorithm>
#include <cctype>
#include <random>

#include "seqth/error.hpp"

namespace seqth {

FiniteTree::FiniteTree(std::vector<FiniteTree> children) : children_(std::move(children)) {
  if (children_.empty()) throw DomainError("a finite tree node needs at least one child");
}

std::size_t FiniteTree::nodes() const noexcept {
  std::size_t n = 1;
  for (const auto& c : children_) n += c.nodes();
  return n;
}

BinTree F_map(const FiniteTree& t) {
  BinTree acc;
  for (const auto& c : t.children()) acc = BinTree::pair(std::move(acc), F_map(c));
  return acc;
}

FiniteTree F_inv(const BinTree& b) {
  if (b.is_leaf()) return {};
  std::vector<FiniteTree> children;
  const BinTree* spine = &b;
  for (; !spine->is_leaf(); spine = &spine->left()) children.push_back(F_inv(spine->right()));
  std::reverse(children.begin(), children.end());
  return FiniteTree(std::move(children));
}

namespace {

// Nonempty child lists whose trees have m nodes in total.
std::vector<std::vector<FiniteTree>> forests(std::size_t m) {
  std::vector<std::vector<FiniteTree>> out;
  for (std::size_t first = 1; first <= m; ++first) {
    const auto heads = finite_trees_with_nodes(first);
    const auto tails = first == m ? std::vector<std::vector<FiniteTree>>{{}} : forests(m - first);
    for (const auto& h : heads) {
      for (const auto& tail : tails) {
        std::vector<FiniteTree> list{h};
        list.insert(list.end(), tail.begin(), tail.end());
        out.push_back(std::move(list));
      }
    }
  }
  return out;
}

}  // namespace

std::vector<FiniteTree> finite_trees_with_nodes(std::size_t n) {
  if (n == 0) return {};
  if (n == 1) return {FiniteTree{}};
  std::vector<FiniteTree> out;
  for (auto& children : forests(n - 1)) out.emplace_back(std::move(children));
  return out;
}

bool snake_less(const Snake& f, const Snake& g) {
  if (f.size() != g.size()) return f.size() < g.size();
  return std::lexicographical_compare(f.begin(), f.end(), g.begin(), g.end());
}

std::vector<Snake> decompose(const Snake& x) {
  const std::string alpha = snake_to_polish(x);
  std::vector<Snake> blocks;
  if (alpha == "a") return blocks;
  const std::size_t k = alpha.find('a');
  std::size_t pos = k + 1;
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t begin = pos;
    for (std::size_t need = 1; need > 0; ++pos) {
      if (pos >= alpha.size()) throw DomainError("decompose: truncated block in " + snake_to_string(x));
      need = alpha[pos] == 'b' ? need + 1 : need - 1;
    }
    blocks.push_back(polish_to_snake(std::string_view(alpha).substr(begin, pos - begin)));
  }
  if (pos != alpha.size()) throw DomainError("decompose: trailing blocks in " + snake_to_string(x));
  return blocks;
}

bool is_ordered_snake(const Snake& x) {
  if (!is_snake(x)) return false;
  const auto blocks = decompose(x);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i > 0 && !snake_less(blocks[i - 1], blocks[i])) return false;
    if (!is_ordered_snake(blocks[i])) return false;
  }
  return true;
}

std::size_t cardinality(const Snake& f) {
  for (std::size_t j = 0; j < f.size(); ++j) {
    if (f[j] == j) return j;
  }
  throw DomainError("cardinality: no index j with f(j) = j in " + snake_to_string(f));
}

bool member_star(const Snake& g, const Snake& f) {
  if (g.empty() || f.empty()) return false;
  std::size_t kstar = 0;
  try {
    kstar = cardinality(f);
  } catch (const DomainError&) {
    return false;
  }
  const auto least_from = [&](Nat value) {
    for (std::size_t j = kstar; j < f.size(); ++j) {
      if (f[j] == value) return j;
    }
    return f.size();
  };
  const std::size_t m = g.size() - 1;
  for (Nat l = 0; l < kstar; ++l) {
    const std::size_t m0 = least_from(l + 1);
    const std::size_t m1 = least_from(l);
    if (m0 >= f.size() || m1 >= f.size() || m1 != m0 + m + 1) continue;
    bool match = true;
    for (std::size_t j = 0; j <= m && match; ++j) match = f[m0 + j + 1] == g[j] + l;
    if (match) return true;
  }
  return false;
}

std::vector<Snake> members(const Snake& f) {
  if (!is_ordered_snake(f)) throw DomainError("members: not an ordered snake: " + snake_to_string(f));
  return decompose(f);
}

namespace {

Snake encode(const std::vector<HFSet>& sorted) {
  const auto k = static_cast<Nat>(sorted.size());
  if (k == 0) return {0};
  Snake out;
  for (Nat v = 2; v <= k + 1; ++v) out.push_back(v);
  out.push_back(k);
  for (Nat i = 0; i < k; ++i) {
    const Nat lift = k - 1 - i;
    for (Nat v : sorted[i].snake()) out.push_back(v + lift);
  }
  return out;
}

}  // namespace

HFSet::HFSet() : snake_{0} {}

HFSet::HFSet(std::vector<HFSet> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end(),
            [](const HFSet& a, const HFSet& b) { return snake_less(a.snake_, b.snake_); });
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  snake_ = encode(members_);
}

bool HFSet::contains(const HFSet& x) const {
  return std::binary_search(members_.begin(), members_.end(), x,
                            [](const HFSet& a, const HFSet& b) { return snake_less(a.snake_, b.snake_); });
}

Snake hf_to_snake(const HFSet& s) { return s.snake(); }

HFSet snake_to_hf(const Snake& x) {
  std::vector<HFSet> out;
  for (const auto& block : members(x)) out.push_back(snake_to_hf(block));
  return HFSet(std::move(out));
}

Snake adjoin(const Snake& f, const Snake& g) {
  auto items = snake_to_hf(f).members();
  items.push_back(snake_to_hf(g));
  return HFSet(std::move(items)).snake();
}

std::vector<HFSet> stage(std::size_t n) {
  if (n > 4) throw DomainError("stage: V(" + std::to_string(n) + ") is too large to list");
  std::vector<HFSet> level{HFSet{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<HFSet> next;
    const std::size_t subsets = std::size_t{1} << level.size();
    next.reserve(subsets);
    for (std::size_t mask = 0; mask < subsets; ++mask) {
      std::vector<HFSet> items;
      for (std::size_t b = 0; b < level.size(); ++b) {
        if (mask >> b & 1U) items.push_back(level[b]);
      }
      next.emplace_back(std::move(items));
    }
    level = std::move(next);
  }
  return level;
}

std::vector<HFSet> sample_stage(std::size_t n, std::size_t count, std::uint32_t seed) {
  if (n < 1 || n > 4) throw DomainError("sample_stage: stage must be between 1 and 4");
  const auto base = stage(n - 1);
  std::mt19937 rng(seed);
  std::bernoulli_distribution coin(0.5);
  std::vector<HFSet> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<HFSet> items;
    for (const auto& x : base) {
      if (coin(rng)) items.push_back(x);
    }
    out.emplace_back(std::move(items));
  }
  return out;
}

std::string to_string(const HFSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.members().size(); ++i) {
    if (i) out += ',';
    out += to_string(s.members()[i]);
  }
  return out + "}";
}

namespace {

class HFReader {
 public:
  explicit HFReader(std::string_view text) : text_(text) {}

  HFSet read_all() {
    HFSet s = read();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("trailing input", pos_);
    return s;
  }

 private:
  HFSet read() {
    skip_ws();
    expect('{');
    std::vector<HFSet> items;
    skip_ws();
    if (peek() == '}') {
      ++pos_;
      return HFSet{};
    }
    for (;;) {
      items.push_back(read());
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      expect('}');
      return HFSet(std::move(items));
    }
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void expect(char c) {
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

HFSet parse_hf(std::string_view text) { return HFReader(text).read_all(); }

}  // namespace seqth
