#include "seqth/seq.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "seqth/error.hpp"

namespace seqth {

Seq::Seq(std::vector<Seq> elements) : elements_(std::move(elements)) {
  for (const auto& e : elements_) size_ += e.size_;
}

std::strong_ordering compare(const Seq& a, const Seq& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  const auto& xs = a.elements();
  const auto& ys = b.elements();
  const auto n = std::min(xs.size(), ys.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = compare(xs[i], ys[i]); c != 0) return c;
  }
  return xs.size() <=> ys.size();
}

Seq append(const Seq& s, const Seq& t) {
  auto elems = s.elements();
  elems.push_back(t);
  return Seq(std::move(elems));
}

Seq concat(const Seq& s, const Seq& t) {
  auto elems = s.elements();
  elems.insert(elems.end(), t.elements().begin(), t.elements().end());
  return Seq(std::move(elems));
}

std::vector<Seq> initial_segments(const Seq& s) {
  std::vector<Seq> out;
  out.reserve(s.length() + 1);
  const auto& elems = s.elements();
  for (std::size_t i = 0; i <= elems.size(); ++i) {
    out.emplace_back(std::vector<Seq>(elems.begin(), elems.begin() + static_cast<std::ptrdiff_t>(i)));
  }
  return out;
}

bool is_prefix(const Seq& s, const Seq& t) {
  const auto& xs = s.elements();
  const auto& ys = t.elements();
  return xs.size() <= ys.size() && std::equal(xs.begin(), xs.end(), ys.begin());
}

Seq suffix_after(const Seq& s, const Seq& t) {
  if (!is_prefix(s, t)) throw DomainError("suffix_after: " + to_string(s) + " is not a prefix of " + to_string(t));
  const auto& ys = t.elements();
  return Seq(std::vector<Seq>(ys.begin() + static_cast<std::ptrdiff_t>(s.length()), ys.end()));
}

namespace {

// Forests (ordered element lists) of a given total node count, memoized per call.
class ForestTable {
 public:
  const std::vector<std::vector<Seq>>& forests(std::size_t total) {
    if (auto it = table_.find(total); it != table_.end()) return it->second;
    std::vector<std::vector<Seq>> out;
    if (total == 0) {
      out.emplace_back();
    } else {
      // First element of size k, then any forest of the remaining size.
      for (std::size_t k = 1; k <= total; ++k) {
        const auto heads = trees(k);
        const auto& tails = forests(total - k);
        for (const auto& head : heads) {
          for (const auto& tail : tails) {
            std::vector<Seq> f;
            f.reserve(tail.size() + 1);
            f.push_back(head);
            f.insert(f.end(), tail.begin(), tail.end());
            out.push_back(std::move(f));
          }
        }
      }
    }
    return table_.emplace(total, std::move(out)).first->second;
  }

  std::vector<Seq> trees(std::size_t size) {
    std::vector<Seq> out;
    if (size == 0) return out;
    for (const auto& f : forests(size - 1)) out.emplace_back(f);
    return out;
  }

 private:
  std::map<std::size_t, std::vector<std::vector<Seq>>> table_;
};

}  // namespace

std::vector<Seq> enumerate_exact(std::size_t size) {
  ForestTable table;
  return table.trees(size);
}

std::vector<Seq> enumerate(std::size_t bound) {
  ForestTable table;
  std::vector<Seq> out;
  for (std::size_t n = 1; n <= bound; ++n) {
    auto layer = table.trees(n);
    out.insert(out.end(), std::make_move_iterator(layer.begin()), std::make_move_iterator(layer.end()));
  }
  return out;
}

namespace {

void write(const Seq& s, std::string& out) {
  out.push_back('(');
  bool first = true;
  for (const auto& e : s.elements()) {
    if (!first) out.push_back(' ');
    first = false;
    write(e, out);
  }
  out.push_back(')');
}

class SeqReader {
 public:
  explicit SeqReader(std::string_view text) : text_(text) {}

  Seq read_all() {
    skip_ws();
    Seq s = read();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("trailing input after sequence literal", pos_);
    return s;
  }

 private:
  Seq read() {
    if (pos_ >= text_.size() || text_[pos_] != '(') throw ParseError("expected '('", pos_);
    ++pos_;
    std::vector<Seq> elems;
    for (;;) {
      skip_ws();
      if (pos_ >= text_.size()) throw ParseError("unbalanced parentheses: missing ')'", pos_);
      if (text_[pos_] == ')') {
        ++pos_;
        return Seq(std::move(elems));
      }
      elems.push_back(read());
    }
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const Seq& s) {
  std::string out;
  write(s, out);
  return out;
}

Seq parse_seq(std::string_view text) { return SeqReader(text).read_all(); }

}  // namespace seqth
