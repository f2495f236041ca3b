#include "seqth/indexed.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "seqth/error.hpp"

namespace seqth {

IndexedSeq::IndexedSeq(std::vector<Nat> values, std::size_t start) : values_(std::move(values)), start_(start) {
  if (values_.empty()) throw DomainError("indexed sequence needs a nonempty domain");
}

Nat IndexedSeq::operator()(std::size_t k) const {
  if (k < start_ || k > end()) {
    throw DomainError("index " + std::to_string(k) + " outside domain of " + to_string(*this));
  }
  return values_[k - start_];
}

namespace {

void require_zero_start(const IndexedSeq& f, const char* op) {
  if (f.start() != 0) throw DomainError(std::string(op) + ": " + to_string(f) + " does not start at 0");
}

void require_same_domain(const IndexedSeq& f, const IndexedSeq& g, const char* op) {
  if (f.start() != g.start() || f.length() != g.length()) {
    throw DomainError(std::string(op) + ": domains of " + to_string(f) + " and " + to_string(g) + " differ");
  }
}

}  // namespace

IndexedSeq const_seq(Nat x, std::size_t n) { return IndexedSeq(std::vector<Nat>(n + 1, x)); }

IndexedSeq shift(const IndexedSeq& f, std::size_t k) {
  require_zero_start(f, "shift");
  return IndexedSeq(f.values(), k);
}

IndexedSeq join(const IndexedSeq& f, const IndexedSeq& g) {
  if (g.start() != f.end() + 1) {
    throw DomainError("join: " + to_string(g) + " does not continue " + to_string(f));
  }
  auto values = f.values();
  values.insert(values.end(), g.values().begin(), g.values().end());
  return IndexedSeq(std::move(values), f.start());
}

IndexedSeq restrict(const IndexedSeq& f, std::size_t lo, std::size_t hi) {
  if (lo > hi || lo < f.start() || hi > f.end()) {
    throw DomainError("restrict: [" + std::to_string(lo) + "," + std::to_string(hi) + "] not within the domain of " +
                      to_string(f));
  }
  const auto first = f.values().begin() + static_cast<std::ptrdiff_t>(lo - f.start());
  return IndexedSeq(std::vector<Nat>(first, first + static_cast<std::ptrdiff_t>(hi - lo + 1)), lo);
}

IndexedSeq pointwise_add(const IndexedSeq& f, const IndexedSeq& g) {
  require_same_domain(f, g, "pointwise_add");
  std::vector<Nat> out(f.length());
  std::transform(f.values().begin(), f.values().end(), g.values().begin(), out.begin(), std::plus<>{});
  return IndexedSeq(std::move(out), f.start());
}

IndexedSeq pointwise_monus(const IndexedSeq& f, const IndexedSeq& g) {
  require_same_domain(f, g, "pointwise_monus");
  std::vector<Nat> out(f.length());
  std::transform(f.values().begin(), f.values().end(), g.values().begin(), out.begin(),
                 [](Nat a, Nat b) { return a > b ? a - b : 0U; });
  return IndexedSeq(std::move(out), f.start());
}

IndexedSeq concat_indexed(const IndexedSeq& f, const IndexedSeq& g) {
  require_zero_start(f, "concat_indexed");
  require_zero_start(g, "concat_indexed");
  return join(f, shift(g, f.end() + 1));
}

Split split(const IndexedSeq& f, std::size_t k) {
  require_zero_start(f, "split");
  if (k >= f.end()) {
    throw DomainError("split: index " + std::to_string(k) + " not below " + std::to_string(f.end()));
  }
  auto tail = restrict(f, k + 1, f.end());
  return {restrict(f, 0, k), IndexedSeq(tail.values())};
}

EditorCase editor_compare(const IndexedSeq& f, const IndexedSeq& g, const IndexedSeq& p, const IndexedSeq& q) {
  for (const auto* s : {&f, &g, &p, &q}) require_zero_start(*s, "editor_compare");
  const auto whole = concat_indexed(f, g);
  if (whole != concat_indexed(p, q)) {
    throw DomainError("editor_compare: f⌢g = " + to_string(whole) + " differs from p⌢q");
  }
  if (f.length() == p.length()) return editor::Equal{};
  // The longer of f, p extends the shorter by the values in between.
  if (f.length() > p.length()) return editor::MiddleLeft{IndexedSeq(restrict(f, p.end() + 1, f.end()).values())};
  return editor::MiddleRight{IndexedSeq(restrict(p, f.end() + 1, p.end()).values())};
}

std::string to_string(const IndexedSeq& f) {
  std::string out = "[";
  for (std::size_t i = 0; i < f.length(); ++i) {
    if (i) out += ',';
    out += std::to_string(f.values()[i]);
  }
  out += ']';
  if (f.start() != 0) out += "@" + std::to_string(f.start());
  return out;
}

namespace {

class NatListReader {
 public:
  explicit NatListReader(std::string_view text) : text_(text) {}

  std::vector<Nat> read_list() {
    skip_ws();
    expect('[');
    std::vector<Nat> values;
    skip_ws();
    if (peek() == ']') throw ParseError("empty list", pos_);
    for (;;) {
      skip_ws();
      values.push_back(static_cast<Nat>(read_number()));
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      expect(']');
      return values;
    }
  }

  std::size_t read_number() {
    std::size_t v = 0;
    const auto* first = text_.data() + pos_;
    const auto [ptr, ec] = std::from_chars(first, text_.data() + text_.size(), v);
    if (ec != std::errc{} || ptr == first) throw ParseError("expected a natural number", pos_);
    pos_ += static_cast<std::size_t>(ptr - first);
    return v;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  bool done() {
    skip_ws();
    return pos_ == text_.size();
  }
  void expect(char c) {
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  std::size_t pos() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

IndexedSeq parse_indexed(std::string_view text) {
  NatListReader reader(text);
  auto values = reader.read_list();
  std::size_t start = 0;
  if (reader.peek() == '@') {
    reader.expect('@');
    start = reader.read_number();
  }
  if (!reader.done()) throw ParseError("trailing input", reader.pos());
  return IndexedSeq(std::move(values), start);
}

}  // namespace seqth
