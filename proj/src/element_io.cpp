#include <cctype>

#include "weylcc/eaw.hpp"

namespace weylcc {

namespace {

class Parser {
 public:
  Parser(const AffineGroup& g, std::string_view text) : g_(g), s_(text) {}

  ExtAffineElement run() {
    skip_space();
    if (pos_ == s_.size()) throw ParseError("empty element", pos_);
    ExtAffineElement x = term();
    skip_space();
    while (pos_ < s_.size()) {
      expect('*');
      skip_space();
      x = g_.mul(x, term());
      skip_space();
    }
    return x;
  }

 private:
  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  void expect(char c) {
    if (pos_ >= s_.size()) throw ParseError(std::string("expected '") + c + "', got end of input", pos_);
    if (s_[pos_] != c)
      throw ParseError(std::string("expected '") + c + "', got '" + s_[pos_] + "'", pos_);
    ++pos_;
  }

  Int integer() {
    const std::size_t start = pos_;
    bool negative = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) negative = s_[pos_++] == '-';
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      throw ParseError("expected integer", pos_);
    Int v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      if (v > 1'000'000'000) throw ParseError("integer too large", start);
      v = v * 10 + (s_[pos_++] - '0');
    }
    if (pos_ < s_.size() && (s_[pos_] == '/' || s_[pos_] == '.'))
      throw ParseError("coordinate outside P (non-integral)", start);
    return negative ? -v : v;
  }

  IVec coordinates() {
    const std::size_t start = pos_;
    expect('[');
    std::vector<Int> vals;
    skip_space();
    vals.push_back(integer());
    skip_space();
    while (pos_ < s_.size() && s_[pos_] == ',') {
      ++pos_;
      skip_space();
      vals.push_back(integer());
      skip_space();
    }
    expect(']');
    if (static_cast<int>(vals.size()) != g_.rank())
      throw ParseError("expected " + std::to_string(g_.rank()) + " coordinates, got " +
                           std::to_string(vals.size()),
                       start);
    IVec v{};
    for (std::size_t i = 0; i < vals.size(); ++i) v[i] = vals[i];
    return v;
  }

  int index() {
    const std::size_t start = pos_;
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      throw ParseError("expected index", pos_);
    int v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_++] - '0');
      if (v > 1000) throw ParseError("index too large", start);
    }
    return v;
  }

  ExtAffineElement term() {
    const std::size_t start = pos_;
    if (pos_ >= s_.size()) throw ParseError("expected term, got end of input", pos_);
    const char c = s_[pos_];
    if (c == 't') {
      ++pos_;
      if (pos_ < s_.size() && s_[pos_] == 'c') {
        ++pos_;
        return g_.translation(g_.roots().coroot_to_coweight(coordinates()));
      }
      return g_.translation(coordinates());
    }
    if (c == 's') {
      ++pos_;
      const int i = index();
      if (i >= g_.num_simple())
        throw ParseError("no simple reflection s" + std::to_string(i) + " in " + g_.label(), start);
      return g_.simple(i);
    }
    if (c == 'd') {
      ++pos_;
      const int d = index();
      if (d >= static_cast<int>(g_.roots().diagram_automorphisms().size()))
        throw ParseError("unknown twist d" + std::to_string(d), start);
      if (!g_.twist_allowed(d))
        throw ParseError("twist d" + std::to_string(d) + " not allowed by --twist", start);
      return g_.make(IVec{}, 0, d);
    }
    if (c == 'e') {
      ++pos_;
      return g_.identity();
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  const AffineGroup& g_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

ExtAffineElement parse_element(const AffineGroup& g, std::string_view text) {
  return Parser(g, text).run();
}

std::string format_element(const AffineGroup& g, const ExtAffineElement& x) {
  g.check_same(x);
  std::vector<std::string> parts;
  if (!is_zero(x.translation, g.rank())) parts.push_back("t" + to_string(x.translation, g.rank()));
  for (int l : g.roots().weyl_element(x.finite).word) parts.push_back("s" + std::to_string(l));
  if (x.twist != 0) parts.push_back("d" + std::to_string(x.twist));
  if (parts.empty()) return "e";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += "*" + parts[i];
  return out;
}

}  // namespace weylcc
