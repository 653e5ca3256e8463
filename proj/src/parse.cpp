#include "fodlab/parse.hpp"

#include <cctype>
#include <string>

#include "fodlab/errors.hpp"

namespace fodlab {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Poly expression(std::size_t arity) {
    Poly acc = term(arity);
    for (;;) {
      skip_space();
      if (accept('+')) {
        acc += term(arity);
      } else if (accept('-')) {
        acc -= term(arity);
      } else {
        return acc;
      }
    }
  }

  PolyMap map() {
    expect('[');
    std::vector<std::size_t> starts;
    std::vector<std::string_view> pieces;
    // Components are parsed after the arity is known; remember their spans.
    skip_space();
    if (!peek(']')) {
      for (;;) {
        const std::size_t start = pos_;
        int depth = 0;
        while (pos_ < text_.size() && !(depth == 0 && (text_[pos_] == ';' || text_[pos_] == ']'))) {
          if (text_[pos_] == '(') ++depth;
          if (text_[pos_] == ')') --depth;
          ++pos_;
        }
        starts.push_back(start);
        pieces.push_back(text_.substr(start, pos_ - start));
        if (accept(';')) continue;
        break;
      }
    }
    expect(']');
    expect(':');
    const std::size_t dom_offset = position();
    const std::size_t dom = integer();
    expect('-');
    if (pos_ >= text_.size() || text_[pos_] != '>') fail("expected '->'");
    ++pos_;
    const std::size_t cod_offset = position();
    const std::size_t cod = integer();
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    if (pieces.size() != cod) {
      throw ParseError("map literal has " + std::to_string(pieces.size()) +
                           " components but codomain " + std::to_string(cod),
                       cod_offset);
    }
    (void)dom_offset;

    std::vector<Poly> comps;
    comps.reserve(pieces.size());
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      Parser sub(pieces[i]);
      sub.base_ = base_ + starts[i];
      Poly p = sub.expression(dom);
      sub.skip_space();
      if (sub.pos_ != sub.text_.size()) sub.fail("unexpected character");
      comps.push_back(std::move(p));
    }
    return PolyMap(dom, std::move(comps));
  }

  void finish() {
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, position());
  }

  std::size_t position() const { return base_ + pos_; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string digits() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::size_t integer() {
    const std::size_t at = position();
    const std::string d = digits();
    if (d.size() > 9) throw ParseError("integer too large", at);
    return static_cast<std::size_t>(std::stoul(d));
  }

  Rational rational_literal() {
    Rational value(digits(), 10);
    if (accept('/')) {
      const std::size_t at = position();
      Rational den(digits(), 10);
      if (sgn(den) == 0) throw ParseError("zero denominator", at);
      value /= den;
    }
    value.canonicalize();
    return value;
  }

 private:
  Poly term(std::size_t arity) {
    Poly acc = factor(arity);
    while (accept('*')) acc = acc * factor(arity);
    return acc;
  }

  Poly factor(std::size_t arity) {
    if (accept('-')) return -factor(arity);
    return power(arity);
  }

  Poly power(std::size_t arity) {
    Poly base = atom(arity);
    if (accept('^')) {
      const std::size_t k = integer();
      base = base.pow(static_cast<std::uint32_t>(k));
    }
    return base;
  }

  Poly atom(std::size_t arity) {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expression(arity);
      expect(')');
      return inner;
    }
    if (c == 'x') {
      ++pos_;
      const std::size_t at = position();
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        fail("expected variable index");
      }
      const std::size_t index = integer();
      if (index >= arity) {
        throw ParseError("variable x" + std::to_string(index) + " out of range for domain " +
                             std::to_string(arity),
                         at - 1);
      }
      return Poly::variable(arity, index);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Poly::constant(arity, rational_literal());
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t base_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, std::size_t arity) {
  Parser p(text);
  Poly out = p.expression(arity);
  p.finish();
  return out;
}

PolyMap parse_map(std::string_view text) {
  Parser p(text);
  return p.map();
}

Rational parse_rational(std::string_view text) {
  const Poly p = parse_poly(text, 0);
  if (!p.is_constant()) throw ParseError("expected a rational constant", 0);
  return p.is_zero() ? Rational(0) : p.terms()[0].coefficient;
}

std::vector<std::vector<Rational>> parse_matrix(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  if (begin < end && text[begin] == '[') {
    if (text[end - 1] != ']') throw ParseError("unbalanced '['", end);
    ++begin;
    --end;
  }
  std::vector<std::vector<Rational>> rows;
  std::size_t row_start = begin;
  for (std::size_t i = begin; i <= end; ++i) {
    if (i != end && text[i] != ';') continue;
    std::vector<Rational> row;
    std::size_t entry_start = row_start;
    for (std::size_t j = row_start; j <= i; ++j) {
      if (j != i && text[j] != ',') continue;
      try {
        row.push_back(parse_rational(text.substr(entry_start, j - entry_start)));
      } catch (const ParseError& e) {
        throw ParseError("bad matrix entry", entry_start + e.offset());
      }
      entry_start = j + 1;
    }
    rows.push_back(std::move(row));
    row_start = i + 1;
  }
  for (const auto& r : rows) {
    if (r.size() != rows.front().size()) throw ParseError("ragged matrix", 0);
  }
  return rows;
}

}  // namespace fodlab
