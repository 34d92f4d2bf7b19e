#include <algorithm>
#include <cctype>

#include "terms.hpp"

namespace orientcalc::detail {

TermList combine_terms(TermList terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return storage_less(a.mono, b.mono);
  });
  TermList out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  return out;
}

TermList add_terms(const TermList& a, const TermList& b) {
  TermList out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && storage_less(i->mono, j->mono))) {
      out.push_back(*i++);
    } else if (i == a.end() || storage_less(j->mono, i->mono)) {
      out.push_back(*j++);
    } else {
      Rational c = i->coeff + j->coeff;
      if (c != 0) out.push_back({i->mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

TermList mul_terms(const TermList& a, const TermList& b) {
  TermList out;
  out.reserve(a.size() * b.size());
  for (const Term& x : a) {
    for (const Term& y : b) out.push_back({x.mono * y.mono, x.coeff * y.coeff});
  }
  return out;
}

TermList scale_terms(const TermList& a, const Rational& q) {
  if (q == 0) return {};
  TermList out = a;
  for (auto& t : out) t.coeff *= q;
  return out;
}

namespace {

bool ident_start(char c) {
  auto u = static_cast<unsigned char>(c);
  return std::isalpha(u) || c == '_' || u >= 0x80;
}

bool ident_char(char c) {
  return ident_start(c) || std::isdigit(static_cast<unsigned char>(c));
}

// expr   := ['+'|'-'] term (('+'|'-') term)*
// term   := factor (('*'|'/') factor | factor)*   (juxtaposition multiplies)
// factor := atom ['^' integer]
// atom   := rational | identifier | '(' expr ')'
class Parser {
 public:
  Parser(std::string_view src, const Resolver& resolve)
      : src_(src), resolve_(resolve) {}

  TermList parse() {
    TermList e = expr();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected character");
    return combine_terms(std::move(e));
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::ParseError, what + " at position " +
                                           std::to_string(pos_) + " in '" +
                                           std::string(src_) + "'");
  }

  void skip_ws() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_]))) {
      ++pos_;
    }
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  TermList expr() {
    TermList acc;
    bool negate = false;
    if (eat('-')) {
      negate = true;
    } else {
      eat('+');
    }
    acc = term();
    if (negate) acc = scale_terms(acc, -1);
    for (;;) {
      if (eat('+')) {
        acc = combine_terms(add_terms(acc, term()));
      } else if (eat('-')) {
        acc = combine_terms(add_terms(acc, scale_terms(term(), -1)));
      } else {
        return acc;
      }
    }
  }

  TermList term() {
    TermList acc = factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = combine_terms(mul_terms(acc, factor()));
      } else if (c == '/') {
        ++pos_;
        TermList d = factor();
        if (d.size() != 1 || !d.front().mono.is_one()) {
          fail("division only by nonzero constants");
        }
        acc = scale_terms(acc, 1 / d.front().coeff);
      } else if (c == '(' || ident_start(c) ||
                 std::isdigit(static_cast<unsigned char>(c))) {
        acc = combine_terms(mul_terms(acc, factor()));
      } else {
        return acc;
      }
    }
  }

  TermList factor() {
    TermList base = atom();
    if (!eat('^')) return base;
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < src_.size() &&
           std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) fail("expected exponent");
    unsigned long k = std::stoul(std::string(src_.substr(start, pos_ - start)));
    if (k > 255) fail("exponent too large");
    TermList out{{Monomial{}, 1}};
    for (unsigned long i = 0; i < k; ++i) {
      out = combine_terms(mul_terms(out, base));
    }
    return out;
  }

  TermList atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      TermList e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        ++pos_;
      }
      Rational q(std::string(src_.substr(start, pos_ - start)));
      if (q == 0) return {};
      return {{Monomial{}, q}};
    }
    if (ident_start(c)) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && ident_char(src_[pos_])) ++pos_;
      std::string_view name = src_.substr(start, pos_ - start);
      Monomial m;
      m.set(resolve_(name), 1);
      return {{m, 1}};
    }
    fail(c == '\0' ? "unexpected end of expression" : "unexpected character");
  }

  std::string_view src_;
  const Resolver& resolve_;
  std::size_t pos_ = 0;
};

}  // namespace

TermList parse_terms(std::string_view expr, const Resolver& resolve) {
  return Parser(expr, resolve).parse();
}

}  // namespace orientcalc::detail
