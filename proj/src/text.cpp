#include "gmod/text.hpp"

#include <cctype>
#include <sstream>

namespace gmod {

namespace {

void render_mono(std::ostringstream& os, const RingSpec& ring, const Monomial& m,
                 bool with_leading_star) {
  bool first = !with_leading_star;
  for (int i = 0; i < ring.nvars(); ++i) {
    int e = m.exponent(i);
    if (e == 0) continue;
    if (!first) os << "*";
    first = false;
    os << ring.name(i);
    if (e > 1) os << "^" << e;
  }
}

}  // namespace

std::string render_poly(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  const RingSpec& ring = *f.ring();
  bool first = true;
  for (const Term& t : f.terms()) {
    if (!first) os << " + ";
    first = false;
    if (t.mono.is_one()) {
      os << t.coeff;
    } else if (t.coeff == 1) {
      render_mono(os, ring, t.mono, false);
    } else {
      os << t.coeff;
      render_mono(os, ring, t.mono, true);
    }
  }
  return os.str();
}

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;
  int line;
  int col0;

  int column() const { return col0 + static_cast<int>(i) + 1; }
  void skip_ws() {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  char take() {
    skip_ws();
    return s[i++];
  }
};

std::int64_t parse_number(Cursor& c) {
  c.skip_ws();
  size_t start = c.i;
  std::int64_t v = 0;
  while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) {
    v = v * 10 + (c.s[c.i] - '0');
    if (v > (std::int64_t{1} << 40))
      throw parse_error("numeric literal too large", c.line, c.column());
    ++c.i;
  }
  if (c.i == start) throw parse_error("expected a number", c.line, c.column());
  return v;
}

std::string parse_ident(Cursor& c) {
  c.skip_ws();
  size_t start = c.i;
  while (c.i < c.s.size() &&
         (std::isalnum(static_cast<unsigned char>(c.s[c.i])) || c.s[c.i] == '_'))
    ++c.i;
  if (c.i == start) throw parse_error("expected an identifier", c.line, c.column());
  return c.s.substr(start, c.i - start);
}

// factor := number | var ('^' number)?
// term   := factor ('*' factor)*
// poly   := ['-'] term (('+'|'-') term)*
std::pair<std::int64_t, Monomial> parse_term(Cursor& c, const RingPtr& ring) {
  std::int64_t coeff = 1;
  std::vector<int> expo(ring->nvars(), 0);
  bool any = false;
  while (true) {
    c.skip_ws();
    if (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) {
      coeff = fp_mul(fp_normalize(coeff, ring->characteristic()),
                     fp_normalize(parse_number(c), ring->characteristic()),
                     ring->characteristic());
      any = true;
    } else if (c.i < c.s.size() &&
               (std::isalpha(static_cast<unsigned char>(c.s[c.i])) ||
                c.s[c.i] == '_')) {
      int at_col = c.column();
      std::string name = parse_ident(c);
      int vi = ring->var_index(name);
      if (vi < 0)
        throw parse_error("unknown variable '" + name + "'", c.line, at_col);
      int power = 1;
      if (c.peek() == '^') {
        c.take();
        power = static_cast<int>(parse_number(c));
      }
      expo[vi] += power;
      any = true;
    } else {
      throw parse_error("expected a coefficient or variable", c.line, c.column());
    }
    if (c.peek() == '*') {
      c.take();
      continue;
    }
    break;
  }
  if (!any) throw parse_error("empty term", c.line, c.column());
  return {coeff, Monomial(std::move(expo))};
}

}  // namespace

Polynomial parse_poly(const RingPtr& ring, const std::string& text, int line,
                      int column_offset) {
  Cursor c{text, 0, line, column_offset};
  std::vector<std::pair<std::int64_t, Monomial>> raw;
  if (c.done()) throw parse_error("empty polynomial", line, c.column());
  std::int64_t sign = 1;
  if (c.peek() == '-') {
    c.take();
    sign = -1;
  } else if (c.peek() == '+') {
    c.take();
  }
  while (true) {
    // bare "0" stands for the zero polynomial
    auto [coeff, mono] = parse_term(c, ring);
    raw.emplace_back(sign * coeff, std::move(mono));
    if (c.done()) break;
    char op = c.take();
    if (op == '+') {
      sign = 1;
    } else if (op == '-') {
      sign = -1;
    } else {
      throw parse_error(std::string("unexpected character '") + op + "'", line,
                        c.column() - 1);
    }
  }
  try {
    return poly_normalize(ring, std::move(raw));
  } catch (const inhomogeneous_error& e) {
    throw parse_error(e.what(), line, column_offset + 1);
  }
}

std::string render_twists(const std::vector<int>& twists) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < twists.size(); ++i) {
    if (i) os << ",";
    os << twists[i];
  }
  os << "]";
  return os.str();
}

std::string render_matrix(const FreeMap& f) {
  std::ostringstream os;
  for (int i = 0; i < f.target().rank(); ++i) {
    if (i) os << "; ";
    for (int j = 0; j < f.source().rank(); ++j) {
      if (j) os << ", ";
      os << render_poly(f.entry(i, j));
    }
  }
  return os.str();
}

std::string render_element(const FreeElement& v) {
  std::ostringstream os;
  for (int i = 0; i < v.parent().rank(); ++i) {
    if (i) os << ", ";
    os << render_poly(v.component(i));
  }
  return os.str();
}

std::string render_module(const FPModule& M) {
  std::ostringstream os;
  os << "generators: " << render_twists(M.ambient().twists()) << "; relations:";
  if (M.relations().empty()) {
    os << " []";
    return os.str();
  }
  for (size_t k = 0; k < M.relations().size(); ++k) {
    os << (k ? "; " : " ");
    os << render_element(M.relations()[k]);
  }
  return os.str();
}

}  // namespace gmod
