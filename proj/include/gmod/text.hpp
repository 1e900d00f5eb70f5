#pragma once

#include <string>
#include <vector>

#include "gmod/fp_module.hpp"

namespace gmod {

/// Parse failure with 1-based location information.
class parse_error : public error {
 public:
  parse_error(const std::string& msg, int line, int column)
      : error(msg + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Canonical polynomial text: descending grevlex terms, least nonnegative
/// coefficients, `*` for products, `^` for powers, e.g. `3*x1^2 + 2*x1*x2`.
std::string render_poly(const Polynomial& f);

/// Accepts the canonical form plus `-` signs and free whitespace.
Polynomial parse_poly(const RingPtr& ring, const std::string& text,
                      int line = 1, int column_offset = 0);

std::string render_twists(const std::vector<int>& twists);

/// Row-major matrix text, rows separated by `;`, entries by `, `.
std::string render_matrix(const FreeMap& f);

/// Canonical module rendering: `generators: [twists]; relations: ...` with
/// one relation per row (entries are the ambient components).
std::string render_module(const FPModule& M);

std::string render_element(const FreeElement& v);

}  // namespace gmod
