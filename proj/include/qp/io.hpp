#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "qp/function.hpp"
#include "qp/poly.hpp"

namespace qp {

/// Malformed input; line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& reason, int line, int column);
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

// Function table document:
//   qpf 1
//   chain <m> arity <n>
//   <m^n values in point_index order>
std::string serialize(const DiscreteFunction& f);
DiscreteFunction parse_function(std::string_view text);

// Set function document (values by coordinate-subset bitmask, bit i for
// coordinate i+1, masks ascending):
//   qsf 1
//   arity <n> chain <m>
//   <2^n values>
std::string serialize(const SetFunction& alpha);
SetFunction parse_set_function(std::string_view text);

// Unary map document:
//   qum 1
//   chain <m>
//   <m values>
std::string serialize(const UnaryMap& phi);
UnaryMap parse_unary_map(std::string_view text);

/// Reads a whole file; failures mention the path.
std::string read_file(const std::string& path);

DiscreteFunction load_function(const std::string& path);
SetFunction load_set_function(const std::string& path);
UnaryMap load_unary_map(const std::string& path);

}  // namespace qp
