#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "idp/instance.hpp"
#include "idp/solution.hpp"

namespace idp {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, std::string reason);

  int line() const { return line_; }
  const std::string& reason() const { return reason_; }

 private:
  int line_;
  std::string reason_;
};

// Instance text:
//   idp <interval|circular> n=<n> k=<k>
//   v <id> <l> <r>        (n lines)
//   p <s-id> <t-id> <r>   (k lines)
// Blank lines and lines starting with '#' are ignored. The result is
// validated; any defect is reported against the line that caused it.
Instance parse_instance(std::string_view text);
std::string emit_instance(const Instance& inst);

// Solution text: "yes" then "path <pair> <id>..." lines (pairs 1-based),
// or "no" optionally followed by "step=<step> detail=<detail>".
Outcome parse_solution(std::string_view text, const Instance& inst);
std::string emit_solution(const Instance& inst, const Outcome& outcome,
                          bool certify);

std::string read_file(const std::string& path);

}  // namespace idp
