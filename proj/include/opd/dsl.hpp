#ifndef OPD_DSL_HPP
#define OPD_DSL_HPP

#include "opd/algcheck.hpp"
#include "opd/quad.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace opd {

struct ParseError : std::runtime_error {
  int line;
  int col;
  ParseError(const std::string& what, int l, int c)
      : std::runtime_error("line " + std::to_string(l) + ", column " + std::to_string(c) + ": " +
                           what),
        line(l),
        col(c) {}
};

struct NamedPresentation {
  std::string name;
  Presentation pres;
};

// Parse a .opd file: one or more "operad NAME { ... }" blocks. '#' starts a
// line comment.
std::vector<NamedPresentation> parse_operads(const std::string& text);

// Canonical printer; parse(print(p)) reproduces the presentation and print is
// a fixed point of print . parse.
std::string print_operad(const std::string& name, const Presentation& p);

struct NamedAlgebra {
  std::string name;
  FinAlgebra alg;
  std::map<std::string, Mat> maps; // named linear operators
};

// Parse an algebra file: "algebra NAME { dim INT; op NAME tensor [...];
// map NAME matrix [...]; }" blocks.
std::vector<NamedAlgebra> parse_algebras(const std::string& text);

} // namespace opd

#endif
