#pragma once

#include <map>
#include <string>
#include <vector>

#include "asw/ratfunc.hpp"

namespace asw {

// Syntax or semantic error in a spec document, with 1-based position.
class parse_error : public std::runtime_error {
public:
    int line, column;
    parse_error(const std::string& msg, int l, int c)
        : std::runtime_error(msg + " (line " + std::to_string(l) + ", column " +
                             std::to_string(c) + ")"),
          line(l),
          column(c) {}
};

// Grammar: integer literals, variables, + - * / ^, parentheses, unary minus.
// `vars` maps the surface spelling (e.g. "t") to the internal variable.
RatFunc parse_expression(const std::string& text, int p,
                         const std::map<std::string, Var>& vars);

// Canonical expression string; re-parses to an equal RatFunc. `names`
// overrides the printed spelling per variable (defaults from var_name).
std::string expr_str(const RatFunc& f, const std::map<Var, std::string>& names = {});
std::string expr_str(const MultiPoly& f, const std::map<Var, std::string>& names = {});

struct CharacterSpec {
    int p = 2;
    int s = 1;
    std::string mode;  // "local" or "global"
    std::vector<std::string> components;
};

// Document format: key = value entries (p, s, mode, components), whitespace
// and newline insensitive; components is a bracketed list of quoted
// expressions. Local expressions use t, x; global use x1, x2.
CharacterSpec parse_spec(const std::string& text);

// Parsed component expressions of a validated spec.
std::vector<RatFunc> spec_components(const CharacterSpec& spec);

}  // namespace asw
