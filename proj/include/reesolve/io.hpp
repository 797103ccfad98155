#pragma once

#include "reesolve/resolution.hpp"

#include <string>

namespace rees {

struct ParseError : std::runtime_error {
    int line, col;
    ParseError(const std::string& msg, int line_, int col_)
        : std::runtime_error(msg + " at line " + std::to_string(line_) + ", column " +
                             std::to_string(col_)),
          line(line_),
          col(col_) {}
};

// Polynomial text: terms like `3/2*x^2*y - y^3 + 1`; `^` for powers, `*`
// optional between a coefficient and a variable, whitespace-insensitive.
Poly parse_poly(const std::string& text, const std::vector<std::string>& vars);

struct DivisorDecl {
    std::string var;
    Rat a;
    bool inD = false;
};

// Text problem file:
//   vars x y;
//   pair gens: x^2+y^3; b: 2;
// or
//   algebra gens: (x^2+y^3, 2), (x*y, 1);
// plus optional
//   divisors: x[a=1/2, D], y[a=0];
//   points: (0,0), (1,-1);
struct ProblemFile {
    std::vector<std::string> vars;
    bool is_pair = true;
    std::vector<Poly> pair_gens;
    int b = 1;
    std::vector<WeightedGen> algebra_gens;
    std::vector<DivisorDecl> divisors;
    std::vector<PointQ> points;

    ReesAlgebra algebra() const;
    MarkedObject marked() const;
};

ProblemFile parse_problem(const std::string& text);
ProblemFile load_problem(const std::string& path);
std::string dump_problem(const ProblemFile& pf);

std::string rat_list(const PointQ& p);
PointQ parse_point(const std::string& text, int dim);

std::string trace_to_json(const ResolutionTrace& tr);

}  // namespace rees
