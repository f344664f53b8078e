#pragma once

#include "modext/instances.hpp"

#include <map>

namespace modext {

/// Malformed definition input. what() carries a JSON-pointer-style path to
/// the offending element.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConstructSpec {
    std::string kind; // bowtie | ltimes | theta_lau | t_lau | direct_sum | self_bowtie
    std::string module; // for bowtie / ltimes
    std::string a, b;   // algebra refs for the two-algebra kinds
    Mat theta;          // 1 x dim(a), theta_lau
    Mat t;              // dim(b) x dim(a), t_lau
};

/// Parsed definition file. Algebra references resolve first against the
/// file's own "algebras" table, then against the built-in named algebras.
struct Definition {
    std::map<std::string, FiniteAlgebra> algebras;
    std::map<std::string, AlgebraicModule> modules;
    std::vector<ConstructSpec> constructs;
};

Definition parse_definition_text(const std::string& text);
Definition load_definition_file(const std::string& path);

FiniteAlgebra resolve_algebra(const Definition& d, const std::string& name);
AlgebraicModule resolve_module(const Definition& d, const std::string& name);
ProductAlgebra build_construct(const Definition& d, const ConstructSpec& c);

} // namespace modext
