#pragma once

#include "modext/constructions.hpp"

#include <cstdint>

namespace modext {

/// A named, validated module instance together with the construction the
/// corpus intends to exercise on it.
struct Instance {
    std::string name;
    AlgebraicModule module;
};

/// Named base algebras of dimension <= 3 used by the corpus and the CLI.
FiniteAlgebra named_algebra(const std::string& name);
std::vector<std::string> named_algebra_list();

/// Deterministic corpus of validated instances, dimensions <= 3 on both
/// sides. A fixed curated core is always present; the remainder is drawn
/// reproducibly from enumerated lawful families using the seed. Every
/// returned instance passes validate_algebraic_module.
std::vector<Instance> generate_corpus(std::uint64_t seed, std::size_t count = 24);

} // namespace modext
