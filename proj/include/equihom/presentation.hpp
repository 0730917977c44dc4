#pragma once
// JSON presentations of algebras, coalgebras, modules and comodules:
// parsing with located diagnostics, deterministic dumps, and the registry
// of built-in examples.

#include "equihom/ainf.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace equihom {

// Parse or validation failure; the message starts with the input origin and
// the path of the offending element.
struct PresentationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One parsed document. Algebra documents fill only `algebra`; module
// documents inline their algebra and fill `module`; coalgebra documents
// fill `coalgebra`; comodule documents inline their coalgebra and fill
// `comodule`.
struct ParsedInput {
    std::string kind;
    AInfAlgebra algebra;
    std::optional<AInfCoalgebra> coalgebra;
    std::optional<AInfModule> module;
    std::optional<AInfComodule> comodule;
};

// `origin` names the input in diagnostics (a file path or "<arg>").
ParsedInput parse_presentation(const std::string& text, const std::string& origin);
ParsedInput load_presentation(const std::string& path);

// Deterministic pretty JSON (sorted terms, fixed key order, trailing newline).
std::string dump_algebra(const AInfAlgebra& a);
std::string dump_coalgebra(const AInfCoalgebra& c);
std::string dump_module(const AInfModule& m, const AInfAlgebra& a);
std::string dump_comodule(const AInfComodule& n, const AInfCoalgebra& c);

// Built-in examples: an algebra with its trivial left module.
struct ExamplePair {
    AInfAlgebra algebra;
    AInfModule module;
};
std::vector<std::string> example_names();
std::optional<ExamplePair> example_pair(const std::string& name);

} // namespace equihom
