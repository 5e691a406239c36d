#pragma once

#include <map>
#include <optional>
#include <string>

namespace chroma {

// Files under data/ compiled into the library.

// Derivation scripts shipped in data/scripts.
const std::map<std::string, std::string>& shipped_scripts();
std::optional<std::string> shipped_script(const std::string& name);

// Diagram corpus shipped in data/diagrams.
const std::map<std::string, std::string>& shipped_diagrams();
std::optional<std::string> shipped_diagram(const std::string& name);

}  // namespace chroma
