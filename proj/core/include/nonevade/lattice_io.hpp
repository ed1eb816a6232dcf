#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "nonevade/lattice.hpp"

namespace nonevade {

// Cover-list document:
//
//   # comment
//   elements: 1 2 3 4 6 12
//   cover: 1 2
//   cover: 2 4
//
// or the equivalent JSON {"elements": [...], "covers": [[u, v], ...]}.
// The element line fixes the canonical order. Covers may include redundant
// relations; the order is their reflexive-transitive closure.
Lattice parse_lattice(std::string_view text);
Lattice load_lattice(const std::filesystem::path& path);

// Text form with one `cover:` line per cover pair. `comment`, if nonempty,
// is emitted as leading `# ` lines.
std::string format_lattice(const Lattice& lattice, std::string_view comment = {});

nlohmann::json lattice_to_json(const Lattice& lattice);
Lattice lattice_from_json(const nlohmann::json& doc);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace nonevade
