#pragma once

#include "dcaudit/domain.hpp"

#include <filesystem>
#include <string>

namespace dcaudit {

/// Loads and validates an inventory JSON document.
/// Throws ParseError (malformed JSON, wrong types, bad enum spellings) or
/// ValidationError (domain invariant broken).
Inventory load_inventory(const std::filesystem::path& path);

/// Same, from an in-memory document.
Inventory parse_inventory(const std::string& json_text);

/// Canonical JSON rendering; parse_inventory(serialize_inventory(i)) == i.
std::string serialize_inventory(const Inventory& inventory);

void write_inventory(const Inventory& inventory, const std::filesystem::path& path);

} // namespace dcaudit
