#pragma once

#include <string>
#include <vector>

namespace orbitlef::fix {

struct FixtureEntry {
    std::string name; // short handle used by CLI lookups
    std::string file;
    std::string kind; // "diamond" or "ideal"
    std::string description;
};

struct Manifest {
    int version = 0;
    std::vector<FixtureEntry> entries;
};

// Reads and validates <data_dir>/manifest.json.
Manifest read_manifest(const std::string& data_dir);

std::string fixture_path(const std::string& data_dir, const std::string& file);

// Lookup by name; throws FixtureError when absent.
const FixtureEntry& find_fixture(const Manifest& m, const std::string& name);

// Data directory baked in at build time (the shipped fixture set).
std::string default_data_dir();

} // namespace orbitlef::fix
