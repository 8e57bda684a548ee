#include "orbitlef/fixtures.h"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "orbitlef/error.h"

#ifndef ORBITLEF_DEFAULT_DATA_DIR
#define ORBITLEF_DEFAULT_DATA_DIR ""
#endif

namespace orbitlef::fix {

Manifest read_manifest(const std::string& data_dir) {
    const std::string path = fixture_path(data_dir, "manifest.json");
    std::ifstream in(path);
    if (!in)
        fail(ErrorKind::FixtureError, "cannot open fixture manifest: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::FixtureError, "bad fixture manifest " + path + ": " + e.what());
    }
    if (!j.is_object() || !j.contains("version") || !j.contains("fixtures"))
        fail(ErrorKind::FixtureError, "fixture manifest needs 'version' and 'fixtures'");
    Manifest m;
    m.version = j.at("version").get<int>();
    for (const auto& e : j.at("fixtures")) {
        FixtureEntry entry;
        entry.name = e.at("name").get<std::string>();
        entry.file = e.at("file").get<std::string>();
        entry.kind = e.at("kind").get<std::string>();
        entry.description = e.value("description", std::string{});
        m.entries.push_back(std::move(entry));
    }
    return m;
}

std::string fixture_path(const std::string& data_dir, const std::string& file) {
    if (data_dir.empty())
        fail(ErrorKind::FixtureError, "empty fixture directory");
    return data_dir.back() == '/' ? data_dir + file : data_dir + "/" + file;
}

const FixtureEntry& find_fixture(const Manifest& m, const std::string& name) {
    for (const auto& e : m.entries)
        if (e.name == name)
            return e;
    fail(ErrorKind::FixtureError, "no fixture named '" + name + "' in the manifest");
}

std::string default_data_dir() {
    return ORBITLEF_DEFAULT_DATA_DIR;
}

} // namespace orbitlef::fix
