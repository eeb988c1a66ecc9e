#pragma once

#include "clic/io.hpp"

#include <filesystem>
#include <string>

namespace fixtures {

inline std::filesystem::path dir() { return CLIC_FIXTURE_DIR; }
inline std::filesystem::path data_dir() { return CLIC_DATA_DIR; }

inline std::string path(const std::string& name) { return (dir() / name).string(); }
inline std::string read(const std::string& name) { return clic::read_file(dir() / name); }

inline clic::Portfolio portfolio(const std::string& name) { return clic::load_portfolio(read(name)); }

} // namespace fixtures
