#include "weber/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "weber/error.hpp"

namespace weber {

std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv("WEBER_CACHE"); env && *env) return env;
  return ".weber-cache";
}

std::filesystem::path PolyCache::entry_path(const std::string& line, int ell) const {
  return dir_ / ("phi_" + line + "_" + std::to_string(ell) + ".txt");
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IOError("cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw IOError("short write to " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IOError("cannot rename into " + path.string());
  }
}

BiPoly PolyCache::get(const InvariantLine& line, int ell, std::vector<std::string>* warnings) {
  auto warn = [&](const std::string& m) {
    if (warnings) warnings->push_back(m);
  };
  last_hit_ = false;
  if (!enabled_) return generate(line, ell);
  const auto path = entry_path(line.name, ell);
  if (std::filesystem::exists(path)) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
      ParsedPoly parsed = parse_poly_file(ss.str());
      if (parsed.line == line.name && parsed.ell == ell && !parsed.poly.empty()) {
        last_hit_ = true;
        return parsed.poly;
      }
      warn("cache entry " + path.string() + " has mismatched header; regenerating");
    } catch (const IOError& e) {
      warn("corrupt cache entry " + path.string() + " (" + e.what() + "); regenerating");
    }
  }
  BiPoly poly = generate(line, ell);
  try {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) throw IOError("cannot create cache directory " + dir_.string());
    write_file_atomic(path, serialize(poly, line.name, ell));
  } catch (const IOError& e) {
    warn(std::string("cache disabled for this entry: ") + e.what());
  }
  return poly;
}

}  // namespace weber
