#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "weber/modpoly.hpp"

namespace weber {

/// --cache-dir, else $WEBER_CACHE, else ./.weber-cache.
std::filesystem::path default_cache_dir();

/// On-disk store of generated modular polynomials, one text file per
/// (line, ell). Writes go to a temporary file that is renamed into place.
class PolyCache {
 public:
  explicit PolyCache(std::filesystem::path dir, bool enabled = true) : dir_(std::move(dir)), enabled_(enabled) {}

  const std::filesystem::path& dir() const { return dir_; }
  bool enabled() const { return enabled_; }
  std::filesystem::path entry_path(const std::string& line, int ell) const;

  /// Cached polynomial, or generate() and store it. Corrupt entries are
  /// regenerated; unwritable directories fall back to no caching. Both
  /// append a message to `warnings`.
  BiPoly get(const InvariantLine& line, int ell, std::vector<std::string>* warnings = nullptr);
  /// True if the last get() was served from disk.
  bool last_hit() const { return last_hit_; }

 private:
  std::filesystem::path dir_;
  bool enabled_;
  bool last_hit_ = false;
};

/// Atomic text write (temp file + rename). Throws IOError.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace weber
