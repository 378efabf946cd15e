#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace corz {

class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// On-disk store of per-column zero counts, one text file per (kind, n, ell):
///
///   corz-column-cache 1
///   kind <kind>
///   n <n>
///   ell <ell>
///   columns <count>
///   <one count per line>
///   crc32 <8 lowercase hex digits over every preceding byte>
///
/// A missing file is a miss; a file that fails to parse or verify is a CacheError.
class ColumnCache {
 public:
  static constexpr int kFormatVersion = 1;

  explicit ColumnCache(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(const std::string& kind, int n, int ell) const;

  std::optional<std::vector<std::uint64_t>> load(const std::string& kind, int n, int ell) const;
  void store(const std::string& kind, int n, int ell, const std::vector<std::uint64_t>& columns) const;

  static std::string serialize(const std::string& kind, int n, int ell, const std::vector<std::uint64_t>& columns);

 private:
  std::filesystem::path dir_;
};

}  // namespace corz
