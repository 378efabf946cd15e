#include "corz/cache.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

#include <boost/crc.hpp>

namespace corz {

namespace {

std::string crc_hex(const std::string& bytes) {
  boost::crc_32_type crc;
  crc.process_bytes(bytes.data(), bytes.size());
  char buf[9];
  std::snprintf(buf, sizeof buf, "%08x", static_cast<unsigned>(crc.checksum()));
  return buf;
}

}  // namespace

ColumnCache::ColumnCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path ColumnCache::path_for(const std::string& kind, int n, int ell) const {
  return dir_ / (kind + "_n" + std::to_string(n) + "_l" + std::to_string(ell) + ".cache");
}

std::string ColumnCache::serialize(const std::string& kind, int n, int ell,
                                   const std::vector<std::uint64_t>& columns) {
  std::ostringstream os;
  os << "corz-column-cache " << kFormatVersion << '\n'
     << "kind " << kind << '\n'
     << "n " << n << '\n'
     << "ell " << ell << '\n'
     << "columns " << columns.size() << '\n';
  for (auto c : columns) os << c << '\n';
  std::string body = os.str();
  return body + "crc32 " + crc_hex(body) + '\n';
}

std::optional<std::vector<std::uint64_t>> ColumnCache::load(const std::string& kind, int n, int ell) const {
  const auto path = path_for(kind, n, ell);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();

  auto corrupt = [&](const std::string& why) {
    return CacheError("corrupt cache file " + path.string() + ": " + why);
  };

  const auto tail = text.rfind("crc32 ");
  if (tail == std::string::npos || text.empty() || text.back() != '\n') throw corrupt("missing checksum line");
  const std::string body = text.substr(0, tail);
  const std::string stored = text.substr(tail + 6, text.size() - tail - 7);
  if (stored != crc_hex(body)) throw corrupt("checksum mismatch");

  std::istringstream is(body);
  std::string tag, got_kind;
  int version = 0, got_n = -1, got_ell = -1;
  std::size_t count = 0;
  if (!(is >> tag >> version) || tag != "corz-column-cache") throw corrupt("bad header");
  if (version != kFormatVersion) throw corrupt("unsupported format version " + std::to_string(version));
  if (!(is >> tag >> got_kind) || tag != "kind" || got_kind != kind) throw corrupt("kind mismatch");
  if (!(is >> tag >> got_n) || tag != "n" || got_n != n) throw corrupt("n mismatch");
  if (!(is >> tag >> got_ell) || tag != "ell" || got_ell != ell) throw corrupt("ell mismatch");
  if (!(is >> tag >> count) || tag != "columns") throw corrupt("missing column count");
  std::vector<std::uint64_t> columns(count);
  for (auto& c : columns)
    if (!(is >> c)) throw corrupt("truncated column data");
  if (is >> tag) throw corrupt("trailing data");
  return columns;
}

void ColumnCache::store(const std::string& kind, int n, int ell, const std::vector<std::uint64_t>& columns) const {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) throw std::runtime_error("cannot create cache directory " + dir_.string() + ": " + ec.message());
  const auto path = path_for(kind, n, ell);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << serialize(kind, n, ell, columns);
    if (!out) throw std::runtime_error("failed writing cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw std::runtime_error("cannot finalize cache file " + path.string() + ": " + ec.message());
}

}  // namespace corz
