#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "corz/bigint.hpp"
#include "corz/cache.hpp"
#include "corz/partition.hpp"

namespace corz {

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultCapExact = 18;
inline constexpr int kDefaultCapStar = 60;

struct ExactOptions {
  int cap = kDefaultCapExact;
  int jobs = 1;
  const ColumnCache* cache = nullptr;
};

/// (p(n) - p_ell(n)) * c_ell(n)
BigCount z_lower_bound(int n, int ell);

/// Zero entries chi_lam(mu) with lam an ell-core of n and mu any partition of n.
BigCount z_exact(int n, int ell, const ExactOptions& opts = {});
/// Zero entries with both lam and mu ell-cores of n.
BigCount z_star_exact(int n, int ell, const ExactOptions& opts = {.cap = kDefaultCapStar});
/// c_ell(n)^2; throws std::domain_error when n <= N_ell.
BigCount z_star_closed(int n, int ell);
/// Zero entries of the full character table of S_n (cache kind "ztotal", ell 0).
BigCount z_total_exact(int n, const ExactOptions& opts = {});

/// Zero count of each column mu among the given rows, using quick_vanish first.
std::vector<std::uint64_t> column_zero_counts(const std::vector<Partition>& rows,
                                              const std::vector<Partition>& columns, int jobs);

struct CensusRecord {
  int n = 0;
  int ell = 0;
  BigCount p_n, p_ell_n, c_ell_n, z_lower;
  std::optional<BigCount> z_exact, z_star_exact, z_star_closed;
  // alpha_ell * sigma_ell(n + delta_ell) * p(n), reduced; only for primes ell >= 5
  std::optional<BigCount> main_term_num, main_term_den;
};

struct CensusConfig {
  std::vector<int> ells{2, 3, 5};
  int n_min = 1;
  int n_max = 14;
  int cap_exact = kDefaultCapExact;
  int cap_star = kDefaultCapStar;
  int jobs = 1;
  std::optional<std::filesystem::path> cache_dir;
};

/// Records in (n, ell) order; ells are sorted and deduplicated. Throws
/// std::invalid_argument on a bad config.
void run_census(const CensusConfig& config, const std::function<void(const CensusRecord&)>& sink);
std::vector<CensusRecord> run_census(const CensusConfig& config);

enum class OutputFormat { Csv, Json };

inline constexpr const char* kCsvHeader =
    "n,ell,p_n,p_ell_n,c_ell_n,z_lower,z_exact,z_star_exact,z_star_closed,main_term_num,main_term_den";

/// Streams records as CSV (header first) or as a JSON array with one object per line.
class CensusWriter {
 public:
  CensusWriter(std::ostream& out, OutputFormat format);
  ~CensusWriter();
  CensusWriter(const CensusWriter&) = delete;
  CensusWriter& operator=(const CensusWriter&) = delete;

  void write(const CensusRecord& record);
  /// Closes the JSON array; idempotent. Called by the destructor if needed.
  void finish();

 private:
  std::ostream& out_;
  OutputFormat format_;
  std::size_t written_ = 0;
  bool finished_ = false;
};

std::string to_csv_row(const CensusRecord& record);
std::string to_json_line(const CensusRecord& record);

}  // namespace corz
