#include "corz/census.hpp"

#include <algorithm>
#include <set>

#include <nlohmann/json.hpp>

#include "corz/abacus.hpp"
#include "corz/characters.hpp"
#include "corz/numtheory.hpp"
#include "corz/parallel.hpp"

namespace corz {

namespace {

void require_positive_n(int n, const char* who) {
  if (n < 1) throw std::invalid_argument(std::string(who) + ": n must be positive");
}

void check_cap(int n, int cap, const char* flag) {
  if (n > cap)
    throw CapExceeded("exact census cap exceeded: n = " + std::to_string(n) + " > cap " + std::to_string(cap) +
                      " (raise it with " + flag + ")");
}

BigCount cached_zero_total(const std::string& kind, int n, int ell, const std::vector<Partition>& rows,
                           const std::vector<Partition>& columns, const ExactOptions& opts) {
  std::optional<std::vector<std::uint64_t>> counts;
  if (opts.cache) {
    counts = opts.cache->load(kind, n, ell);
    if (counts && counts->size() != columns.size())
      throw CacheError("corrupt cache file " + opts.cache->path_for(kind, n, ell).string() + ": column count mismatch");
  }
  if (!counts) {
    counts = column_zero_counts(rows, columns, opts.jobs);
    if (opts.cache) opts.cache->store(kind, n, ell, *counts);
  }
  BigCount total = 0;
  for (auto c : *counts) total += static_cast<unsigned long>(c);
  return total;
}

}  // namespace

BigCount z_lower_bound(int n, int ell) {
  require_positive_n(n, "z_lower_bound");
  return (count_p(n) - count_p_regular(n, ell)) * count_cores(n, ell);
}

std::vector<std::uint64_t> column_zero_counts(const std::vector<Partition>& rows,
                                              const std::vector<Partition>& columns, int jobs) {
  std::vector<HookMultiset> hooks;
  hooks.reserve(rows.size());
  for (const auto& lam : rows) hooks.push_back(hook_multiset(lam));

  std::vector<std::uint64_t> zeros(columns.size(), 0);
  parallel_for(columns.size(), jobs, [&](std::size_t c) {
    MnEvaluator eval(columns[c]);
    std::uint64_t count = 0;
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (quick_vanish(hooks[r], columns[c]) || eval(rows[r]) == 0) ++count;
    zeros[c] = count;
  });
  return zeros;
}

BigCount z_exact(int n, int ell, const ExactOptions& opts) {
  require_positive_n(n, "z_exact");
  check_cap(n, opts.cap, "--cap-exact");
  return cached_zero_total("zexact", n, ell, enumerate_cores(n, ell), enumerate_partitions(n), opts);
}

BigCount z_star_exact(int n, int ell, const ExactOptions& opts) {
  require_positive_n(n, "z_star_exact");
  check_cap(n, opts.cap, "--cap-star");
  const auto cores = enumerate_cores(n, ell);
  return cached_zero_total("zstar", n, ell, cores, cores, opts);
}

BigCount z_star_closed(int n, int ell) {
  require_positive_n(n, "z_star_closed");
  if (n <= n_ell(ell)) throw std::domain_error("closed form valid only above N_ell = " + std::to_string(n_ell(ell)));
  const BigCount c = count_cores(n, ell);
  return c * c;
}

BigCount z_total_exact(int n, const ExactOptions& opts) {
  require_positive_n(n, "z_total_exact");
  check_cap(n, opts.cap, "--cap-exact");
  const auto all = enumerate_partitions(n);
  return cached_zero_total("ztotal", n, 0, all, all, opts);
}

void run_census(const CensusConfig& config, const std::function<void(const CensusRecord&)>& sink) {
  if (config.n_min < 1) throw std::invalid_argument("census: --n-min must be >= 1");
  if (config.jobs < 1) throw std::invalid_argument("census: --jobs must be >= 1");
  const std::set<int> ells(config.ells.begin(), config.ells.end());
  for (int ell : ells)
    if (!is_prime(ell)) throw std::invalid_argument("census: ell must be prime, got " + std::to_string(ell));
  if (config.n_max < config.n_min) return;

  std::optional<ColumnCache> cache;
  if (config.cache_dir) cache.emplace(*config.cache_dir);

  const auto p = partition_counts(config.n_max);
  struct PerEll {
    int ell;
    std::vector<BigCount> regular, cores;
    std::int64_t threshold;
    std::optional<BigCount> inv_alpha;
  };
  std::vector<PerEll> tables;
  for (int ell : ells) {
    PerEll t{ell, regular_partition_counts(config.n_max, ell), core_counts(config.n_max, ell), n_ell(ell), {}};
    if (ell >= 5) t.inv_alpha = inv_alpha(ell);
    tables.push_back(std::move(t));
  }

  const ExactOptions exact_opts{config.cap_exact, config.jobs, cache ? &*cache : nullptr};
  const ExactOptions star_opts{config.cap_star, config.jobs, cache ? &*cache : nullptr};
  for (int n = config.n_min; n <= config.n_max; ++n) {
    const auto idx = static_cast<std::size_t>(n);
    for (const PerEll& t : tables) {
      CensusRecord rec;
      rec.n = n;
      rec.ell = t.ell;
      rec.p_n = p[idx];
      rec.p_ell_n = t.regular[idx];
      rec.c_ell_n = t.cores[idx];
      rec.z_lower = (rec.p_n - rec.p_ell_n) * rec.c_ell_n;
      if (n <= config.cap_exact) rec.z_exact = z_exact(n, t.ell, exact_opts);
      if (n <= config.cap_star) rec.z_star_exact = z_star_exact(n, t.ell, star_opts);
      if (n > t.threshold) rec.z_star_closed = rec.c_ell_n * rec.c_ell_n;
      if (t.inv_alpha) {
        Rational main(sigma_twisted(n + delta_ell(t.ell), t.ell) * rec.p_n, *t.inv_alpha);
        main.canonicalize();
        rec.main_term_num = main.get_num();
        rec.main_term_den = main.get_den();
      }
      if (rec.z_exact && *rec.z_exact < rec.z_lower)
        throw std::logic_error("census invariant violated: z_exact < z_lower at n = " + std::to_string(n));
      sink(rec);
    }
  }
}

std::vector<CensusRecord> run_census(const CensusConfig& config) {
  std::vector<CensusRecord> out;
  run_census(config, [&](const CensusRecord& r) { out.push_back(r); });
  return out;
}

std::string to_csv_row(const CensusRecord& r) {
  auto opt = [](const std::optional<BigCount>& v) { return v ? to_decimal(*v) : std::string(); };
  std::string row = std::to_string(r.n) + ',' + std::to_string(r.ell);
  for (const BigCount* v : {&r.p_n, &r.p_ell_n, &r.c_ell_n, &r.z_lower}) row += ',' + to_decimal(*v);
  for (const auto* v : {&r.z_exact, &r.z_star_exact, &r.z_star_closed, &r.main_term_num, &r.main_term_den})
    row += ',' + opt(*v);
  return row;
}

std::string to_json_line(const CensusRecord& r) {
  auto opt = [](const std::optional<BigCount>& v) -> nlohmann::ordered_json {
    return v ? nlohmann::ordered_json(to_decimal(*v)) : nlohmann::ordered_json(nullptr);
  };
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["ell"] = r.ell;
  j["p_n"] = to_decimal(r.p_n);
  j["p_ell_n"] = to_decimal(r.p_ell_n);
  j["c_ell_n"] = to_decimal(r.c_ell_n);
  j["z_lower"] = to_decimal(r.z_lower);
  j["z_exact"] = opt(r.z_exact);
  j["z_star_exact"] = opt(r.z_star_exact);
  j["z_star_closed"] = opt(r.z_star_closed);
  j["main_term_num"] = opt(r.main_term_num);
  j["main_term_den"] = opt(r.main_term_den);
  return j.dump();
}

CensusWriter::CensusWriter(std::ostream& out, OutputFormat format) : out_(out), format_(format) {
  if (format_ == OutputFormat::Csv)
    out_ << kCsvHeader << '\n';
  else
    out_ << '[';
}

CensusWriter::~CensusWriter() {
  try {
    finish();
  } catch (...) {
  }
}

void CensusWriter::write(const CensusRecord& record) {
  if (format_ == OutputFormat::Csv) {
    out_ << to_csv_row(record) << '\n';
  } else {
    out_ << (written_ ? ",\n" : "\n") << to_json_line(record);
  }
  ++written_;
}

void CensusWriter::finish() {
  if (finished_) return;
  finished_ = true;
  if (format_ == OutputFormat::Json) out_ << (written_ ? "\n]\n" : "]\n");
  out_.flush();
}

}  // namespace corz
