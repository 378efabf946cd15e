// corz: exact counts, census sweeps and verification suites for zero entries
// of symmetric-group character tables indexed by ell-cores.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "corz/abacus.hpp"
#include "corz/census.hpp"
#include "corz/numtheory.hpp"
#include "corz/partition.hpp"
#include "corz/verify.hpp"

namespace {

std::string count_value(const std::string& what, int n, int ell) {
  using namespace corz;
  if (what == "p") return to_decimal(count_p(n));
  if (what == "p-regular") return to_decimal(count_p_regular(n, ell));
  if (what == "cores") return to_decimal(count_cores(n, ell));
  if (what == "sigma") return to_decimal(sigma_twisted(n, ell));
  if (what == "delta") return std::to_string(delta_ell(ell));
  if (what == "inv-alpha") return to_decimal(inv_alpha(ell));
  if (what == "n-ell") return std::to_string(n_ell(ell));
  throw std::invalid_argument("unknown quantity " + what);
}

void write_asymptotics(std::ostream& out, int n_min, int n_max, int step, int a) {
  const auto p = corz::partition_counts(n_max);
  const auto pa = corz::regular_partition_counts(n_max, a);
  out << "n,p_n,hr_estimate,hr_ratio,p_A_n,hagis_estimate,hagis_ratio\n";
  out << std::setprecision(12);
  for (int n = std::max(n_min, 1); n <= n_max; n += step) {
    const auto i = static_cast<std::size_t>(n);
    const double pn = p[i].get_d(), pan = pa[i].get_d();
    const double hr = corz::hr_estimate(n), hg = corz::hagis_estimate(n, a);
    out << n << ',' << corz::to_decimal(p[i]) << ',' << hr << ',' << hr / pn << ',' << corz::to_decimal(pa[i])
        << ',' << hg << ',' << hg / pan << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"corz: zeros in symmetric-group character tables with an ell-core index"};
  app.require_subcommand(1);

  // count
  auto* count = app.add_subcommand("count", "Print one exact value");
  std::string what;
  int count_n = 0, count_ell = 5;
  count->add_option("quantity", what, "p | p-regular | cores | sigma | delta | inv-alpha | n-ell")
      ->required()
      ->check(CLI::IsMember({"p", "p-regular", "cores", "sigma", "delta", "inv-alpha", "n-ell"}));
  count->add_option("--n", count_n, "Argument n")->check(CLI::NonNegativeNumber);
  count->add_option("--ell", count_ell, "Prime ell (the modulus A for p-regular)");

  // census
  auto* census = app.add_subcommand("census", "Sweep n and ell, emit CSV or JSON records");
  corz::CensusConfig config;
  std::string format = "csv", out_path;
  std::string cache_dir;
  census->add_option("--ell", config.ells, "Primes ell (repeat or comma-separate)")->delimiter(',');
  census->add_option("--n-min", config.n_min, "Smallest n (>= 1)");
  census->add_option("--n-max", config.n_max, "Largest n");
  census->add_option("--cap-exact", config.cap_exact, "Largest n for exact Z_ell(n)");
  census->add_option("--cap-star", config.cap_star, "Largest n for exact Z*_ell(n)");
  census->add_option("--jobs", config.jobs, "Worker threads")->check(CLI::PositiveNumber);
  census->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  census->add_option("--out", out_path, "Output file (default stdout)");
  census->add_option("--cache-dir", cache_dir, "Column cache directory")->envname("CORZ_CACHE_DIR");

  // verify
  auto* verify = app.add_subcommand("verify", "Run a verification suite, print a JSON report");
  std::string suite;
  int verify_jobs = 1;
  verify->add_option("suite", suite, "theorem2 | lemma1 | closed-forms | orthogonality | abacus | constants")
      ->required();
  verify->add_option("--jobs", verify_jobs, "Worker threads")->check(CLI::PositiveNumber);

  // asymptotics
  auto* asym = app.add_subcommand("asymptotics", "Compare estimates against exact p(n) and p_A(n)");
  int asym_min = 10, asym_max = 500, asym_step = 10, asym_a = 5;
  std::string asym_out;
  asym->add_option("--n-min", asym_min, "Smallest n");
  asym->add_option("--n-max", asym_max, "Largest n");
  asym->add_option("--step", asym_step, "Stride in n")->check(CLI::PositiveNumber);
  asym->add_option("--ell", asym_a, "Modulus A for p_A(n)");
  asym->add_option("--out", asym_out, "Output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*count) {
      std::cout << count_value(what, count_n, count_ell) << '\n';
      return 0;
    }

    auto open_out = [](const std::string& path, std::ofstream& file) -> std::ostream& {
      if (path.empty()) return std::cout;
      file.open(path, std::ios::binary | std::ios::trunc);
      if (!file) throw std::runtime_error("cannot open output path " + path);
      return file;
    };

    if (*census) {
      if (!cache_dir.empty()) config.cache_dir = cache_dir;
      std::ofstream file;
      std::ostream& out = open_out(out_path, file);
      corz::CensusWriter writer(out, format == "json" ? corz::OutputFormat::Json : corz::OutputFormat::Csv);
      corz::run_census(config, [&](const corz::CensusRecord& r) { writer.write(r); });
      writer.finish();
      if (!out) throw std::runtime_error("failed writing output");
      return 0;
    }

    if (*verify) {
      const corz::VerifyReport report = corz::verify(suite, {verify_jobs});
      std::cout << report.to_json() << '\n';
      return report.passed() ? 0 : 1;
    }

    if (*asym) {
      std::ofstream file;
      write_asymptotics(open_out(asym_out, file), asym_min, asym_max, asym_step, asym_a);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "corz: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
