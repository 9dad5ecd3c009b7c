#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "blaschke_lab/config.hpp"
#include "blaschke_lab/nrange.hpp"

namespace blaschke_lab {

namespace exit_code {
inline constexpr int pass = 0;
inline constexpr int usage = 2;
inline constexpr int below_half = 3;
}  // namespace exit_code

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// "a+bi", "0.5", "-0.2i", "i", "1e-3-2e-1i".
cplx parse_complex(const std::string& s);
/// Comma-separated complex literals without spaces; the empty string is an empty list.
std::vector<cplx> parse_zero_list(const std::string& s);

/// 17 significant digits.
std::string format_double(double x);
std::string format_complex(cplx z);

/// Quotes a CSV field when it contains a comma, quote or line break.
std::string csv_field(const std::string& s);

/// SVG 1.1 document with a fixed 1000x1000 viewBox covering [-1.05, 1.05]^2.
class SvgCanvas {
 public:
  void polyline(const std::vector<cplx>& pts, const std::string& color, bool closed, double width = 2.0);
  void points(const std::vector<cplx>& pts, const std::string& color, double radius = 1.5);
  void unit_circle();
  std::string str() const;

 private:
  std::vector<std::string> items_;
};

struct SearchConfig {
  int trials = 1000;
  std::uint64_t seed = 1;
  int deg_b_min = 1;
  int deg_b_max = 5;
  int deg_theta_min = 2;
  int deg_theta_max = 6;
  double rho_max = 0.98;
  int directions = 720;
  int workers = 1;
  Tolerances tol{};
};

struct SearchRecord {
  int index = 0;
  std::uint64_t seed = 0;
  std::vector<cplx> b_zeros;
  cplx b_lambda{1.0, 0.0};
  std::vector<cplx> theta_zeros;
  LscVerdict verdict;
  std::string timestamp;
  double wall_seconds = 0.0;
  std::optional<std::string> error;
};

struct SearchSummary {
  int trials = 0;
  int failures = 0;
  double min_value = 0.0;
  std::optional<SearchRecord> min_record;
  std::vector<double> bin_edges;  // histogram of max_value, bins [e_k, e_{k+1})
  std::vector<int> bin_counts;
  int below_threshold = 0;        // max_value < 1/2 - 1e-6
};

/// Seed of trial `index` derived from the run seed.
std::uint64_t trial_seed(std::uint64_t base, int index);

/// One randomized LSC trial: degrees, zeros (uniform in the disk of radius rho_max) and prefactor
/// are drawn from trial_seed(cfg.seed, index).
SearchRecord run_trial(const SearchConfig& cfg, int index);

/// Runs all trials on cfg.workers threads; records reach `ledger` (if any) in trial order.
SearchSummary run_search(const SearchConfig& cfg, std::ostream* ledger);

/// JSON line of a record (no trailing newline).
std::string record_json(const SearchRecord& r, bool with_timing = true);

/// Entry point of the blaschke-lab executable.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace blaschke_lab
