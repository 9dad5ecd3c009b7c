#include "blaschke_lab/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <condition_variable>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <memory>
#include <mutex>
#include <numbers>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "blaschke_lab/blaschke.hpp"
#include "blaschke_lab/hypgeo.hpp"
#include "blaschke_lab/interp.hpp"
#include "blaschke_lab/modelspace.hpp"
#include "blaschke_lab/unicrit.hpp"

namespace blaschke_lab {

using json = nlohmann::json;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double parse_real(const std::string& s, const std::string& whole) {
  if (s.empty() || s == "+") return 1.0;
  if (s == "-") return -1.0;
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw UsageError("malformed complex literal '" + whole + "'");
  }
  if (used != s.size() || !std::isfinite(v)) throw UsageError("malformed complex literal '" + whole + "'");
  return v;
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t tt = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&tt, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

json zeros_json(const std::vector<cplx>& zs) {
  json a = json::array();
  for (const cplx& z : zs) a.push_back(complex_json(z));
  return a;
}

std::string join_zeros(const std::vector<cplx>& zs) {
  std::string s;
  for (std::size_t k = 0; k < zs.size(); ++k) s += (k ? "," : "") + format_complex(zs[k]);
  return s;
}

// Output sink: stdout for "" or "-", otherwise a file that must open.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback, std::ios::openmode mode = std::ios::out) {
    if (path.empty() || path == "-") {
      os_ = &fallback;
      return;
    }
    file_ = std::make_unique<std::ofstream>(path, mode);
    if (!*file_) throw UsageError("cannot write to '" + path + "'");
    os_ = file_.get();
  }
  std::ostream& operator*() { return *os_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* os_ = nullptr;
};

void write_svg(const std::string& path, const SvgCanvas& svg) {
  if (path.empty()) return;
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write to '" + path + "'");
  f << svg.str();
}

std::vector<cplx> boundary_of(const SupportTable& t) { return t.witnesses; }

json verdict_json(const LscVerdict& v) {
  return {{"max_value", v.max_value},   {"argmax", complex_json(v.argmax)},
          {"passed", v.passed},         {"slack", v.slack},
          {"directions", v.directions}, {"doubled", v.doubled},
          {"half_grid_estimate", v.half_grid_estimate}};
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

cplx parse_complex(const std::string& s) {
  if (s.empty()) throw UsageError("empty complex literal");
  if (s.back() != 'i') return parse_real(s, s);
  const std::string body = s.substr(0, s.size() - 1);
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return {0.0, parse_real(body, s)};
  const std::string re = body.substr(0, split);
  if (re.empty() || re == "+" || re == "-") throw UsageError("malformed complex literal '" + s + "'");
  return {parse_real(re, s), parse_real(body.substr(split), s)};
}

std::vector<cplx> parse_zero_list(const std::string& s) {
  std::vector<cplx> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = s.find(',', start);
    const std::string item = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (item.find_first_of(" \t") != std::string::npos) throw UsageError("spaces are not allowed in zero lists");
    out.push_back(parse_complex(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string format_double(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

std::string format_complex(cplx z) {
  std::string s = format_double(z.real());
  if (z.imag() != 0.0) s += (z.imag() < 0.0 || std::signbit(z.imag()) ? "" : "+") + format_double(z.imag()) + "i";
  return s;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

// ---------------------------------------------------------------------------
// SVG

namespace {
double px(double x) { return (x + 1.05) / 2.1 * 1000.0; }
double py(double y) { return (1.05 - y) / 2.1 * 1000.0; }
std::string coord(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << v;
  return os.str();
}
}  // namespace

void SvgCanvas::polyline(const std::vector<cplx>& pts, const std::string& color, bool closed, double width) {
  std::string s = closed ? "<polygon" : "<polyline";
  s += " fill=\"none\" stroke=\"" + color + "\" stroke-width=\"" + coord(width) + "\" points=\"";
  for (std::size_t k = 0; k < pts.size(); ++k)
    s += (k ? " " : "") + coord(px(pts[k].real())) + "," + coord(py(pts[k].imag()));
  s += "\"/>";
  items_.push_back(std::move(s));
}

void SvgCanvas::points(const std::vector<cplx>& pts, const std::string& color, double radius) {
  for (const cplx& p : pts)
    items_.push_back("<circle cx=\"" + coord(px(p.real())) + "\" cy=\"" + coord(py(p.imag())) + "\" r=\"" +
                     coord(radius) + "\" fill=\"" + color + "\"/>");
}

void SvgCanvas::unit_circle() {
  items_.push_back("<circle cx=\"500.000\" cy=\"500.000\" r=\"" + coord(1000.0 / 2.1) +
                   "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.000\"/>");
}

std::string SvgCanvas::str() const {
  std::string s =
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"1000\" height=\"1000\" "
      "viewBox=\"0 0 1000 1000\">\n"
      "<rect width=\"1000\" height=\"1000\" fill=\"white\"/>\n";
  for (const auto& it : items_) s += it + "\n";
  return s + "</svg>\n";
}

// ---------------------------------------------------------------------------
// Search harness

std::uint64_t trial_seed(std::uint64_t base, int index) {
  return splitmix64(splitmix64(base) ^ static_cast<std::uint64_t>(index));
}

SearchRecord run_trial(const SearchConfig& cfg, int index) {
  const auto t0 = std::chrono::steady_clock::now();
  SearchRecord r;
  r.index = index;
  r.seed = trial_seed(cfg.seed, index);
  std::mt19937_64 rng(r.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto draw = [&]() { return std::polar(cfg.rho_max * std::sqrt(unit(rng)), kTwoPi * unit(rng)); };

  const int dt = pick(std::max({2, cfg.deg_theta_min, cfg.deg_b_min + 1}), cfg.deg_theta_max);
  const int db = pick(std::max(1, cfg.deg_b_min), std::min(cfg.deg_b_max, dt - 1));
  for (int k = 0; k < dt; ++k) r.theta_zeros.push_back(draw());
  for (int k = 0; k < db; ++k) r.b_zeros.push_back(draw());
  r.b_lambda = std::polar(1.0, kTwoPi * unit(rng));
  r.timestamp = utc_timestamp();
  try {
    LscConfig lc;
    lc.directions = cfg.directions;
    lc.tol = cfg.tol;
    const BlaschkeProduct b(r.b_zeros, r.b_lambda, cfg.tol);
    const BlaschkeProduct theta(r.theta_zeros, 1.0, cfg.tol);
    r.verdict = lsc_check(b, theta, lc);
    if (!r.verdict.passed) {
      lc.directions *= 2;
      const LscVerdict again = lsc_check(b, theta, lc);
      if (again.max_value > r.verdict.max_value) r.verdict = again;
    }
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::string record_json(const SearchRecord& r, bool with_timing) {
  json j = {{"index", r.index},
            {"seed", r.seed},
            {"b", {{"zeros", zeros_json(r.b_zeros)}, {"lambda", complex_json(r.b_lambda)}}},
            {"theta", {{"zeros", zeros_json(r.theta_zeros)}, {"lambda", complex_json(1.0)}}}};
  if (r.error) {
    j["error"] = *r.error;
  } else {
    j["max_value"] = r.verdict.max_value;
    j["argmax"] = complex_json(r.verdict.argmax);
    j["passed"] = r.verdict.passed;
    j["grid"] = {{"directions", r.verdict.directions},
                 {"doubled", r.verdict.doubled},
                 {"half_grid_estimate", r.verdict.half_grid_estimate}};
  }
  if (with_timing) {
    j["timestamp"] = r.timestamp;
    j["wall_seconds"] = r.wall_seconds;
  }
  return j.dump();
}

SearchSummary run_search(const SearchConfig& cfg, std::ostream* ledger) {
  if (cfg.trials < 0) throw UsageError("search: trial count must be non-negative");
  if (cfg.deg_theta_max < 2 || cfg.deg_theta_min > cfg.deg_theta_max)
    throw UsageError("search: need 2 <= deg Theta range and min <= max");
  if (cfg.deg_b_min < 1 || cfg.deg_b_min > cfg.deg_b_max || cfg.deg_b_min >= cfg.deg_theta_max)
    throw UsageError("search: need 1 <= deg B < deg Theta");
  if (!(cfg.rho_max > 0.0 && cfg.rho_max < 1.0)) throw UsageError("search: rho_max must lie in (0, 1)");

  SearchSummary s;
  s.trials = cfg.trials;
  s.min_value = std::numeric_limits<double>::infinity();
  for (int k = 0; k <= 10; ++k) s.bin_edges.push_back(0.5 + 0.05 * k);
  s.bin_counts.assign(s.bin_edges.size() + 1, 0);  // first bin is below 1/2, last is >= 1

  std::vector<std::optional<SearchRecord>> slots(cfg.trials);
  std::mutex mu;
  std::condition_variable cv;
  std::atomic<int> next{0};
  const int nworkers = std::max(1, std::min(cfg.workers, cfg.trials));
  std::vector<std::thread> pool;
  for (int w = 0; w < nworkers; ++w)
    pool.emplace_back([&] {
      for (int i = next++; i < cfg.trials; i = next++) {
        SearchRecord rec = run_trial(cfg, i);
        {
          std::lock_guard<std::mutex> lock(mu);
          slots[i] = std::move(rec);
        }
        cv.notify_one();
      }
    });

  // Single consumer: records leave in trial order.
  for (int i = 0; i < cfg.trials; ++i) {
    SearchRecord rec;
    {
      std::unique_lock<std::mutex> lock(mu);
      cv.wait(lock, [&] { return slots[i].has_value(); });
      rec = std::move(*slots[i]);
      slots[i].reset();
    }
    if (ledger) *ledger << record_json(rec) << '\n';
    if (rec.error) {
      ++s.failures;
      continue;
    }
    const double v = rec.verdict.max_value;
    if (v < 0.5 - 1e-6) ++s.below_threshold;
    std::size_t bin = 0;
    while (bin < s.bin_edges.size() && v >= s.bin_edges[bin]) ++bin;
    ++s.bin_counts[bin];
    if (v < s.min_value) {
      s.min_value = v;
      s.min_record = rec;
    }
  }
  for (auto& t : pool) t.join();
  if (ledger) ledger->flush();
  return s;
}

// ---------------------------------------------------------------------------
// Subcommands

namespace {

struct Common {
  std::string out_path;
  std::string svg_path;
};

int cmd_lsc(const std::string& bs, const std::string& ts, cplx lam, int dirs, bool as_json, std::ostream& out,
            const Tolerances& tol) {
  const BlaschkeProduct b(parse_zero_list(bs), lam, tol);
  const BlaschkeProduct theta(parse_zero_list(ts), 1.0, tol);
  if (b.degree() >= theta.degree()) throw UsageError("lsc: requires deg B < deg Theta");
  LscConfig cfg;
  cfg.directions = dirs;
  cfg.slack = tol.lsc_slack;
  cfg.tol = tol;
  LscVerdict v = lsc_check(b, theta, cfg);
  bool reverified = false;
  if (!v.passed) {
    cfg.directions = 2 * v.directions;
    const LscVerdict again = lsc_check(b, theta, cfg);
    reverified = true;
    if (again.max_value > v.max_value) v = again;
  }
  if (as_json) {
    json j = verdict_json(v);
    j["reverified"] = reverified;
    out << j.dump() << '\n';
  } else {
    out << "max_value " << format_double(v.max_value) << '\n'
        << "argmax " << format_complex(v.argmax) << '\n'
        << "directions " << v.directions << (v.doubled ? " (doubled)" : "") << '\n'
        << (v.passed ? "PASS" : "BELOW 1/2 (re-verified on doubled grid)") << '\n';
  }
  return v.passed ? exit_code::pass : exit_code::below_half;
}

int cmd_nrange(const std::string& ts, int dirs, const Common& c, std::ostream& out, const Tolerances& tol) {
  const BlaschkeProduct theta(parse_zero_list(ts), 1.0, tol);
  if (theta.degree() < 1) throw UsageError("nrange: Theta needs at least one zero");
  const SupportTable t = support_table(tmw_matrix(theta).matrix, dirs, tol);
  Sink sink(c.out_path, out);
  *sink << "theta,h,x,y\n";
  for (std::size_t k = 0; k < t.size(); ++k)
    *sink << format_double(t.thetas[k]) << ',' << format_double(t.h[k]) << ',' << format_double(t.witnesses[k].real())
          << ',' << format_double(t.witnesses[k].imag()) << '\n';
  if (!c.svg_path.empty()) {
    SvgCanvas svg;
    svg.unit_circle();
    svg.polyline(boundary_of(t), "#1f77b4", true);
    svg.points(theta.zeros(), "#d62728", 4.0);
    write_svg(c.svg_path, svg);
  }
  return exit_code::pass;
}

int cmd_curve(int n, double t, int samples, const Common& c, std::ostream& out, const Tolerances& tol) {
  if (samples < 1) throw UsageError("curve: samples must be positive");
  const CurveSpec spec(n, t);
  Sink sink(c.out_path, out);
  *sink << "s,x,y\n";
  std::vector<cplx> pts;
  for (int k = 0; k < samples; ++k) {
    const double s = kTwoPi * k / samples;
    const cplx z = curve_point(spec, s);
    pts.push_back(z);
    *sink << format_double(s) << ',' << format_double(z.real()) << ',' << format_double(z.imag()) << '\n';
  }
  if (!c.svg_path.empty()) {
    SvgCanvas svg;
    svg.unit_circle();
    svg.polyline(boundary_of(support_table(kms_matrix(n, t), 720, tol)), "#1f77b4", true);
    svg.polyline(pts, "#ff7f0e", true);
    svg.points({curve_center(spec)}, "#2ca02c", 4.0);
    write_svg(c.svg_path, svg);
  }
  return exit_code::pass;
}

int cmd_levelset(const std::string& bs, cplx lam, double r, int res, const Common& c, std::ostream& out,
                 std::ostream& err, const Tolerances& tol) {
  if (!(r > 0.0 && r < 1.0)) throw UsageError("levelset: r must lie in (0, 1)");
  if (res < 16) throw UsageError("levelset: resolution must be at least 16");
  const BlaschkeProduct b(parse_zero_list(bs), lam, tol);
  if (b.degree() < 1) throw UsageError("levelset: B needs at least one zero");
  const LevelSetReport rep = level_component_count(b, r, tol);
  const GridLabeling grid = level_components_grid(b, r, res);
  err << "components " << rep.component_count << " (grid " << grid.component_count << ")"
      << (rep.near_critical_value ? " near a critical value" : "") << '\n';

  // Level curve |B| = r: midpoints of grid edges where |B| - r changes sign.
  std::vector<cplx> curve;
  const double h = 2.0 / (res - 1);
  auto val = [&](int i, int j) {
    const cplx z{-1.0 + i * h, -1.0 + j * h};
    return std::abs(z) < 1.0 ? std::abs(b.eval_unchecked(z)) - r : 1.0;
  };
  for (int j = 0; j < res; ++j)
    for (int i = 0; i < res; ++i) {
      const double v = val(i, j);
      if (i + 1 < res && (v < 0.0) != (val(i + 1, j) < 0.0)) curve.emplace_back(-1.0 + (i + 0.5) * h, -1.0 + j * h);
      if (j + 1 < res && (v < 0.0) != (val(i, j + 1) < 0.0)) curve.emplace_back(-1.0 + i * h, -1.0 + (j + 0.5) * h);
    }
  Sink sink(c.out_path, out);
  *sink << "x,y\n";
  for (const cplx& z : curve) *sink << format_double(z.real()) << ',' << format_double(z.imag()) << '\n';
  if (!c.svg_path.empty()) {
    SvgCanvas svg;
    svg.unit_circle();
    svg.points(curve, "#9467bd", 1.0);
    svg.points(b.zeros(), "#d62728", 4.0);
    std::vector<cplx> crit;
    for (const auto& cv : rep.critical_inside) crit.push_back(cv.point);
    svg.points(crit, "#2ca02c", 4.0);
    write_svg(c.svg_path, svg);
  }
  return exit_code::pass;
}

int cmd_kappa(int n, double lo, double hi, double step, const Common& c, std::ostream& out, std::ostream& err) {
  const KappaSweep sw = kappa_sweep(n, t_grid(lo, hi, step));
  Sink sink(c.out_path, out);
  *sink << "t,kappa\n";
  for (const auto& row : sw.rows) *sink << format_double(row.t) << ',' << format_double(row.kappa) << '\n';
  for (const auto& [a, b] : sw.crossings)
    err << "kappa crosses 2 between t=" << format_double(a) << " and t=" << format_double(b) << '\n';
  err << "max kappa " << format_double(sw.max_kappa) << " at t=" << format_double(sw.argmax_t) << '\n';
  return exit_code::pass;
}

int cmd_disks(const std::string& mode, const std::string& center, double radius, std::ostream& out) {
  const cplx z = parse_complex(center);
  json j;
  if (mode == "ph2e") {
    const EDisk d = ph_to_euclid({z, radius});
    j = {{"center", complex_json(d.c)}, {"radius", d.R}};
  } else if (mode == "e2ph") {
    const PHDisk d = euclid_to_ph({z, radius});
    j = {{"center", complex_json(d.z0)}, {"radius", d.r}};
  } else if (mode == "fuss") {
    const PonceletDisk d = fuss_poncelet4(z);
    j = {{"euclid", {{"center", complex_json(d.euclid.c)}, {"radius", d.euclid.R}}},
         {"ph", {{"center", complex_json(d.ph.z0)}, {"radius", d.ph.r}}}};
  } else if (mode == "chapple") {
    const ChappleDisk d = chapple_poncelet3(z);
    j = {{"euclid", {{"center", complex_json(d.euclid.c)}, {"radius", d.euclid.R}}}, {"ph_radius", d.ph_radius}};
  } else {
    throw UsageError("disks: unknown mode '" + mode + "'");
  }
  out << j.dump() << '\n';
  return exit_code::pass;
}

int cmd_hr(const std::string& as, const std::string& bs, cplx alam, cplx blam, std::ostream& out,
           const Tolerances& tol) {
  const BlaschkeProduct a(parse_zero_list(as), alam, tol);
  const BlaschkeProduct b(parse_zero_list(bs), blam, tol);
  if (!a.is_monic() || !b.is_monic()) throw UsageError("hr: both Blaschke products must be monic");
  if (a.degree() != b.degree()) throw UsageError("hr: degrees must match");
  const CPoly q = numerator_q(a, b);
  json coeffs = json::array();
  for (const cplx& c : q.coeffs()) coeffs.push_back(complex_json(c));
  const int n = static_cast<int>(a.degree());
  json j = {{"q", coeffs}, {"antiselfinversive_residual", antiselfinversive_check(q, n)}};
  if (q.max_coeff() > 1e-11) {
    const Agreement ag = boundary_agreement(a, b);
    j["agreement"] = {{"lambda", complex_json(ag.lambda)}, {"defect", ag.defect}};
    j["pairing_defect"] = zero_pairing_defect(q);
  } else {
    j["agreement"] = {{"lambda", complex_json(1.0)}, {"defect", 0.0}};
    j["identical"] = true;
  }
  out << j.dump() << '\n';
  return exit_code::pass;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<char*> argv;
  std::vector<std::string> store = args;
  for (auto& s : store) argv.push_back(s.data());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerics for Blaschke products, compressed shifts and numerical ranges", "blaschke-lab"};
  app.require_subcommand(1);

  std::string b_list, theta_list, a_list, lam_s = "1", alam_s = "1", blam_s = "1", center = "0", mode = "ph2e";
  int dirs = 720, n = 3, samples = 512, res = 512;
  double t = 0.0, r = 0.5, radius = 0.5, tmin = 0.0, tmax = 0.99, step = 0.01;
  bool as_json = false;
  Common common;
  SearchConfig scfg;

  auto* lsc = app.add_subcommand("lsc", "Check max |B| over W(S_Theta) >= 1/2");
  lsc->add_option("--b", b_list, "zeros of B")->required();
  lsc->add_option("--theta", theta_list, "zeros of Theta")->required();
  lsc->add_option("--lam", lam_s, "unimodular prefactor of B");
  lsc->add_option("--dirs", dirs, "support directions")->check(CLI::Range(64, 1 << 20));
  lsc->add_flag("--json", as_json, "JSON output");

  auto* nr = app.add_subcommand("nrange", "Boundary of W(S_Theta) as CSV");
  nr->add_option("--theta", theta_list, "zeros of Theta")->required();
  nr->add_option("--dirs", dirs, "support directions")->check(CLI::Range(64, 1 << 20));
  nr->add_option("--out", common.out_path, "CSV path (default stdout)");
  nr->add_option("--svg", common.svg_path, "SVG overlay path");

  auto* cu = app.add_subcommand("curve", "Points of the curve C_t inside W(A_t)");
  cu->add_option("--n", n, "matrix size")->check(CLI::Range(3, 64));
  cu->add_option("--t", t, "parameter in (-1, 1)");
  cu->add_option("--samples", samples, "number of points");
  cu->add_option("--out", common.out_path, "CSV path (default stdout)");
  cu->add_option("--svg", common.svg_path, "SVG overlay path");

  auto* ls = app.add_subcommand("levelset", "Level set {|B| < r}: component count and level curve");
  ls->add_option("--b", b_list, "zeros of B")->required();
  ls->add_option("--lam", lam_s, "unimodular prefactor of B");
  ls->add_option("--r", r, "level in (0, 1)")->required();
  ls->add_option("--res", res, "grid resolution");
  ls->add_option("--out", common.out_path, "CSV path (default stdout)");
  ls->add_option("--svg", common.svg_path, "SVG overlay path");

  std::string ledger_path;
  auto* se = app.add_subcommand("search", "Randomized search for LSC violations");
  se->add_option("--trials", scfg.trials, "number of trials");
  se->add_option("--seed", scfg.seed, "run seed");
  se->add_option("--deg-b-min", scfg.deg_b_min);
  se->add_option("--deg-b-max", scfg.deg_b_max);
  se->add_option("--deg-theta-min", scfg.deg_theta_min);
  se->add_option("--deg-theta-max", scfg.deg_theta_max);
  se->add_option("--rho-max", scfg.rho_max, "zeros are uniform in |z| < rho_max");
  se->add_option("--dirs", scfg.directions, "support directions")->check(CLI::Range(64, 1 << 20));
  se->add_option("--workers", scfg.workers, "worker threads")->check(CLI::Range(1, 256));
  se->add_option("--ledger", ledger_path, "JSONL ledger (appended)");

  auto* ka = app.add_subcommand("kappa", "Sweep the spectral constant kappa(t)");
  ka->add_option("--n", n, "3, 4 or 5")->check(CLI::IsMember({3, 4, 5}));
  ka->add_option("--t-min", tmin);
  ka->add_option("--t-max", tmax);
  ka->add_option("--step", step);
  ka->add_option("--out", common.out_path, "CSV path (default stdout)");

  auto* di = app.add_subcommand("disks", "Pseudohyperbolic and Euclidean disk conversions");
  di->add_option("--mode", mode, "ph2e, e2ph, fuss or chapple")->check(CLI::IsMember({"ph2e", "e2ph", "fuss", "chapple"}));
  di->add_option("--center", center, "center (complex literal)");
  di->add_option("--radius", radius, "radius");

  auto* hr = app.add_subcommand("hr", "Difference numerator Q and a boundary agreement point");
  hr->add_option("--a", a_list, "zeros of A")->required();
  hr->add_option("--b", b_list, "zeros of B")->required();
  hr->add_option("--a-lam", alam_s, "prefactor of A");
  hr->add_option("--b-lam", blam_s, "prefactor of B");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::pass : exit_code::usage;
  }

  try {
    const Tolerances tol = tolerances_from_env();
    if (lsc->parsed()) return cmd_lsc(b_list, theta_list, parse_complex(lam_s), dirs, as_json, out, tol);
    if (nr->parsed()) return cmd_nrange(theta_list, dirs, common, out, tol);
    if (cu->parsed()) return cmd_curve(n, t, samples, common, out, tol);
    if (ls->parsed()) return cmd_levelset(b_list, parse_complex(lam_s), r, res, common, out, err, tol);
    if (ka->parsed()) return cmd_kappa(n, tmin, tmax, step, common, out, err);
    if (di->parsed()) return cmd_disks(mode, center, radius, out);
    if (hr->parsed()) return cmd_hr(a_list, b_list, parse_complex(alam_s), parse_complex(blam_s), out, tol);
    if (se->parsed()) {
      scfg.tol = tol;
      std::unique_ptr<Sink> sink;
      if (!ledger_path.empty()) sink = std::make_unique<Sink>(ledger_path, out, std::ios::app);
      const SearchSummary s = run_search(scfg, sink ? &**sink : nullptr);
      json j = {{"trials", s.trials},
                {"failures", s.failures},
                {"below_threshold", s.below_threshold},
                {"histogram", {{"edges", s.bin_edges}, {"counts", s.bin_counts}}}};
      if (s.min_record) {
        j["min_value"] = s.min_value;
        j["min_b"] = join_zeros(s.min_record->b_zeros);
        j["min_b_lambda"] = format_complex(s.min_record->b_lambda);
        j["min_theta"] = join_zeros(s.min_record->theta_zeros);
        j["min_seed"] = s.min_record->seed;
      }
      out << j.dump() << '\n';
      return s.below_threshold > 0 ? exit_code::below_half : exit_code::pass;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_code::usage;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << '\n';
    return exit_code::usage;
  } catch (const std::domain_error& e) {
    err << "invalid input: " << e.what() << '\n';
    return exit_code::usage;
  }
  return exit_code::usage;
}

}  // namespace blaschke_lab
