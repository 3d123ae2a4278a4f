#include "hyperising/cli.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string_view>

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include "hyperising/coefficients.hpp"
#include "hyperising/enumerate.hpp"
#include "hyperising/error.hpp"
#include "hyperising/exact.hpp"
#include "hyperising/generators.hpp"
#include "hyperising/io.hpp"
#include "hyperising/leeyang.hpp"
#include "hyperising/roots.hpp"
#include "hyperising/taylor.hpp"

namespace hyperising::cli {

using nlohmann::json;

namespace {

// Adding 0.0 folds -0.0 into 0.0.
json cx(Complex z) { return json::array({z.real() + 0.0, z.imag() + 0.0}); }

json cx_list(std::span<const Complex> zs) {
  json out = json::array();
  for (const auto& z : zs) out.push_back(cx(z));
  return out;
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  std::ostringstream ss;
  for (unsigned int i = 0; i < len; ++i) ss << std::hex << std::setw(2) << std::setfill('0') << int{digest[i]};
  return ss.str();
}

struct Globals {
  std::size_t threads = 1;
  std::size_t m_cap = 24;
  std::size_t memory_cap = std::size_t{1} << 26;
  std::size_t oracle_cap = 24;
  double tol_circle = 1e-6;
  double tol_residual = 1e-8;
  std::uint64_t seed = 1;
};

struct Input {
  std::string digest;
  Hypergraph graph;
};

Input read_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open input file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  const std::string bytes = ss.str();
  return {sha256_hex(bytes), parse_hypergraph(bytes)};
}

class Stopwatch {
 public:
  double lap_ms() {
    const auto now = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
    return ms;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

json report(const std::string& command, const std::optional<std::string>& digest, json params,
            json result, json timings, std::optional<bool> guarantee) {
  json r;
  r["command"] = command;
  r["input_digest"] = digest ? json(*digest) : json(nullptr);
  r["parameters"] = std::move(params);
  r["result"] = std::move(result);
  r["timings_ms"] = std::move(timings);
  r["guarantee"] = guarantee ? json(*guarantee) : json(nullptr);
  return r;
}

json zero_report_json(const ZeroReport& z) {
  json residuals = json::array();
  for (double r : z.residuals) residuals.push_back(r);
  return {{"coefficients", cx_list(z.coefficients)},
          {"roots", cx_list(z.roots)},
          {"residuals", residuals},
          {"max_circle_deviation", z.max_circle_deviation}};
}

json verdict_json(const InstanceVerdict& v) {
  json edges = json::array();
  for (const auto& e : v.edges) {
    json je{{"edge", e.edge}, {"size", e.size}, {"kind", e.ising ? "ising-range" : "suzuki-fisher"},
            {"pass", e.pass}};
    if (e.range) je["range"] = {e.range->lo, e.range->hi};
    if (e.suzuki_fisher) {
      je["plus_weight"] = e.suzuki_fisher->plus_weight;
      je["quarter_total"] = e.suzuki_fisher->quarter_total;
      je["symmetric"] = e.suzuki_fisher->symmetric;
    }
    edges.push_back(std::move(je));
  }
  return {{"edges", std::move(edges)}, {"all_pass", v.all_pass}};
}

}  // namespace

std::complex<double> parse_lambda(const std::string& text) {
  auto parse_one = [&](std::string_view s) {
    const auto first = s.find_first_not_of(" \t");
    const auto last = s.find_last_not_of(" \t");
    const std::string_view body = first == std::string_view::npos ? std::string_view{} : s.substr(first, last - first + 1);
    double v = 0.0;
    const auto [end, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
    if (body.empty() || ec != std::errc{} || end != body.data() + body.size() || !std::isfinite(v))
      throw InvalidInput("cannot parse lambda component '" + std::string(s) + "'");
    return v;
  };
  const auto comma = text.find(',');
  if (comma == std::string::npos) return {parse_one(text), 0.0};
  return {parse_one(text.substr(0, comma)), parse_one(text.substr(comma + 1))};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lee-Yang zeros and Taylor-series partition function approximation on hypergraphs",
               "hyperising"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--threads", g.threads, "worker threads (0 = hardware concurrency)")
      ->envname("HYPERISING_THREADS");
  app.add_option("--m-cap", g.m_cap, "largest insect DP depth min(m, n) accepted")->envname("HYPERISING_M_CAP");
  app.add_option("--memory-cap", g.memory_cap, "largest number of stored connected sets")
      ->envname("HYPERISING_MEMORY_CAP");
  app.add_option("--oracle-cap", g.oracle_cap, "largest n for brute-force evaluation")
      ->envname("HYPERISING_ORACLE_CAP");
  app.add_option("--tol-circle", g.tol_circle, "allowed ||r| - 1| for zeros")->envname("HYPERISING_TOL_CIRCLE");
  app.add_option("--tol-residual", g.tol_residual, "root residual tolerance relative to max|c|")
      ->envname("HYPERISING_TOL_RESIDUAL");
  app.add_option("--seed", g.seed, "seed for generated instances")->envname("HYPERISING_SEED");

  std::string input;
  std::string lambda_text;
  double eps = 0.1;
  std::optional<std::size_t> order;
  std::size_t t = 1, m = 1, k = 2, instances = 10, n_max = 10;
  double beta = 0.0;
  bool emit_sets = false;

  auto* approx = app.add_subcommand("approx", "approximate Z(lambda) by Taylor truncation of log Z");
  approx->add_option("input", input, "hypergraph JSON")->required();
  approx->add_option("--lambda", lambda_text, "vertex activity as re,im or re")->required();
  approx->add_option("--epsilon", eps, "relative accuracy in (0,1)");
  approx->add_option("--order", order, "override the truncation order m");

  auto* exact = app.add_subcommand("exact", "brute-force coefficients (and Z(lambda))");
  exact->add_option("input", input, "hypergraph JSON")->required();
  exact->add_option("--lambda", lambda_text, "also evaluate Z at this activity");

  auto* zeros = app.add_subcommand("zeros", "zeros of Z and their distance to the unit circle");
  zeros->add_option("input", input, "hypergraph JSON")->required();

  auto* range = app.add_subcommand("check-range", "per-edge Lee-Yang range verdicts");
  range->add_option("input", input, "hypergraph JSON")->required();

  auto* enumerate = app.add_subcommand("enumerate", "connected induced label sets up to size t");
  enumerate->add_option("input", input, "hypergraph JSON")->required();
  enumerate->add_option("--t", t, "largest size")->required()->check(CLI::PositiveNumber);
  enumerate->add_flag("--sets", emit_sets, "also list the sets");

  auto* coeffs = app.add_subcommand("coeffs", "power sums and elementary symmetric values via the insect DP");
  coeffs->add_option("input", input, "hypergraph JSON")->required();
  coeffs->add_option("--m", m, "order")->required()->check(CLI::PositiveNumber);

  auto* tight = app.add_subcommand("tight-example", "single-hyperedge zero off the unit circle");
  tight->add_option("--k", k, "edge size")->required();
  tight->add_option("--beta", beta, "edge activity outside the range")->required();

  auto* sweep = app.add_subcommand("sweep", "random instances at a fixed beta; reports circle deviations");
  sweep->add_option("--k", k, "largest edge size")->required();
  sweep->add_option("--beta", beta, "edge activity")->required();
  sweep->add_option("--instances", instances, "number of instances");
  sweep->add_option("--n-max", n_max, "largest vertex count");

  std::vector<std::string> storage{"hyperising"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    Stopwatch sw;
    const OracleOptions oracle{g.oracle_cap, g.threads};
    json result;
    json params;
    json timings = json::object();
    std::optional<std::string> digest;
    std::optional<bool> guarantee;
    std::string command;

    if (*approx) {
      command = "approx";
      const auto in = read_input(input);
      digest = in.digest;
      timings["parse"] = sw.lap_ms();
      const Complex lambda = parse_lambda(lambda_text);
      TaylorOptions opt;
      opt.threads = g.threads;
      opt.memory_cap = g.memory_cap;
      opt.m_cap = g.m_cap;
      opt.m_override = order;
      const auto res = approximate_Z(in.graph, lambda, eps, opt);
      timings["enumerate"] = res.enumerate_seconds * 1e3;
      timings["dp"] = res.dp_seconds * 1e3;
      timings["total_pipeline"] = sw.lap_ms();
      params = {{"lambda", cx(lambda)}, {"epsilon", eps}, {"m", res.m}, {"m_cap", g.m_cap},
                {"memory_cap", g.memory_cap}};
      result = {{"n", res.n},
                {"m", res.m},
                {"dp_depth", res.dp_depth},
                {"lambda_effective", cx(res.lambda_effective)},
                {"inverted", res.inverted},
                {"f_m", cx(res.f_m)},
                {"log_z_hat", cx(res.log_z_hat)},
                {"z_hat", cx(res.z_hat)},
                {"bound", res.bound},
                {"bound_within_eps_over_4", res.bound <= eps / 4.0},
                {"connected_sets", res.family_size},
                {"power_sums", cx_list(std::span(res.power_sums.p).subspan(1))},
                {"elementary", cx_list(std::span(res.elementary.e).subspan(1))}};
      guarantee = res.guaranteed;
      err << "approx: m = " << res.m << ", DP depth " << res.dp_depth << ", " << res.family_size
          << " connected sets" << (res.guaranteed ? "" : " (no guarantee: activities outside the Lee-Yang ranges)")
          << "\n";
    } else if (*exact) {
      command = "exact";
      const auto in = read_input(input);
      digest = in.digest;
      timings["parse"] = sw.lap_ms();
      const auto c = exact_coefficients(in.graph, oracle);
      result["coefficients"] = cx_list(c);
      if (!lambda_text.empty()) {
        const Complex lambda = parse_lambda(lambda_text);
        params["lambda"] = cx(lambda);
        result["z"] = cx(exact_partition(in.graph, lambda, oracle));
      }
      timings["oracle"] = sw.lap_ms();
    } else if (*zeros) {
      command = "zeros";
      const auto in = read_input(input);
      digest = in.digest;
      timings["parse"] = sw.lap_ms();
      const auto rep = verify_zeros_on_circle(in.graph, g.tol_circle, g.tol_residual, oracle);
      timings["roots"] = sw.lap_ms();
      params = {{"tol_circle", g.tol_circle}, {"tol_residual", g.tol_residual}};
      result = zero_report_json(rep.zeros);
      result["in_range"] = rep.in_range;
      result["pass"] = rep.pass ? json(*rep.pass) : json(nullptr);
      guarantee = rep.in_range;
    } else if (*range) {
      command = "check-range";
      const auto in = read_input(input);
      digest = in.digest;
      const auto v = check_instance(in.graph);
      timings["check"] = sw.lap_ms();
      result = verdict_json(v);
      guarantee = v.all_pass;
    } else if (*enumerate) {
      command = "enumerate";
      const auto in = read_input(input);
      digest = in.digest;
      timings["parse"] = sw.lap_ms();
      const auto fam = enumerate_connected(in.graph, t, {g.memory_cap, g.threads});
      timings["enumerate"] = sw.lap_ms();
      params = {{"t", t}};
      json counts = json::object();
      json bounds = json::object();
      for (std::size_t s = 1; s < fam.by_size.size(); ++s) {
        counts[std::to_string(s)] = fam.by_size[s].size();
        if (s >= 2)
          bounds[std::to_string(s)] =
              count_bound(in.graph.num_vertices(), in.graph.max_degree(), in.graph.max_edge_size(), s);
      }
      result = {{"counts", counts}, {"count_bounds", bounds}, {"total", fam.total()},
                {"max_degree", in.graph.max_degree()}, {"max_edge_size", in.graph.max_edge_size()}};
      if (emit_sets) {
        json sets = json::object();
        for (std::size_t s = 1; s < fam.by_size.size(); ++s) sets[std::to_string(s)] = fam.by_size[s];
        result["sets"] = std::move(sets);
      }
    } else if (*coeffs) {
      command = "coeffs";
      const auto in = read_input(input);
      digest = in.digest;
      timings["parse"] = sw.lap_ms();
      if (std::min(m, in.graph.num_vertices()) > g.m_cap)
        throw CapExceeded("coeffs: DP depth " + std::to_string(std::min(m, in.graph.num_vertices())) +
                          " above the cap of " + std::to_string(g.m_cap));
      const auto run = power_sums_to_order(in.graph, m, {g.threads, g.memory_cap});
      timings["pipeline"] = sw.lap_ms();
      params = {{"m", m}};
      result = {{"p", cx_list(std::span(run.p.p).subspan(1))},
                {"e", cx_list(std::span(run.e.e).subspan(1))},
                {"dp_depth", run.dp_depth},
                {"connected_sets", run.family_size},
                {"pair_scans", run.pair_scans},
                {"max_pair_ratio", run.max_pair_ratio}};
      // e_i = 0 beyond the degree; report them explicitly up to m.
      for (std::size_t i = run.e.order() + 1; i <= m; ++i) result["e"].push_back(cx(Complex{}));
    } else if (*tight) {
      command = "tight-example";
      const auto w = tight_example(k, beta, g.tol_circle);
      timings["roots"] = sw.lap_ms();
      params = {{"k", k}, {"beta", beta}, {"tol_circle", g.tol_circle}};
      result = {{"k_used", w.k_used},        {"regime", w.regime},
                {"polynomial", cx_list(w.polynomial)}, {"witness_root", cx(w.witness_root)},
                {"deviation", w.deviation},  {"residual", w.residual}};
      if (w.sign_change) result["sign_change"] = {{"p_at_0", w.sign_change->at_zero}, {"p_at_1", w.sign_change->at_one}};
    } else if (*sweep) {
      command = "sweep";
      Rng rng(g.seed);
      json rows = json::array();
      double worst = 0.0;
      for (std::size_t i = 0; i < instances; ++i) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(2, std::max<std::size_t>(2, n_max))(rng);
        const auto h = random_connected_hypergraph({n, 4, k, n / 2}, constant_ising(beta), rng);
        const auto rep = zero_report(exact_coefficients(h, oracle), g.tol_residual);
        worst = std::max(worst, rep.max_circle_deviation);
        rows.push_back({{"n", n}, {"edges", h.num_edges()}, {"max_circle_deviation", rep.max_circle_deviation}});
      }
      timings["sweep"] = sw.lap_ms();
      params = {{"k", k}, {"beta", beta}, {"instances", instances}, {"n_max", n_max}, {"seed", g.seed}};
      result = {{"instances", rows}, {"max_circle_deviation", worst}};
    }

    params["threads"] = g.threads;
    out << report(command, digest, std::move(params), std::move(result), std::move(timings), guarantee).dump(2)
        << "\n";
    return kExitOk;
  } catch (const Refusal& e) {
    err << "refused: " << e.what() << "\n";
    return kExitRefusal;
  } catch (const InvalidInput& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace hyperising::cli
