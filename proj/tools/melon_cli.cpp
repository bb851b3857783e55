// melon: command-line front end for the exact identity checks.
//
// Exit codes: 0 success, 1 an identity or cross-check failed, 2 usage,
// parse or parameter error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "melon/errors.hpp"
#include "melon/identities.hpp"
#include "melon/paths.hpp"
#include "melon/plane_partitions.hpp"
#include "melon/render.hpp"
#include "melon/schur.hpp"
#include "melon/serialize.hpp"

using namespace melon;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

// ---- schur ---------------------------------------------------------------

struct SchurArgs {
  std::string shape = "[]";
  long vars = -1;
  std::string alg = "bialternant";
  std::string format = "text";
};

LaurentPoly run_schur_route(const std::string& alg, const Partition& lambda, long m) {
  if (alg == "bialternant") return schur_bialternant(lambda, GeometricPoint::arithmetic(static_cast<std::size_t>(m)));
  if (alg == "tableaux") return schur_tableau_sum(lambda, GeometricPoint::arithmetic(static_cast<std::size_t>(m)));
  if (alg == "product") return schur_principal_product(lambda, m);
  if (alg == "hdet") return schur_h_determinant(lambda, m);
  return schur_gv_determinant(lambda, m);
}

int cmd_schur(const SchurArgs& args) {
  const Partition lambda = parse_partition(args.shape).trimmed();
  const long m = args.vars >= 0 ? args.vars : static_cast<long>(std::max<std::size_t>(lambda.length(), 1));
  if (lambda.length() > static_cast<std::size_t>(m)) {
    throw PreconditionError("shape " + lambda.to_string() + " has more rows than --vars " + std::to_string(m));
  }
  std::vector<std::string> algs;
  if (args.alg == "all") algs = {"bialternant", "tableaux", "product", "hdet", "gvdet"};
  else algs = {args.alg};

  std::vector<LaurentPoly> values;
  for (const auto& a : algs) values.push_back(run_schur_route(a, lambda, m));
  bool agree = true;
  for (const auto& v : values) agree = agree && v == values.front();

  if (args.format == "json") {
    Json out = Json::object();
    out["shape"] = lambda.parts();
    out["vars"] = m;
    Json results = Json::object();
    for (std::size_t i = 0; i < algs.size(); ++i) results[algs[i]] = poly_to_json(values[i]);
    out["results"] = results;
    if (algs.size() > 1) out["agree"] = agree;
    std::cout << out.dump() << '\n';
  } else if (algs.size() == 1) {
    std::cout << values.front().to_string() << '\n';
  } else {
    for (std::size_t i = 0; i < algs.size(); ++i) std::cout << algs[i] << ": " << values[i].to_string() << '\n';
    std::cout << "verdict: " << (agree ? "OK" : "MISMATCH") << '\n';
  }
  return agree ? kExitOk : kExitFailure;
}

// ---- verify --------------------------------------------------------------

struct VerifyArgs {
  std::vector<std::string> suites{"all"};
  int max_n = 3;
  int max_m = 3;
  std::vector<int> shapes_box;
  int fuzz = 0;
  std::uint64_t seed = 1;
  std::string format = "jsonl";
  unsigned workers = 0;
  bool timing = false;
};

bool wants(const VerifyArgs& args, const std::string& suite) {
  for (const auto& s : args.suites) {
    if (s == "all" || s == suite) return true;
  }
  return false;
}

template <typename F>
VerifyTask single(std::string label, F f) {
  return {std::move(label), [f] { return std::vector<IdentityReport>{f()}; }};
}

std::vector<VerifyTask> build_tasks(const VerifyArgs& a) {
  std::vector<VerifyTask> tasks;
  const auto N = static_cast<std::size_t>(a.max_n);
  const int M = a.max_m;
  std::size_t box_n = N;
  int box_m = M;
  if (!a.shapes_box.empty()) {
    box_n = static_cast<std::size_t>(a.shapes_box[0]);
    box_m = a.shapes_box[1];
  }

  if (wants(a, "binet-cauchy")) {
    for (std::size_t n = 1; n <= N; ++n) {
      for (int m = 1; m <= M; ++m) {
        for (const auto& [pa, pb] : golden_binet_cauchy_points(n)) {
          tasks.push_back(single("binet-cauchy", [n, m, pa, pb] { return verify_binet_cauchy(n, m, pa, pb); }));
        }
        for (int f = 0; f < a.fuzz; ++f) {
          const auto [pa, pb] = random_binet_cauchy_points(n, a.seed + static_cast<std::uint64_t>(f));
          tasks.push_back(single("binet-cauchy", [n, m, pa, pb] { return verify_binet_cauchy(n, m, pa, pb); }));
        }
      }
    }
  }
  if (wants(a, "q-binet-cauchy")) {
    for (std::size_t n = 1; n <= N; ++n) {
      for (int m = 1; m <= M; ++m) tasks.push_back(single("q-binet-cauchy", [n, m] { return verify_q_binet_cauchy(n, m); }));
    }
  }
  if (wants(a, "kuperberg")) {
    for (std::size_t n = 1; n <= N; ++n) {
      for (int m = 1; m <= M; ++m) tasks.push_back(single("kuperberg", [n, m] { return verify_kuperberg(n, m); }));
    }
  }
  if (wants(a, "qbinomial-det")) {
    for (std::size_t n = 1; n <= N; ++n) {
      for (int m = 1; m <= M; ++m) tasks.push_back(single("qbinomial-det", [n, m] { return verify_qbinomial_det(n, m); }));
    }
  }
  if (wants(a, "deviation")) {
    for (std::size_t n = 1; n <= N; ++n) {
      for (int m = 1; m <= M; ++m) {
        for (std::size_t k = 0; k < n; ++k) {
          tasks.push_back(single("deviation", [n, m, k] {
            return verify_deviation_binet_cauchy(n, m, k, GeometricPoint::arithmetic(n - k, 0),
                                                 GeometricPoint::arithmetic(n, 1));
          }));
        }
      }
    }
  }
  if (wants(a, "watermelon")) {
    for (std::size_t n = 1; n <= N; ++n) {
      for (int m = 1; m <= M; ++m) {
        for (std::size_t k = 0; k <= n; ++k) {
          tasks.push_back({"watermelon", [n, m, k] { return verify_watermelon_suite(n, m, k); }});
        }
      }
    }
  }
  if (wants(a, "gv") && box_n > 0) {
    for (const auto& lambda : partitions_in_box(box_n, box_m)) {
      tasks.push_back(single("gv", [lambda, box_n] { return verify_gessel_viennot(lambda, box_n); }));
    }
  }
  if (wants(a, "zq")) {
    for (std::size_t n = 1; n <= N; ++n) {
      for (std::size_t l = 1; l <= n; ++l) {
        for (int m = 1; m <= M; ++m) tasks.push_back(single("zq", [n, l, m] { return verify_zq_equals_w(n, l, m); }));
      }
    }
  }
  if (wants(a, "schur") && box_n > 0) {
    for (const auto& lambda : partitions_in_box(box_n, box_m)) {
      for (long m = static_cast<long>(box_n); m <= static_cast<long>(box_n) + 1; ++m) {
        tasks.push_back({"schur", [lambda, m] { return verify_schur_routes(lambda, m); }});
      }
    }
  }
  return tasks;
}

int cmd_verify(const VerifyArgs& args) {
  const auto tasks = build_tasks(args);
  const auto reports = run_tasks(tasks, args.workers);
  std::size_t passed = 0;
  for (const auto& r : reports) {
    if (r.equal) ++passed;
    if (args.format == "jsonl") {
      std::cout << (args.timing ? r.to_json() : r.to_json_deterministic()).dump() << '\n';
    } else {
      std::cout << (r.equal ? "PASS " : "FAIL ") << r.name << ' ' << r.params.dump() << '\n';
      if (!r.equal) {
        std::cout << "  lhs: " << serialize_poly(r.lhs) << '\n';
        std::cout << "  rhs: " << serialize_poly(r.rhs) << '\n';
      }
    }
  }
  const std::size_t failed = reports.size() - passed;
  if (args.format == "jsonl") {
    Json summary = Json::object();
    summary["summary"] = {{"passed", passed}, {"failed", failed}, {"total", reports.size()}};
    std::cout << summary.dump() << '\n';
  } else {
    std::cout << "summary: " << passed << '/' << reports.size() << " passed, " << failed << " failed\n";
  }
  return failed == 0 ? kExitOk : kExitFailure;
}

// ---- count ---------------------------------------------------------------

struct CountArgs {
  long n = 0;
  long l = 0;
  long m = 0;
  std::string what = "number";
  std::string format = "text";
};

int cmd_count(const CountArgs& a) {
  if (a.what == "number") {
    const BigInt value = count_deviation(a.n, a.l, a.m);
    if (a.format == "json") {
      Json out = Json::object();
      out["N"] = a.n;
      out["L"] = a.l;
      out["M"] = a.m;
      out["number"] = value.get_str();
      std::cout << out.dump() << '\n';
    } else if (a.format == "csv") {
      std::cout << "N,L,M,number\n" << a.n << ',' << a.l << ',' << a.m << ',' << value.get_str() << '\n';
    } else {
      std::cout << value.get_str() << '\n';
    }
    return kExitOk;
  }

  LaurentPoly p;
  if (a.what == "genfunc") {
    p = closed_genfunc(a.n, a.l, a.m);
  } else {
    p = zq(static_cast<std::size_t>(a.n), static_cast<std::size_t>(a.l), static_cast<int>(a.m));
  }
  if (a.format == "json") {
    Json out = Json::object();
    out["N"] = a.n;
    out["L"] = a.l;
    out["M"] = a.m;
    out[a.what] = poly_to_json(p);
    std::cout << out.dump() << '\n';
  } else if (a.format == "csv") {
    std::cout << "exponent,coefficient\n";
    for (const auto& t : p.terms()) std::cout << t.exp << ',' << t.coef.get_str() << '\n';
  } else {
    std::cout << p.to_string() << '\n';
  }
  return kExitOk;
}

// ---- render / enumerate --------------------------------------------------

struct RenderArgs {
  std::string input = "-";
  std::string style = "ascii";
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open input file " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

int cmd_render(const RenderArgs& args) {
  Json j;
  try {
    j = Json::parse(read_input(args.input));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("render input must be a JSON object");
  const RenderStyle style = args.style == "svg" ? RenderStyle::Svg : RenderStyle::Ascii;
  if (j.contains("parts")) {
    std::cout << render_plane_partition(plane_partition_from_json(j), style);
  } else {
    std::cout << render_watermelon(watermelon_from_json(j), style);
  }
  return kExitOk;
}

struct EnumerateArgs {
  std::string kind = "watermelon";
  long n = 1;
  long l = -1;
  long m = 1;
  long k = 0;
};

int cmd_enumerate(const EnumerateArgs& a) {
  if (a.kind == "watermelon") {
    if (a.k > a.n) throw PreconditionError("deviation k must not exceed N");
    WatermelonStream stream(static_cast<std::size_t>(a.n), static_cast<int>(a.m), static_cast<std::size_t>(a.k));
    while (auto w = stream.next()) std::cout << watermelon_to_json(*w).dump() << '\n';
  } else {
    const long l = a.l >= 0 ? a.l : a.n;
    BoxPlanePartitions stream(static_cast<std::size_t>(a.n), static_cast<std::size_t>(l), static_cast<int>(a.m));
    while (auto pi = stream.next()) {
      std::cout << plane_partition_to_json(*pi, static_cast<std::size_t>(a.n), static_cast<std::size_t>(l),
                                           static_cast<int>(a.m))
                       .dump()
                << '\n';
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Schur, watermelon and plane partition identities"};
  app.require_subcommand(1);

  SchurArgs schur_args;
  auto* schur = app.add_subcommand("schur", "Evaluate S_lambda(1, q, ..., q^{m-1})");
  schur->add_option("--shape", schur_args.shape, "Partition such as [2,1]")->required();
  schur->add_option("--vars", schur_args.vars, "Number of variables m (default: number of rows)")
      ->check(CLI::NonNegativeNumber);
  schur->add_option("--alg", schur_args.alg)
      ->check(CLI::IsMember({"bialternant", "tableaux", "product", "hdet", "gvdet", "all"}));
  schur->add_option("--format", schur_args.format)->check(CLI::IsMember({"text", "json"}));

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run identity suites over a parameter grid");
  verify->add_option("--suite", verify_args.suites, "Suites to run (repeatable)")
      ->check(CLI::IsMember({"all", "binet-cauchy", "q-binet-cauchy", "kuperberg", "qbinomial-det", "deviation",
                             "watermelon", "gv", "zq", "schur"}));
  verify->add_option("--max-n", verify_args.max_n)->check(CLI::Range(0, 8));
  verify->add_option("--max-m", verify_args.max_m)->check(CLI::Range(0, 8));
  verify->add_option("--shapes-in-box", verify_args.shapes_box, "N,M box for the gv and schur suites")
      ->delimiter(',')
      ->expected(2)
      ->check(CLI::Range(0, 8));
  verify->add_option("--fuzz", verify_args.fuzz, "Extra seeded random Binet-Cauchy points per (N, M)")
      ->check(CLI::Range(0, 100));
  verify->add_option("--seed", verify_args.seed);
  verify->add_option("--format", verify_args.format)->check(CLI::IsMember({"jsonl", "text"}));
  verify->add_option("--workers", verify_args.workers, "Worker threads (0: MELON_WORKERS or hardware)");
  verify->add_flag("--timing", verify_args.timing, "Include elapsed_ms in JSON lines");

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "Count watermelons / boxed plane partitions");
  count->add_option("--n", count_args.n)->required()->check(CLI::NonNegativeNumber);
  count->add_option("--l", count_args.l)->check(CLI::NonNegativeNumber);
  count->add_option("--m", count_args.m)->check(CLI::NonNegativeNumber);
  count->add_option("--what", count_args.what)->check(CLI::IsMember({"number", "genfunc", "zq"}));
  count->add_option("--format", count_args.format)->check(CLI::IsMember({"text", "csv", "json"}));

  RenderArgs render_args;
  auto* render = app.add_subcommand("render", "Draw a watermelon or plane partition given as JSON");
  render->add_option("--input", render_args.input, "File path or - for stdin");
  render->add_option("--style", render_args.style)->check(CLI::IsMember({"ascii", "svg"}));

  EnumerateArgs enum_args;
  auto* enumerate = app.add_subcommand("enumerate", "List watermelons or boxed plane partitions as JSON lines");
  enumerate->add_option("--kind", enum_args.kind)->check(CLI::IsMember({"watermelon", "plane-partition"}));
  enumerate->add_option("--n", enum_args.n)->check(CLI::Range(0, 8));
  enumerate->add_option("--l", enum_args.l, "Rows of the box (plane-partition, default N)")->check(CLI::Range(0, 8));
  enumerate->add_option("--m", enum_args.m)->check(CLI::Range(0, 8));
  enumerate->add_option("--k", enum_args.k, "Deviation (watermelon)")->check(CLI::Range(0, 8));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*schur) return cmd_schur(schur_args);
    if (*verify) return cmd_verify(verify_args);
    if (*count) return cmd_count(count_args);
    if (*render) return cmd_render(render_args);
    if (*enumerate) return cmd_enumerate(enum_args);
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
