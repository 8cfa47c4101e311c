// stardisc: star discrepancy evaluation and lower-bound certificates.
//
// Exit codes: 0 success, 1 certificate rejected by `verify` or internal
// failure, 2 invalid flags or input, 3 `certify` refuted the discrepancy claim.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stardisc/adversary.hpp"
#include "stardisc/bench.hpp"
#include "stardisc/discrepancy.hpp"
#include "stardisc/generators.hpp"
#include "stardisc/serialize.hpp"

namespace {

using namespace stardisc;

constexpr int kExitOk = 0;
constexpr int kExitRejected = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitRefuted = 3;

PointSet load_points(const std::string& path) {
  if (path == "-") return read_csv(std::cin);
  return read_csv_file(path);
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::parse_error, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse_error, path + ": " + e.what());
  }
}

struct GenArgs {
  std::string kind;
  Index n = 0;
  Index d = 0;
  std::uint64_t seed = 0;
  std::string output;
};

int run_gen(const GenArgs& a) {
  const auto kind = parse_generator_kind(a.kind);
  if (!kind) throw Error(ErrorKind::invalid_argument, "--kind: unknown generator '" + a.kind + "'");
  GeneratorSpec spec;
  spec.kind = *kind;
  spec.n = a.n;
  spec.dim = a.d;
  spec.seed = a.seed;
  const PointSet X = generate(spec);
  if (a.output.empty() || a.output == "-") {
    write_csv(std::cout, X, describe(spec));
  } else {
    std::ofstream out(a.output);
    if (!out) throw Error(ErrorKind::invalid_argument, "--output: cannot write " + a.output);
    write_csv(out, X, describe(spec));
  }
  return kExitOk;
}

struct DiscArgs {
  std::string input;
  std::string method = "exact";
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0;
};

int run_disc(const DiscArgs& a, const ExactOptions& exact) {
  const PointSet X = load_points(a.input);
  const auto r = a.method == "exact"
                     ? star_discrepancy_exact(X, exact)
                     : star_discrepancy_sampled(X, a.samples, a.seed);
  std::cout << to_json(r).dump(2) << '\n';
  return kExitOk;
}

struct CertifyArgs {
  std::string input;
  double epsilon = 0.0;
  double beta = kDefaultBeta;
};

int run_certify(const CertifyArgs& a) {
  const PointSet X = load_points(a.input);
  const auto params = validate_parameters(X.dim(), a.epsilon, a.beta);
  const auto result = run_chain(X, params);
  if (const auto* cert = std::get_if<ChainCertificate>(&result)) {
    std::cout << to_json(*cert).dump(2) << '\n';
    return kExitOk;
  }
  const auto& ref = std::get<Refutation>(result);
  std::cout << to_json(ref).dump(2) << '\n';
  std::cerr << "refuted: box with local discrepancy " << ref.witness.excess
            << " > epsilon " << a.epsilon << '\n';
  return kExitRefuted;
}

struct VerifyArgs {
  std::string input;
  std::string certificate;
};

int run_verify(const VerifyArgs& a) {
  const PointSet X = load_points(a.input);
  const auto cert = certificate_from_json(load_json(a.certificate));
  const auto report = verify_certificate(X, cert);
  Json out = {{"valid", report.ok()}, {"k", cert.k}, {"failures", report.failures}};
  std::cout << out.dump(2) << '\n';
  for (const auto& f : report.failures) std::cerr << "verify: " << f << '\n';
  return report.ok() ? kExitOk : kExitRejected;
}

struct BenchArgs {
  Index d = 0;
  double epsilon = 0.0;
  double beta = kDefaultBeta;
  std::vector<std::string> generators;
  std::vector<Index> n_grid;
  std::uint64_t seed = 0;
  bool json = false;
};

int run_bench(const BenchArgs& a, const ExactOptions& exact) {
  std::vector<GeneratorSpec> templates;
  for (const auto& name : a.generators) {
    const auto kind = parse_generator_kind(name);
    if (!kind)
      throw Error(ErrorKind::invalid_argument, "--generators: unknown generator '" + name + "'");
    GeneratorSpec t;
    t.kind = *kind;
    t.dim = a.d;
    t.seed = a.seed;
    templates.push_back(t);
  }
  const auto row = bench_inverse_discrepancy(a.d, a.epsilon, templates, a.n_grid,
                                             {a.beta, exact});
  if (a.json) {
    std::cout << Json::array({to_json(row)}).dump(2) << '\n';
  } else {
    write_bench_csv(std::cout, std::span(&row, 1));
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Star discrepancy evaluation and inverse-discrepancy certificates"};
  app.require_subcommand(1);

  unsigned threads = 1;
  std::uint64_t max_grid = ExactOptions{}.max_grid;
  app.add_option("--threads", threads, "Worker threads for exact discrepancy and bench")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-grid", max_grid, "Largest critical grid the exact sweep will visit");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a point set as CSV");
  gen_cmd->add_option("--kind", gen.kind, "random|halton|hammersley|grid")->required()
      ->check(CLI::IsMember({"random", "halton", "hammersley", "grid"}));
  gen_cmd->add_option("--n", gen.n, "Number of points")->required();
  gen_cmd->add_option("--d", gen.d, "Dimension")->required();
  gen_cmd->add_option("--seed", gen.seed, "Seed for the random generator");
  gen_cmd->add_option("--output", gen.output, "Output path (default stdout)");

  DiscArgs disc;
  auto* disc_cmd = app.add_subcommand("disc", "Star discrepancy of a point set");
  disc_cmd->add_option("--input", disc.input, "Point CSV ('-' for stdin)")->required();
  disc_cmd->add_option("--method", disc.method, "exact|sample")
      ->check(CLI::IsMember({"exact", "sample"}));
  disc_cmd->add_option("--samples", disc.samples, "Corners drawn by --method sample")
      ->check(CLI::PositiveNumber);
  disc_cmd->add_option("--seed", disc.seed, "Sampling seed");

  CertifyArgs certify;
  auto* certify_cmd = app.add_subcommand(
      "certify", "Chain certificate for n, or a witness box refuting D* <= epsilon");
  certify_cmd->add_option("--input", certify.input, "Point CSV ('-' for stdin)")->required();
  certify_cmd->add_option("--epsilon", certify.epsilon, "Claimed discrepancy bound")->required();
  certify_cmd->add_option("--beta", certify.beta, "Step factor (default 20)");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Re-check a stored certificate");
  verify_cmd->add_option("--input", verify.input, "Point CSV ('-' for stdin)")->required();
  verify_cmd->add_option("--certificate", verify.certificate, "Certificate JSON")->required();

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Bracket the inverse star discrepancy");
  bench_cmd->add_option("--d", bench.d, "Dimension")->required();
  bench_cmd->add_option("--epsilon", bench.epsilon, "Target discrepancy")->required();
  bench_cmd->add_option("--generators", bench.generators, "Comma-separated generator kinds")
      ->required()->delimiter(',');
  bench_cmd->add_option("--n-grid", bench.n_grid, "Comma-separated point counts")
      ->required()->delimiter(',');
  bench_cmd->add_option("--beta", bench.beta, "Step factor (default 20)");
  bench_cmd->add_option("--seed", bench.seed, "Seed for random templates");
  bench_cmd->add_flag("--json", bench.json, "Emit JSON instead of CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  const ExactOptions exact{max_grid, threads};
  try {
    if (*gen_cmd) return run_gen(gen);
    if (*disc_cmd) return run_disc(disc, exact);
    if (*certify_cmd) return run_certify(certify);
    if (*verify_cmd) return run_verify(verify);
    if (*bench_cmd) return run_bench(bench, exact);
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.kind()) << "]: " << e.what() << '\n';
    return e.kind() == ErrorKind::soundness_violation ? kExitRejected : kExitInvalid;
  }
  return kExitInvalid;
}
