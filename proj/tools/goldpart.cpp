// goldpart: command-line frontend.
#include <fstream>
#include <iostream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "goldpart/commands.hpp"
#include "goldpart/field.hpp"

int main(int argc, char** argv) {
  using namespace goldpart;

  CLI::App app{"Gold-map partitions of the odd subsets of GF(2^m) into Hamming-code cosets"};
  app.set_version_flag("--version", std::string("goldpart ") + kVersion);
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  std::string modulus_hex;
  std::string out_path;
  unsigned threads = 0;
  std::size_t samples = 0;

  app.add_option("--m", config.m, "field degree (odd, >= 3)")->required();
  app.add_option("--s", config.s, "sigma = 2^s, gcd(s, m) = 1")->capture_default_str();
  app.add_option("--modulus", modulus_hex, "irreducible modulus polynomial in hex (default: smallest)");
  app.add_option("--seed", config.seed, "random seed for sampled checks")->capture_default_str();
  app.add_option("--threads", threads, "worker threads (0 = hardware concurrency)");
  app.add_option("--samples", samples, "sample count (default 1000 for m <= 9, 200 above)");
  app.add_flag("--long", config.long_run, "allow long runs (m = 11 squares, m = 7 weight search)");
  app.add_option("--out", out_path, "write the report to a file instead of stdout");
  app.add_flag("--json", config.json, "JSON output where the default is text or CSV");
  app.add_flag("--timing", config.timing, "add runtime_ms to squares reports");

  auto* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("--mode", config.mode, "sampled | exhaustive (m = 3)")->capture_default_str();
  app.add_subcommand("table", "reproduce the (n, sigma+1, Q_zero, Q_nonzero) table for one m");
  auto* squares = app.add_subcommand("squares", "count two-color squares around a vertex");
  squares->add_option("--rep", config.rep, "zero | nonzero | hex:<subset>")->capture_default_str();
  auto* color = app.add_subcommand("color", "color and cell of an odd subset");
  color->add_option("--subset", config.subset, "comma-separated elements or hex:<digits>")->required();
  auto* orbit = app.add_subcommand("orbit", "s-class of an odd subset");
  orbit->add_option("--subset", config.subset, "comma-separated elements or hex:<digits>")->required();
  auto* crooked = app.add_subcommand("crooked", "check the crooked / affine difference-set conditions");
  crooked->add_option("--table", config.table, "gold | identity | random | <file>")->capture_default_str();
  auto* export_cmd = app.add_subcommand("export", "parity-check matrices of H, B and H_alpha^0");
  export_cmd->add_option("--alpha", config.alpha, "alpha for H_alpha^0")->capture_default_str();
  app.add_subcommand("coincide", "compare the partitions for s and m - s");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (!modulus_hex.empty()) config.modulus = parse_hex(modulus_hex);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
  config.threads = threads != 0 ? threads : std::max(1u, std::thread::hardware_concurrency());
  if (samples != 0) config.samples = samples;

  const std::string command = app.get_subcommands().front()->get_name();
  const CommandResult result = run_command(command, config);
  if (result.exit_code == kUsageError || result.exit_code == kBudgetRefusal) {
    std::cerr << result.output;
    return result.exit_code;
  }
  if (out_path.empty()) {
    std::cout << result.output;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << out_path << '\n';
      return kUsageError;
    }
    out << result.output;
  }
  return result.exit_code;
}
