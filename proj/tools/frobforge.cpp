#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

#include "frobforge/cli/app.hpp"

using namespace frobforge;
using namespace frobforge::cli;

int main(int argc, char** argv) {
  CLI::App app{"frobforge: Frobenius, depth and homological invariants over F_p[x]/I"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path, cache_dir, format, e_text, imax_text, seed_text;
  bool parallel = false;
  app.add_option("--config", config_path, "key=value settings file");
  app.add_option("--cache-dir", cache_dir, "directory for the persistent Groebner basis cache");
  app.add_option("--format", format, "json or table");
  app.add_option("--e", e_text, "comma-separated Frobenius exponents");
  app.add_option("--imax", imax_text, "largest homological degree to report");
  app.add_option("--seed", seed_text, "seed for randomized suites");
  app.add_flag("--parallel", parallel, "run corpus entries concurrently");

  Selection sel;
  std::string file, verify_kind, corpus_action, corpus_dir;
  std::size_t random_count = 0;
  bool write_expected = false;

  auto file_command = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    if (std::string(name) == "verify") {
      sub->add_option("kind", verify_kind, "thmA | thmB | prop-acyclicity | cor-ext")->required();
    }
    sub->add_option("file", file, "DSL input")->required();
    sub->add_option("--ring", sel.ring, "restrict to one ring");
    sub->add_option("--module", sel.module, "restrict to one module");
    return sub;
  };
  file_command("gb", "reduced Groebner basis of each ideal");
  file_command("dim", "Krull dimension of each ring");
  file_command("depth", "depth of each module (Ext and Koszul)");
  file_command("betti", "Betti numbers up to --imax");
  file_command("pd", "projective dimension verdict");
  file_command("bass", "Bass numbers mu_i(m, M)");
  file_command("exnumbers", "Enochs-Xu numbers pi_i(m, M)");
  file_command("tor", "Tor_i(M, N)")->add_option("--with", sel.with, "second module (default k)");
  file_command("ext", "Ext^i(N, M)")->add_option("--with", sel.with, "first module N (default k)");
  file_command("frobtor", "Tor_i(F^e_* R, M) via twisted resolutions");
  file_command("kunz", "regularity verdict from Frobenius Tor vanishing");
  file_command("pushforward", "F^e_* R as a presented module");
  file_command("crosscheck", "twisted versus pushforward Tor dimensions");
  auto* verify = file_command("verify", "theorem checks");
  verify->add_option("--complex", sel.complex, "restrict to one complex");
  verify->add_option("--random", random_count, "also check this many seeded random complexes");
  auto* corpus = app.add_subcommand("corpus", "run a directory of .frob files");
  corpus->add_option("action", corpus_action, "run")->required();
  corpus->add_option("dir", corpus_dir, "corpus directory")->required();
  corpus->add_flag("--write-expected", write_expected, "rewrite the .expected.json goldens");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  SessionConfig cfg;
  try {
    if (!config_path.empty()) load_config(cfg, config_path);
    if (const char* env = std::getenv("FROBFORGE_CACHE"); env != nullptr && *env) cfg.cache_dir = env;
    if (!cache_dir.empty()) cfg.cache_dir = cache_dir;
    if (!format.empty()) cfg.format = parse_format(format);
    if (!e_text.empty()) cfg.e_list = parse_e_list(e_text);
    if (!imax_text.empty()) cfg.max_i = parse_uint(imax_text, "--imax");
    if (!seed_text.empty()) cfg.seed = parse_uint(seed_text, "--seed");
    if (parallel) cfg.parallel = true;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }

  if (!cfg.cache_dir.empty()) global_cache().load(cfg.cache_dir);
  int code = kOk;
  try {
    Json report;
    if (corpus->parsed()) {
      if (corpus_action != "run") throw UsageError("corpus expects 'run', got '" + corpus_action + "'");
      auto out = run_corpus(corpus_dir, cfg, write_expected);
      report = out.json;
      code = out.code;
    } else {
      CLI::App* sub = app.get_subcommands().front();
      std::string command = sub->get_name();
      if (command == "crosscheck" && e_text.empty() && config_path.empty()) cfg.e_list = {1};
      report = run_command(command, file, verify_kind, sel, cfg, random_count);
      if (!report["consistent"].get<bool>()) code = kVerification;
    }
    std::cout << render(report, cfg.format);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    code = kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << file << ": " << e.what() << "\n";
    code = kUsage;
  } catch (const ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    code = kResource;
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    code = kVerification;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    code = kUsage;
  } catch (const StructuralError& e) {
    std::cerr << "error: " << e.what() << "\n";
    code = kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    code = kVerification;
  }
  try {
    if (!cfg.cache_dir.empty()) global_cache().save(cfg.cache_dir);
  } catch (const std::exception& e) {
    std::cerr << "warning: could not write cache: " << e.what() << "\n";
  }
  return code;
}
