// Command-line driver: reads a JSON run description, evaluates the sweep and
// writes a CSV spectrum.
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include <mvfca/mvfca.hpp>

namespace {

enum ExitCode : int {
  ok = 0,
  io_failure = 1,
  config_error = 2,
  regime_error = 3,
  numeric_error = 4,
};

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Free-carrier absorption and hot-electron emission spectra of multivalley "
               "semiconductors"};
  std::string config_path;
  std::optional<std::string> output, observable, mechanism, regime;
  std::optional<unsigned> threads;
  app.add_option("--config", config_path, "JSON run description")->required();
  app.add_option("--output", output, "CSV output path ('-' for stdout); overrides config");
  app.add_option("--observable", observable, "absorption | emission | both")
      ->check(CLI::IsMember({"absorption", "emission", "both"}));
  app.add_option("--mechanism", mechanism, "impurity | acoustic")
      ->check(CLI::IsMember({"impurity", "acoustic"}));
  app.add_option("--regime", regime, "general | classical | quantum")
      ->check(CLI::IsMember({"general", "classical", "quantum"}));
  app.add_option("--threads", threads, "worker threads for the sweep; overrides config")
      ->check(CLI::Range(1u, 1024u));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e);
    return rc == 0 ? ExitCode::ok : ExitCode::config_error;
  }

  try {
    auto cfg = mvfca::load_config(config_path);
    if (output)
      cfg.output = *output;
    if (observable)
      cfg.observable = mvfca::parse_observable(*observable);
    if (mechanism)
      cfg.mechanism = mvfca::parse_mechanism(*mechanism);
    if (regime)
      cfg.regime = mvfca::parse_regime(*regime);
    if (threads)
      cfg.threads = *threads;
    mvfca::validate_run(cfg);
    if (cfg.output.empty())
      throw mvfca::ConfigError("output: no output path (set \"output\" or pass --output)");

    const auto table = mvfca::run_sweep(cfg);
    if (cfg.output == "-")
      mvfca::write_csv(table, std::cout);
    else
      mvfca::write_csv(table, cfg.output);
    return ExitCode::ok;
  } catch (const mvfca::ConfigError &e) {
    std::cerr << "config error: " << e.what() << '\n';
    return ExitCode::config_error;
  } catch (const mvfca::RegimeError &e) {
    std::cerr << "regime error: " << e.what() << '\n';
    return ExitCode::regime_error;
  } catch (const mvfca::NumericError &e) {
    std::cerr << "numeric error: " << e.what() << '\n';
    return ExitCode::numeric_error;
  } catch (const mvfca::IoError &e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return ExitCode::io_failure;
  }
}
