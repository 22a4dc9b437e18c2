#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dgcm/commands.hpp"
#include "dgcm/error.hpp"
#include "dgcm/fixtures.hpp"

namespace {

// A path on disk, or the name of a bundled fixture (with or without the
// .dgcm extension).
std::string read_input(const std::string& input) {
  if (std::filesystem::is_regular_file(input)) {
    std::ifstream in(input, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  std::string name = std::filesystem::path(input).filename().string();
  if (name.ends_with(".dgcm")) name.resize(name.size() - 5);
  if (const auto* f = dgcm::find_fixture(name)) return f->text;
  throw dgcm::PreconditionError("no such file or bundled fixture: " + input);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cohen-Macaulay analysis of commutative DG-rings over finite fields"};
  app.set_version_flag("--version", "dgcm 0.1.0");

  std::string command;
  std::string input;
  std::string format = "text";
  bool assert_verdict = false;
  std::uint64_t seed = 1;
  int max_tries = 64;
  int t_max = 4;
  std::uint32_t field_char = 32003;
  std::vector<std::string> primes;

  app.add_option("command", command, "Command to run")->required()->check(CLI::IsMember(dgcm::command_names()));
  app.add_option("input", input, "Problem file (.dgcm) or bundled fixture name");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  app.add_flag("--assert", assert_verdict, "Exit with code 2 on a NOT_CM or UNKNOWN verdict");
  auto* seed_opt = app.add_option("--seed", seed, "Seed of the regular-sequence search")->capture_default_str();
  auto* tries_opt = app.add_option("--max-tries", max_tries, "Candidates per search step")->capture_default_str();
  auto* tmax_opt = app.add_option("--t-max", t_max, "Power bound of the Koszul oracle")->capture_default_str();
  auto* char_opt = app.add_option("--field-char", field_char, "Prime characteristic (overrides the file)")
                       ->capture_default_str();
  app.add_option("--prime", primes, "Prime ideal as comma-separated generators (repeatable)");

  CLI11_PARSE(app, argc, argv);

  try {
    dgcm::RunOptions options;
    options.format = format == "json" ? dgcm::OutputFormat::Json : dgcm::OutputFormat::Text;
    options.assert_verdict = assert_verdict;
    if (seed_opt->count()) options.seed = seed;
    if (tries_opt->count()) options.max_tries = max_tries;
    if (tmax_opt->count()) options.t_max = t_max;
    options.primes = primes;

    dgcm::CommandResult result;
    if (command == "examples") {
      result = dgcm::run_command(command, nullptr, options);
    } else {
      if (input.empty()) throw dgcm::PreconditionError(command + ": missing input file");
      dgcm::ProblemFile file = dgcm::parse_problem(read_input(input));
      std::optional<std::uint32_t> characteristic;
      if (char_opt->count()) characteristic = field_char;
      dgcm::Problem problem = dgcm::build_problem(file, characteristic);
      result = dgcm::run_command(command, &problem, options);
    }
    std::cout << result.output;
    return result.exit_code;
  } catch (const dgcm::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const dgcm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
