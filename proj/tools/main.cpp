#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "toroidal/toroidal.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitParse = 2;

struct Options {
  std::uint64_t seed = 20240607;
  std::int64_t trunc = 8;
  int max_steps = 200;
  std::string format = "json";
  std::string germ_file;
  std::string fan_file;

  std::string center;
  int center_form = 0;
  std::vector<std::string> translations;

  std::int64_t a = 0, b = 0, c = 0;
  std::string lambda = "1";

  std::string strategy = "pair";
  int budget = 0;

  std::vector<std::string> only;
};

int exit_code_for(int status) {
  if (status == TOROIDAL_OK) return kExitOk;
  if (status == TOROIDAL_PARSE_ERROR) return kExitParse;
  return kExitFailure;
}

int finish(int status, toroidal_result* result) {
  if (status == TOROIDAL_OK) {
    std::cout << toroidal_result_text(result);
  } else if (result) {
    std::cerr << "error: " << toroidal_result_text(result) << "\n";
  } else {
    std::cerr << "error: " << toroidal_status_name(status) << "\n";
  }
  toroidal_result_free(result);
  return exit_code_for(status);
}

bool read_file(const std::string& path, std::string& out) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    out = ss.str();
    return true;
  }
  std::ifstream in(path);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

/// Loads the germ named by --germ, reporting failures on stderr.
int load_germ(const Options& opt, toroidal_germ** germ) {
  std::string text;
  if (!read_file(opt.germ_file, text)) {
    std::cerr << "error: ParseError: cannot read germ file '" << opt.germ_file << "'\n";
    return kExitParse;
  }
  toroidal_result* err = nullptr;
  int status = toroidal_germ_parse(text.c_str(), opt.trunc, germ, &err);
  if (status != TOROIDAL_OK) return finish(status, err);
  return kExitOk;
}

template <class Op>
int with_germ(const Options& opt, Op op) {
  toroidal_germ* germ = nullptr;
  if (int rc = load_germ(opt, &germ); rc != kExitOk) return rc;
  toroidal_result* result = nullptr;
  int status = op(germ, &result);
  toroidal_germ_free(germ);
  return finish(status, result);
}

int run_principalize(const Options& opt) {
  std::string text;
  if (!read_file(opt.fan_file, text)) {
    std::cerr << "error: ParseError: cannot read fan file '" << opt.fan_file << "'\n";
    return kExitParse;
  }
  toroidal_fan* fan = nullptr;
  toroidal_result* result = nullptr;
  int status = toroidal_fan_parse(text.c_str(), &fan, &result);
  if (status != TOROIDAL_OK) return finish(status, result);
  status = toroidal_principalize(fan, opt.strategy.c_str(), opt.budget, &result);
  toroidal_fan_free(fan);
  return finish(status, result);
}

int run_suite(const Options& opt) {
  std::vector<const char*> ids;
  for (const auto& id : opt.only) ids.push_back(id.c_str());
  toroidal_result* result = nullptr;
  int status = toroidal_suite(opt.seed, opt.trunc, ids.data(), static_cast<int>(ids.size()),
                              &result);
  if (status != TOROIDAL_OK) return finish(status, result);
  std::string text = toroidal_result_text(result);
  toroidal_result_free(result);
  std::cout << text;
  auto report = nlohmann::json::parse(text);
  for (const auto& c : report["criteria"])
    std::cerr << (c["pass"].get<bool>() ? "PASS " : "FAIL ") << c["id"].get<std::string>() << "\n";
  return report["summary"]["failed"].get<std::int64_t>() == 0 ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Toroidalization toolkit: normal forms, tau, blow-ups, relations and fans"};
  app.set_version_flag("--version", std::string(toroidal_version()));
  app.require_subcommand(1);
  app.add_option("--trunc", opt.trunc, "Default truncation degree for series")
      ->check(CLI::PositiveNumber);

  auto germ_option = [&](CLI::App* sub) {
    sub->add_option("--germ", opt.germ_file, "Germ JSON file ('-' for stdin)")->required();
  };

  auto* classify = app.add_subcommand("classify", "Normal-form tag of a germ");
  germ_option(classify);

  auto* tau = app.add_subcommand("tau", "Tau invariant of a germ");
  germ_option(tau);

  auto* lambda = app.add_subcommand("lambda", "Jacobian lambda values and toroidal verdict");
  germ_option(lambda);

  auto* blowup = app.add_subcommand("blowup", "Blow-up charts of a domain or target center");
  germ_option(blowup);
  auto* center_opt = blowup->add_option("--center", opt.center,
                                        "Domain center: 2curve, 2pt, 3pt or curve");
  auto* form_opt = blowup->add_option("--target-form", opt.center_form,
                                      "Target center in local form 1, 2 or 3")
                       ->check(CLI::Range(1, 3));
  center_opt->excludes(form_opt);
  blowup->add_option("--translate", opt.translations,
                     "Constants for translated domain charts (p/q)");

  auto* resolve3 = app.add_subcommand("resolve3", "Resolve a 3-point pre-relation");
  resolve3->add_option("--a", opt.a, "Exponent of u")->required();
  resolve3->add_option("--b", opt.b, "Exponent of v")->required();
  resolve3->add_option("--c", opt.c, "Exponent of w")->required();
  resolve3->add_option("--lambda", opt.lambda, "Nonzero rational multiplier");
  resolve3->add_option("--max-steps", opt.max_steps, "Expansion budget")
      ->check(CLI::PositiveNumber);
  resolve3->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"json", "dot"}));

  auto* principalize = app.add_subcommand("principalize", "Principalize divisors on a fan");
  principalize->add_option("--fan", opt.fan_file, "Fan JSON file ('-' for stdin)")->required();
  principalize->add_option("--strategy", opt.strategy, "pair or mixed")
      ->check(CLI::IsMember({"pair", "mixed"}));
  principalize->add_option("--max-steps,--budget", opt.budget, "Round budget (default from omega)")
      ->check(CLI::PositiveNumber);
  principalize->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"json"}));

  auto* suite = app.add_subcommand("suite", "Run the acceptance property suites");
  suite->add_option("--seed", opt.seed, "Seed for the randomized suites")->required();
  suite->add_option("--only", opt.only, "Run only the listed criterion ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  if (*classify) return with_germ(opt, toroidal_classify);
  if (*tau) return with_germ(opt, toroidal_tau);
  if (*lambda) return with_germ(opt, toroidal_lambda);
  if (*blowup) {
    if (form_opt->count() > 0)
      return with_germ(opt, [&](const toroidal_germ* g, toroidal_result** out) {
        return toroidal_blowup_target(g, opt.center_form, out);
      });
    if (center_opt->count() == 0) {
      std::cerr << "error: InvalidArgument: blowup needs --center or --target-form\n";
      return kExitFailure;
    }
    std::vector<const char*> consts;
    for (const auto& t : opt.translations) consts.push_back(t.c_str());
    return with_germ(opt, [&](const toroidal_germ* g, toroidal_result** out) {
      return toroidal_blowup_domain(g, opt.center.c_str(), consts.data(),
                                    static_cast<int>(consts.size()), out);
    });
  }
  if (*resolve3) {
    toroidal_result* result = nullptr;
    auto fmt = opt.format == "dot" ? TOROIDAL_FORMAT_DOT : TOROIDAL_FORMAT_JSON;
    int status = toroidal_resolve3(opt.a, opt.b, opt.c, opt.lambda.c_str(), opt.max_steps, fmt,
                                   &result);
    return finish(status, result);
  }
  if (*principalize) return run_principalize(opt);
  return run_suite(opt);
}
