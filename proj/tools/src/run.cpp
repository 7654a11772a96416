#include "CLI11.hpp"
#include "tautkit_cli/commands.hpp"

#include <fstream>
#include <functional>
#include <iostream>

namespace tautkit::cli {

namespace {

constexpr int kUsageError = 2;

struct Options {
  std::string format;
  std::string output;
  int genus = 0;
  std::string input;
  long long base_chi = 0, convex = 0, concave = 0;
  long long sutures = 2, wraps = 1;
  long long k = 0, m = 0;
  std::string concat_case = "a";
  int samples = 64;
};

int emit(const CommandResult& r, const Options& opt) {
  const OutputFormat fmt = opt.format.empty() ? default_format() : parse_format(opt.format);
  const std::string text = r.render(fmt);
  if (opt.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(opt.output, std::ios::binary);
    if (!out) throw InputError("cannot open output file " + opt.output);
    out << text;
  }
  return r.exit_code();
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"tautkit: exact computations for taut foliations and fibered 3-manifolds"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "text or json (default from TAUTKIT_FORMAT, else text)")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--output", opt.output, "write the report to this file instead of stdout");

  std::function<CommandResult()> action;

  auto* vm = app.add_subcommand("vmatrix", "V for genus g and det(V - Id)");
  vm->add_option("--genus", opt.genus, "genus, at least 6")->required();
  vm->callback([&] { action = [&] { return cmd_vmatrix(opt.genus); }; });

  auto* wm = app.add_subcommand("wmatrix", "the genus-3 matrix W and the word action of f");
  wm->callback([&] { action = [] { return cmd_wmatrix(); }; });

  auto* cand = app.add_subcommand("candidates", "dual norm ball and Euler class candidates");
  cand->add_option("--genus", opt.genus, "genus, at least 3")->required();
  cand->add_option("--input", opt.input, "norm specification JSON");
  cand->callback([&] {
    action = [&] {
      std::optional<NormSpec> spec;
      if (!opt.input.empty()) spec = norm_spec_from_json(read_json_file(opt.input));
      return cmd_candidates(opt.genus, spec);
    };
  });

  auto* pen = app.add_subcommand("penner", "validate a Penner word and its homological action");
  auto* pen_in = pen->add_option("--input", opt.input, "curve system and word JSON");
  pen->add_option("--genus", opt.genus, "use the bundled chain system extended to this genus")
      ->excludes(pen_in);
  pen->callback([&] {
    action = [&]() -> CommandResult {
      if (!opt.input.empty()) {
        const auto [sys, word] = penner_input_from_json(read_json_file(opt.input));
        return cmd_penner(sys, word);
      }
      if (opt.genus == 0 || opt.genus == 3) {
        const auto [sys, word] = genus3_penner_system();
        return cmd_penner(sys, word);
      }
      const auto [sys, word] = extend_to_genus(opt.genus);
      return cmd_penner(sys, word);
    };
  });

  auto* sut = app.add_subcommand("sutured", "sutured Euler characteristic tools");
  sut->require_subcommand(1);
  auto* chi = sut->add_subcommand("chi", "Euler characteristic of a surface with corners");
  chi->add_option("--base-chi", opt.base_chi)->required();
  chi->add_option("--convex", opt.convex)->check(CLI::NonNegativeNumber);
  chi->add_option("--concave", opt.concave)->check(CLI::NonNegativeNumber);
  chi->callback([&] { action = [&] { return cmd_sutured_chi({opt.base_chi, opt.convex, opt.concave}); }; });

  auto* core = sut->add_subcommand("core-disk", "meridian disk of a sutured solid torus");
  core->add_option("--wraps", opt.wraps, "longitudinal winding of each suture")->required()
      ->check(CLI::PositiveNumber);
  core->add_option("--sutures", opt.sutures, "number of sutures (even)")->check(CLI::PositiveNumber);
  core->callback([&] {
    action = [&] {
      if (opt.sutures % 2 != 0) throw InputError("--sutures must be even");
      return cmd_sutured_core_disk({opt.sutures, opt.wraps, 1});
    };
  });

  auto* pair = sut->add_subcommand("pairing", "Euler class pairing from tangency data");
  pair->add_option("--input", opt.input, "tangency list JSON")->required();
  pair->callback([&] {
    action = [&] { return cmd_sutured_pairing(tangencies_from_json(read_json_file(opt.input))); };
  });

  auto* wit = sut->add_subcommand("witness", "semigroup witness that the identity is transversal");
  wit->add_option("--k", opt.k)->required();
  wit->add_option("--m", opt.m)->required();
  wit->callback([&] { action = [&] { return cmd_sutured_witness(opt.k, opt.m); }; });

  auto* hol = app.add_subcommand("holonomy", "piecewise-linear holonomy constructions");
  hol->require_subcommand(1);
  auto* tau = hol->add_subcommand("tau", "build tau for a concatenation case and check conjugacy");
  tau->add_option("--case", opt.concat_case, "a, b, c, d, e or f")->check(CLI::IsMember({"a", "b", "c", "d", "e", "f"}));
  tau->add_option("--samples", opt.samples, "number of sample points")->check(CLI::Range(16, 100000));
  tau->add_option("--input", opt.input, "JSON object with PL maps u and v");
  tau->callback([&] {
    action = [&] {
      PLHomeo u = bundled_u(), v = bundled_v();
      if (!opt.input.empty()) {
        const json j = read_json_file(opt.input);
        if (!j.is_object()) throw InputError("$: expected an object with fields u and v");
        if (!j.contains("u")) throw InputError("$.u: missing");
        if (!j.contains("v")) throw InputError("$.v: missing");
        u = pl_homeo_from_json(j["u"], "$.u");
        v = pl_homeo_from_json(j["v"], "$.v");
      }
      return cmd_holonomy_tau(u, v, parse_concat_case(opt.concat_case), opt.samples);
    };
  });

  auto* shift = hol->add_subcommand("is-shift", "test whether a PL map has no interior fixed points");
  shift->add_option("--input", opt.input, "PL map JSON")->required();
  shift->callback([&] { action = [&] { return cmd_holonomy_shift(pl_homeo_from_json(read_json_file(opt.input))); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsageError;
  }

  try {
    return emit(action(), opt);
  } catch (const InputError& e) {
    std::cerr << "tautkit: input error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "tautkit: input error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace tautkit::cli
