#include <susyw/jsonio.hpp>
#include <susyw/verify.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

namespace {

using namespace susyw;

struct Options {
  std::string family = "gl";
  std::string variant = "n+1";
  int n = 1;
  std::string format = "text";
  std::optional<int> floor;
  std::string k = "1";
  bool all = false;
  std::string output;
  int verbosity = 0;
};

std::optional<Family> resolve_family(const std::string& fam, const std::string& variant) {
  if (fam == "gl") {
    if (variant == "n+1") return Family::GlNp1;
    if (variant == "n-1") return Family::GlNm1;
  } else if (fam == "sl") {
    if (variant == "n+1") return Family::SlNp1;
    if (variant == "n-1") return Family::SlNm1;
  } else if (fam == "osp") {
    if (variant == "2n+1|2n") return Family::OspOddP;
    if (variant == "2n-1|2n") return Family::OspOddM;
    if (variant == "2n|2n") return Family::OspEven0;
    if (variant == "2n+2|2n") return Family::OspEvenP2;
  }
  return std::nullopt;
}

void add_common(CLI::App* cmd, Options& opt) {
  cmd->add_option("--family", opt.family, "algebra family: gl, sl or osp");
  cmd->add_option("--variant", opt.variant,
                  "presentation variant: n+1, n-1 (gl/sl) or 2n+1|2n, 2n-1|2n, 2n|2n, 2n+2|2n");
  cmd->add_option("--n", opt.n, "rank parameter")->check(CLI::PositiveNumber);
  cmd->add_option("--format", opt.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--floor", opt.floor, "exactness floor override (<= 0)");
  cmd->add_option("--k", opt.k, "coupling constant of the current bracket");
  cmd->add_option("--output", opt.output, "write the result to a file instead of stdout");
  cmd->add_flag("-v,--verbose", opt.verbosity, "more output");
}

int emit(const Options& opt, const std::string& text) {
  if (opt.output.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(opt.output);
  if (!f) {
    std::cerr << "cannot open " << opt.output << "\n";
    return 2;
  }
  f << text;
  return 0;
}

int run_command(const std::string& cmd, const Options& opt) {
  auto fam = resolve_family(opt.family, opt.variant);
  if (!fam) {
    std::cerr << "unknown family/variant combination\n";
    return 2;
  }
  std::optional<int> floor = opt.floor;
  if (!floor) {
    if (const char* env = std::getenv("SUSYW_FLOOR")) floor = std::atoi(env);
  }
  if (floor && *floor > 0) {
    std::cerr << "floor must be <= 0\n";
    return 2;
  }
  AlgebraSpec spec(*fam, opt.n);
  Engine eng(spec, rat_parse(opt.k));
  int wf = floor.value_or(default_floor(spec));

  if (cmd == "generate" || cmd == "verify" || cmd == "weights") {
    GeneratorSet gs = generators(eng, wf);
    Report rep;
    if (cmd == "weights") {
      rep = verify_weights(eng, gs);
    } else {
      rep = verify_all(eng, gs);
    }
    if (cmd == "generate") {
      std::string text;
      if (opt.format == "json") {
        text = emit_generators(eng, gs, !opt.all, &rep).dump(2) + "\n";
      } else {
        text = render_text(eng, gs, !opt.all);
        if (opt.verbosity > 0) text += render_report_text(rep);
      }
      int rc = emit(opt, text);
      if (rc) return rc;
      return rep.all_pass() ? 0 : 3;
    }
    std::string text = opt.format == "json" ? emit_report(eng, cmd, rep).dump(2) + "\n"
                                            : render_report_text(rep);
    int rc = emit(opt, text);
    if (rc) return rc;
    if (!rep.all_pass()) {
      if (opt.format != "json" && rep.first_failure())
        std::cerr << "failed: " << rep.first_failure()->name << "\n";
      return 3;
    }
    return 0;
  }
  if (cmd == "check-axioms" || cmd == "identities") {
    Report rep = cmd == "check-axioms" ? check_axioms(eng) : identities(eng, wf);
    std::string text = opt.format == "json" ? emit_report(eng, cmd, rep).dump(2) + "\n"
                                            : render_report_text(rep);
    int rc = emit(opt, text);
    if (rc) return rc;
    if (!rep.all_pass()) {
      if (opt.format != "json" && rep.first_failure())
        std::cerr << "failed: " << rep.first_failure()->name << "\n";
      return 3;
    }
    return 0;
  }
  std::cerr << "unknown command\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact generators of supersymmetric classical W-algebras"};
  app.require_subcommand(1);
  Options opt;
  const char* names[] = {"generate", "verify", "check-axioms", "weights", "identities"};
  const char* descr[] = {
      "construct the free generators and emit them",
      "construct the generators and run the full verification suite",
      "check skewsymmetry and the jacobi identity on all basis pairs/triples",
      "report the conformal weights of the generators",
      "run the construction identity suite for the presentation",
  };
  for (int i = 0; i < 5; ++i) {
    CLI::App* c = app.add_subcommand(names[i], descr[i]);
    add_common(c, opt);
    if (std::string(names[i]) == "generate")
      c->add_flag("--all", opt.all, "emit every coefficient, not only the minimal set");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  try {
    for (auto* sub : app.get_subcommands()) return run_command(sub->get_name(), opt);
  } catch (const susyw::FloorExhausted& e) {
    std::cerr << "floor exhausted: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
