// Command line front end. Talks to the library through the C API only.

#include <CLI11.hpp>

#include <cstdio>
#include <string>

#include "hecke0.h"

namespace {

void add_common(CLI::App* cmd, std::string* format, int* max_n,
                unsigned long long* seed) {
  cmd->add_option("--format", *format, "output format: pretty, json or csv");
  cmd->add_option("--max-n", *max_n, "size cap for guarded computations");
  cmd->add_option("--seed", *seed, "seed for randomized checks");
}

int emit(hk_ctx* ctx, char* text, int status) {
  if (text) {
    std::fputs(text, stdout);
    hk_string_free(text);
  } else {
    std::fprintf(stderr, "error: %s\n", hk_last_error(ctx));
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"descent class numbers and 0-Hecke module characteristics"};
  app.require_subcommand(1);

  int n = 0;
  long long q = 0;
  int trials = 0;
  int max_n = 0;
  unsigned long long seed = 0;
  bool want_qt = false;
  std::string alpha, mu, module_name, suite;
  std::string mode = "plain";
  std::string format = "pretty";

  CLI::App* rib = app.add_subcommand(
      "ribbon", "count a descent class and its q, t and (q,t) refinements");
  rib->add_option("--n", n, "total size; with no --alpha, list every class");
  rib->add_option("--alpha", alpha, "composition, comma separated parts");
  rib->add_option("--q", q, "prime power for the (q,t) refinement");
  rib->add_flag("--qt", want_qt, "include the (q,t) refinement (needs --q)");
  add_common(rib, &format, &max_n, &seed);

  CLI::App* chr = app.add_subcommand(
      "char", "characteristic and decomposition of a module");
  chr->add_option("--module", module_name,
                  "regular, projective, simple, coinvariant, springer or flag")
      ->required();
  chr->add_option("--n", n, "size parameter");
  chr->add_option("--alpha", alpha, "composition for projective or simple");
  chr->add_option("--mu", mu, "partition, decreasing comma separated parts");
  chr->add_option("--q", q, "prime power for the flag module");
  chr->add_option("--mode", mode, "grading: plain, t, q or qt");
  add_common(chr, &format, &max_n, &seed);

  CLI::App* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("--suite", suite, "suite name")->required();
  ver->add_option("--n", n, "override the suite size");
  ver->add_option("--q", q, "override the field size");
  ver->add_option("--trials", trials, "override the randomized trial count");
  add_common(ver, &format, &max_n, &seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : HK_USAGE;
  }

  hk_ctx* ctx = hk_ctx_new(max_n, seed);
  if (!ctx) {
    std::fprintf(stderr, "error: out of memory\n");
    return HK_USAGE;
  }

  int status = HK_OK;
  char* text = nullptr;
  if (rib->parsed()) {
    if (want_qt && q == 0) {
      std::fprintf(stderr, "error: --qt needs --q\n");
      hk_ctx_free(ctx);
      return HK_USAGE;
    }
    text = hk_ribbon_report(ctx, n, alpha.c_str(), q, format.c_str(), &status);
  } else if (chr->parsed()) {
    text = hk_characteristic_report(ctx, module_name.c_str(), n, alpha.c_str(),
                                    mu.c_str(), q, mode.c_str(), format.c_str(),
                                    &status);
  } else {
    text = hk_verify_suite(ctx, suite.c_str(), n, q, trials, format.c_str(),
                           &status);
  }

  int rc = emit(ctx, text, status);
  hk_ctx_free(ctx);
  return rc;
}
