// One PASS/FAIL line per acceptance criterion. Exit status is non-zero if
// any selected criterion fails.

#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "kprime/verify.hpp"

int main(int argc, char** argv) {
  kprime::verify::Options  opts;
  std::vector<std::string> ids;
  opts.corpus_dir = KPRIME_CORPUS_DIR;
  if (char const* env = std::getenv("KPRIME_SEED")) {
    opts.seed = std::strtoull(env, nullptr, 10);
  }

  CLI::App app{"kprime acceptance suite"};
  app.add_option("--criterion", ids, "Criterion id (repeatable); default all");
  app.add_option("--corpus", opts.corpus_dir, "Corpus directory")->capture_default_str();
  app.add_option("--seed", opts.seed, "Axiom sampling seed")->capture_default_str();
  app.add_option("--instances", opts.axiom_instances, "Instances per axiom")->capture_default_str();
  bool list = false;
  app.add_flag("--list", list, "List criteria and exit");
  CLI11_PARSE(app, argc, argv);

  if (list) {
    for (auto const& id : kprime::verify::criterion_ids()) {
      std::cout << id << "  " << kprime::verify::criterion_title(id) << "\n";
    }
    return 0;
  }
  if (ids.empty()) {
    ids = kprime::verify::criterion_ids();
  }
  int failed = 0;
  for (auto const& id : ids) {
    auto const r = kprime::verify::run_criterion(id, opts);
    std::cout << kprime::verify::format_line(r) << std::endl;
    failed += r.passed ? 0 : 1;
  }
  if (ids.size() > 1) {
    std::cout << (ids.size() - failed) << "/" << ids.size() << " criteria passed\n";
  }
  return failed == 0 ? 0 : 1;
}
