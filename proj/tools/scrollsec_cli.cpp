#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "scrollsec/report.hpp"

using namespace scrollsec;

namespace {

void add_common(CLI::App* sub, RunConfig& c) {
  sub->add_option("--q", c.q, "odd prime field size");
  sub->add_option("--dmax", c.d_max, "largest extension degree searched (1 or 2)");
  sub->add_option("--seed", c.seed, "RNG seed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Secant loci of rational normal scrolls over finite fields"};
  app.require_subcommand(1);
  RunConfig c;
  std::string out;
  app.add_option("--out", out, "write the JSON report to this file");

  auto* classify = app.add_subcommand("classify", "classify one external point");
  add_common(classify, c);
  classify->add_option("--scroll", c.scroll, "scroll literal, e.g. S(1,2)+cone(0)")->required();
  classify->add_option("--point", c.point, "comma-separated coordinates")->required();

  auto* sample = app.add_subcommand("sample", "stratum census over random points");
  add_common(sample, c);
  sample->add_option("--scroll", c.scroll)->required();
  sample->add_option("--n", c.n, "number of points");
  sample->add_option("--sampler", c.sampler, "mixture or uniform");

  auto* atlas = app.add_subcommand("atlas", "Del Pezzo loci within bounds, with sampled verification");
  add_common(atlas, c);
  atlas->add_option("--max-deg", c.bounds.max_deg);
  atlas->add_option("--max-n", c.bounds.max_n);
  atlas->add_option("--max-h", c.bounds.max_h);
  atlas->add_option("--n", c.n, "samples inside and outside each locus")->default_val(50);

  auto* oracle = app.add_subcommand("oracle-check", "compare the fast path with brute force");
  add_common(oracle, c);
  oracle->add_option("--scroll", c.scroll)->required();
  oracle->add_option("--n", c.n, "number of points")->default_val(25);
  oracle->add_option("--sampler", c.sampler, "mixture or uniform");
  oracle->add_option("--budget", c.budget, "brute-force step budget");
  oracle->preparse_callback([&](std::size_t) { c.q = 5; });

  for (auto* sub : {classify, sample, atlas, oracle})
    sub->add_option("--out", out, "write the JSON report to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const RunResult r = run_command(app.get_subcommands().front()->get_name(), c);
  const std::string text = render(r.report);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!f) {
      std::cerr << "cannot write " << out << "\n";
      return kExitUsage;
    }
    f << text;
  }
  if (r.report.contains("error")) std::cerr << r.report["message"].get<std::string>() << "\n";
  return r.exit_code;
}
