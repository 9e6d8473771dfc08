#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "eqchi/cli.hpp"

namespace {

using eqchi::cli::Format;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact equivariant Euler characteristics of partition posets"};
  app.require_subcommand(1);

  std::string format = "csv";
  eqchi::cli::Caps caps;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json", "pretty"}));
  app.add_option("--cap-points", caps.points, "Largest G-set size for G-partition enumeration");
  app.add_option("--cap-group-order", caps.group_order, "Largest group order for subgroup enumeration");
  app.add_option("--cap-bell", caps.bell, "Largest n for enumerations over all partitions of n points");
  app.add_option("--threads", caps.threads, "Worker threads");
  app.add_option("--seed", caps.seed, "Seed for randomized corpora");
  app.fallthrough();

  int rmax = 5, nmax = 15;
  auto* table = app.add_subcommand("table", "Closed-form chi~_r for n = 2..nmax");
  table->add_option("rmax", rmax, "Largest r")->required();
  table->add_option("nmax", nmax, "Largest n")->required();

  std::size_t n = 0;
  unsigned r = 0;
  std::string chi_method = "closed";
  auto* chi = app.add_subcommand("chi", "chi~_r of the partition poset of n points under Sigma_n");
  chi->add_option("n", n)->required();
  chi->add_option("r", r)->required();
  chi->add_option("--method", chi_method, "bruteforce, abelian, isoclasses, closed or all");

  std::string group;
  std::size_t degree = 0;
  auto* matrix = app.add_subcommand("stirling-matrix", "G-Stirling matrix of a group");
  matrix->add_option("group", group, "Group spec, e.g. S3 or perm:6:(1 2 3),(4 5)")->required();
  matrix->add_option("degree", degree)->required();

  std::string mu_method = "solve";
  auto* hm = app.add_subcommand("higher-moebius", "Higher Moebius numbers mu_i(H,G)");
  hm->add_option("group", group)->required();
  hm->add_option("degree", degree)->required();
  hm->add_option("--method", mu_method, "solve or direct");

  std::string gset = "natural";
  auto* gp = app.add_subcommand("gpartitions", "G-partition poset with weights");
  gp->add_option("group", group)->required();
  gp->add_option("gset", gset, "natural, or orbits such as 2*S3+S6");

  std::string suite = "all";
  auto* ver = app.add_subcommand("verify", "Run a verification suite");
  ver->add_option("suite", suite, "arith, figures, stirling, theorem, groups, posets or all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return eqchi::cli::kUsage;
  }

  return eqchi::cli::run_guarded(
      [&] {
        const Format f = eqchi::cli::parse_format(format);
        auto& out = std::cout;
        auto& err = std::cerr;
        if (*table) return eqchi::cli::run_table(rmax, nmax, f, out, err);
        if (*chi) return eqchi::cli::run_chi(n, r, chi_method, f, caps, out, err);
        if (*matrix) return eqchi::cli::run_stirling_matrix(group, degree, f, caps, out, err);
        if (*hm) return eqchi::cli::run_higher_moebius(group, degree, mu_method, f, caps, out, err);
        if (*gp) return eqchi::cli::run_gpartitions(group, gset, f, caps, out, err);
        return eqchi::cli::run_verify(suite, f, caps, out, err);
      },
      std::cerr);
}
