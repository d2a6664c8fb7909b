#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace mlhc::cli;

  CLI::App app{"mlhc - Hamilton cycles in the middle levels graph"};
  app.require_subcommand(1);

  Config cfg;
  std::string format = "bits";
  std::string map = "M";
  std::string word;
  int override_n = 0;
  bool dot = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "instance size (vertices have length 2n+1)");
    sub->add_option("--max-n-override", override_n, "raise the size caps to this n");
  };

  auto* generate = app.add_subcommand("generate", "print a Hamilton cycle of G_n");
  add_common(generate);
  generate->add_option("--format", format, "bits or flips")->check(CLI::IsMember({"bits", "flips"}));
  generate->add_flag("--closed", cfg.closed, "repeat the start vertex at the end");

  auto* two_factor = app.add_subcommand("two-factor", "print the cycles of the 2-factor M+N");
  add_common(two_factor);

  auto* sigma = app.add_subcommand("sigma", "print the flip sequence of a Dyck word");
  add_common(sigma);
  sigma->add_option("word", word, "Dyck word")->required();

  auto* matching = app.add_subcommand("matching", "map stdin vertices through M, N, Minv or Ninv");
  add_common(matching);
  matching->add_option("--map", map, "M, N, Minv or Ninv")->check(CLI::IsMember({"M", "N", "Minv", "Ninv"}));

  auto* six = app.add_subcommand("six-cycles", "list gadget 6-cycle patterns");
  add_common(six);

  auto* aux = app.add_subcommand("aux-graph", "print the auxiliary graph in DOT");
  add_common(aux);
  aux->add_flag("--dot", dot, "DOT output (the default)");

  auto* verify = app.add_subcommand("verify", "check a cycle read from stdin");
  add_common(verify);
  verify->add_flag("--closed", cfg.closed, "input repeats the start vertex at the end");

  auto* stats = app.add_subcommand("stats", "print structure counts as JSON");
  add_common(stats);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (override_n > 0) cfg.max_n_override = override_n;
  cfg.format = format == "flips" ? Format::flips : Format::bits;

  if (generate->parsed()) return cmd_generate(cfg, std::cout, std::cerr);
  if (two_factor->parsed()) return cmd_two_factor(cfg, std::cout, std::cerr);
  if (sigma->parsed()) return cmd_sigma(cfg, word, std::cout, std::cerr);
  if (matching->parsed()) return cmd_matching(cfg, map, std::cin, std::cout, std::cerr);
  if (six->parsed()) return cmd_six_cycles(cfg, std::cout, std::cerr);
  if (aux->parsed()) return cmd_aux_graph(cfg, std::cout, std::cerr);
  if (verify->parsed()) return cmd_verify(cfg, std::cin, std::cout, std::cerr);
  if (stats->parsed()) return cmd_stats(cfg, std::cout, std::cerr);
  return kUsage;
}
