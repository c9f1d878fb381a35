#include <cerny/cli.hpp>

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  using cerny::cli::RunConfig;
  RunConfig cfg;

  CLI::App app{"Reset words and row monomial matrices of synchronizing automata"};
  app.require_subcommand(1);

  std::size_t q = 0;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-o", cfg.output, "Write the report to this path");
    sub->add_flag("--json", cfg.json, "Structured (JSON) output");
    sub->add_option("--limit", cfg.limit, "State limit for exact reset-word search")
        ->check(CLI::Range(1, 64));
  };
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("automaton", cfg.input, "Automaton file ('-' for stdin)")->required();
  };
  auto add_q = [&](CLI::App* sub, const std::string& help) {
    return sub->add_option("--q", q, help);
  };

  auto* check = app.add_subcommand("check", "Synchronization test and shortest reset word");
  add_input(check);
  add_common(check);

  auto* matrix = app.add_subcommand("matrix", "Print the matrix M_u of a word");
  add_input(matrix);
  add_common(matrix);
  matrix->add_option("--word", cfg.word, "Word as letters (a, b, ...)");
  matrix->add_flag("--dot", cfg.dot, "Emit the automaton as Graphviz DOT instead");

  auto* trace = app.add_subcommand("trace", "Prefix trace of a reset word");
  add_input(trace);
  add_common(trace);
  trace->add_option("--word", cfg.word, "Reset word (default: shortest)");
  auto* trace_q = add_q(trace, "Use a shortest reset word ending in this state");

  auto* probe = app.add_subcommand("probe", "Run the cell-allocation probe");
  add_input(probe);
  add_common(probe);
  probe->add_option("--word", cfg.word, "Reset word (default: shortest)");
  auto* probe_q = add_q(probe, "Target state (default 0)");

  auto* lemmas = app.add_subcommand("lemmas", "Run the matrix invariant suites");
  add_common(lemmas);
  lemmas->add_option("--seed", cfg.seed, "Random seed");
  auto* lemmas_q = add_q(lemmas, "Sink column for the equation suite (default 0)");

  auto* gen = app.add_subcommand("gen", "Generate an automaton file");
  add_common(gen);
  gen->add_option("generator", cfg.generator, "cerny | random")
      ->required()
      ->check(CLI::IsMember({"cerny", "random"}));
  gen->add_option("--n", cfg.n, "State count")->required();
  gen->add_option("--k", cfg.k, "Alphabet size (random)");
  gen->add_option("--seed", cfg.seed, "Random seed");
  gen->add_flag("--dot", cfg.dot, "Emit Graphviz DOT");

  auto* enumerate = app.add_subcommand("enum", "Exhaustive bound check over all tables");
  add_common(enumerate);
  enumerate->add_option("--n", cfg.n, "State count")->required();
  enumerate->add_option("--k", cfg.k, "Alphabet size");
  enumerate->add_option("--budget", cfg.budget, "Maximum number of tables");
  enumerate->add_option("--jobs", cfg.jobs, "Worker count");
  std::string filter;
  enumerate->add_option("--filter", filter, "Restrict reporting to synchronizing automata")
      ->check(CLI::IsMember({"sync"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cerny::cli::usage_error;
  }

  cfg.subcommand = app.get_subcommands().front()->get_name();
  cfg.filter_sync = filter == "sync";
  for (auto* opt : {trace_q, probe_q, lemmas_q})
    if (opt->count() > 0) cfg.q = static_cast<cerny::State>(q);

  return cerny::cli::run(cfg, std::cout, std::cerr);
}
