/*
 *   Copyright 2026 The troptrans Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace troptrans::cli;
  CLI::App app{"Transients and periods of max-plus matrix powers"};
  app.require_subcommand(1);

  AnalyzeArgs an;
  auto*       analyze = app.add_subcommand("analyze", "Analyze a matrix");
  analyze->add_option("input,--input", an.input, "Matrix file (JSON or text)")
      ->required();
  analyze->add_option("--format", an.format, "json or text");
  analyze->add_option("--output", an.output, "Output file (default stdout)");
  analyze->add_option("--period", an.period,
                      "Period for rows; enables non-critical rows");
  analyze->add_option("--cap", an.cap, "Largest exponent to compute");
  analyze->add_option("--factorization", an.factorization,
                      "JSON file with V and W for the rank bounds");
  analyze->add_option("--tolerance", an.tolerance,
                      "Comparison tolerance for max-times-float input");

  PumpArgs pa;
  auto*    pump = app.add_subcommand("pump", "Pump a walk to the Wielandt window");
  pump->add_option("input,--input", pa.input, "Digraph as a matrix file")->required();
  pump->add_option("--hamiltonian", pa.hamiltonian, "Cycle as 1-based labels, e.g. 1,2,3")
      ->required();
  pump->add_option("--walk", pa.walk, "Walk as 1-based labels")->required();
  pump->add_option("--output", pa.output, "Output file (default stdout)");

  VerifyArgs va;
  auto*      verify = app.add_subcommand("verify", "Run a property suite");
  verify->add_option("suite", va.suite,
                     "main1 | main2 | lemmas | boolean-classics | pumping")
      ->required();
  verify->add_option("--trials", va.trials, "Number of instances");
  verify->add_option("--seed", va.seed, "Base seed");
  verify->add_option("--nmax", va.nmax, "Largest dimension");
  verify->add_option("--threads", va.threads, "Worker threads (default TROPTRANS_THREADS)");
  verify->add_option("--output", va.output, "JSON report file (default stdout)");

  GenArgs ga;
  auto*   gen = app.add_subcommand("gen", "Generate a reproducible instance");
  gen->add_option("--n", ga.n, "Dimension");
  gen->add_option("--planted", ga.planted, "Cycle lengths, e.g. 6,4");
  gen->add_option("--low-rank", ga.low_rank, "Planted factorization width");
  gen->add_flag("--boolean", ga.boolean, "All finite entries 0");
  gen->add_option("--density", ga.density, "Edge probability");
  gen->add_option("--offset", ga.offset, "Added to every finite entry");
  gen->add_option("--seed", ga.seed, "Seed");
  gen->add_option("--format", ga.format, "json or text");
  gen->add_option("--output", ga.output, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : parse_error;
  }
  if (*analyze) {
    return cmd_analyze(an, std::cout, std::cerr);
  }
  if (*pump) {
    return cmd_pump(pa, std::cout, std::cerr);
  }
  if (*verify) {
    return cmd_verify(va, std::cout, std::cerr);
  }
  return cmd_gen(ga, std::cout, std::cerr);
}
