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

// Subcommands of the troptrans tool. Each returns the process exit code and
// writes to the given streams, so the tests can drive them directly.
//
// Exit codes: 0 success, 1 verification failure, 2 parse or usage error,
// 3 semantic error (for example a nilpotent matrix).

#ifndef TROPTRANS_TOOLS_COMMANDS_HPP
#define TROPTRANS_TOOLS_COMMANDS_HPP

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "troptrans/troptrans.hpp"

namespace troptrans::cli {

  enum Exit : int {
    ok           = 0,
    verify_fail  = 1,
    parse_error  = 2,
    semantic     = 3,
  };

  inline std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw ParseError("cannot read '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  /// Writes to `path`, or to `out` when the path is empty.
  inline void emit(std::string const& text, std::string const& path,
                   std::ostream& out) {
    if (path.empty()) {
      out << text;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
      throw InvalidArgument("cannot write '" + path + "'");
    }
    f << text;
  }

  /// "1,2,3" with 1-based labels to 0-based nodes.
  inline std::vector<std::size_t> parse_node_list(std::string const& s,
                                                  std::size_t        n) {
    std::vector<std::size_t> out;
    std::stringstream        ss(s);
    std::string              tok;
    while (std::getline(ss, tok, ',')) {
      tok = troptrans::detail::trim(tok);
      if (!troptrans::detail::all_digits(tok)) {
        throw ParseError("malformed node label '" + tok + "'");
      }
      auto v = std::stoull(tok);
      if (v < 1 || v > n) {
        throw ParseError("node label " + tok + " outside 1.." + std::to_string(n));
      }
      out.push_back(static_cast<std::size_t>(v - 1));
    }
    if (out.empty()) {
      throw ParseError("empty node list");
    }
    return out;
  }

  inline std::vector<std::size_t> parse_length_list(std::string const& s) {
    std::vector<std::size_t> out;
    std::stringstream        ss(s);
    std::string              tok;
    while (std::getline(ss, tok, ',')) {
      tok = troptrans::detail::trim(tok);
      if (!troptrans::detail::all_digits(tok)) {
        throw ParseError("malformed cycle length '" + tok + "'");
      }
      out.push_back(std::stoull(tok));
    }
    return out;
  }

  inline json labels(std::vector<std::size_t> const& nodes) {
    json j = json::array();
    for (auto v : nodes) {
      j.push_back(v + 1);
    }
    return j;
  }

  struct AnalyzeArgs {
    std::string                input;
    std::string                format = "json";
    std::string                output;
    std::optional<std::size_t> period;
    std::optional<std::size_t> cap;
    std::string                factorization;
    std::optional<double>      tolerance;
  };

  namespace detail {
    inline json bounds_json(NodeBounds const& nb) {
      json j;
      j["wielandt"]           = nb.wielandt;
      j["dulmage_mendelsohn"] = nb.dulmage_mendelsohn;
      j["schwarz"]            = nb.schwarz ? json(*nb.schwarz) : json(nullptr);
      j["kim"]                = nb.kim ? json(*nb.kim) : json(nullptr);
      j["min"]                = nb.min();
      if (nb.h) {
        j["h"] = *nb.h;
      }
      return j;
    }

    template <typename S>
    json transient_json(Matrix<S> const& a, std::size_t k, bool column,
                        TransientOptions const& opts) {
      auto const m = column ? a.transpose() : a;
      try {
        auto rep = row_transient(m, k, opts);
        json j{{"transient", rep.transient}, {"period", rep.period},
               {"searched_up_to", rep.searched_up_to}};
        if (critical_graph(m).is_critical(k)) {
          j["least_period"] = least_eventual_period_row(m, k);
        }
        return j;
      } catch (CapExceeded const& e) {
        return json{{"transient", nullptr}, {"error", e.what()}};
      }
    }

    template <typename S>
    json analysis(Matrix<S> const& a, AnalyzeArgs const& args,
                  std::optional<Factorization<Rational>> const& f) {
      std::size_t const n  = a.dim();
      auto const        cg = critical_graph(a);
      json              r;
      r["n"]           = n;
      r["lambda"]      = cg.lambda.to_string();
      bool const irr   = is_irreducible(a);
      r["irreducible"] = irr;
      if (irr) {
        auto const d       = digraph_of(a);
        r["cyclicity"]     = cyclicity(d);
        json sizes         = json::array();
        for (auto const& cls : cyclicity_classes(d)) {
          sizes.push_back(cls.size());
        }
        r["cyclicity_class_sizes"] = sizes;
      } else {
        r["cyclicity"]             = nullptr;
        r["cyclicity_class_sizes"] = nullptr;
      }
      json comps = json::array();
      for (auto const& c : cg.components) {
        comps.push_back(json{{"nodes", labels(c.nodes)},
                             {"cyclicity", c.cyclicity},
                             {"girth", c.girth},
                             {"size", c.size()}});
      }
      r["critical_components"] = comps;
      r["period"]              = cg.period();

      std::vector<NodeBounds> rank_bounds;
      if constexpr (std::is_same_v<S, Rational>) {
        if (f) {
          rank_bounds = main2_bounds(a, *f);
          r["factorization_width"] = f->width();
        }
      }
      json nodes = json::array();
      for (std::size_t k = 0; k < n; ++k) {
        bool const crit = cg.is_critical(k);
        if (!crit && !args.period) {
          continue;
        }
        TransientOptions opts;
        opts.period = args.period;
        opts.cap    = args.cap;
        if (!crit && !opts.cap) {
          opts.cap = static_cast<std::size_t>(
                         4 * wielandt_number(static_cast<std::int64_t>(n)))
                     + 100;
        }
        json node;
        node["node"]     = k + 1;
        node["critical"] = crit;
        node["row"]      = transient_json(a, k, false, opts);
        node["column"]   = transient_json(a, k, true, opts);
        if (crit) {
          node["bounds"] = bounds_json(main1_bounds_for(a, cg, k));
          for (auto const& nb : rank_bounds) {
            if (nb.node == k) {
              node["rank_bounds"] = bounds_json(nb);
            }
          }
        }
        nodes.push_back(node);
      }
      r["nodes"] = nodes;
      if (irr) {
        std::size_t const cap =
            args.cap.value_or(static_cast<std::size_t>(
                                  4 * wielandt_number(static_cast<std::int64_t>(n)))
                              + 100);
        try {
          auto rep    = matrix_transient(a, cap, args.period);
          r["matrix"] = json{{"transient", rep.transient},
                             {"period", rep.period},
                             {"searched_up_to", rep.searched_up_to}};
        } catch (CapExceeded const& e) {
          r["matrix"] = json{{"transient", nullptr}, {"error", e.what()}};
        }
      }
      return r;
    }

    inline std::string analysis_text(json const& r) {
      std::ostringstream o;
      auto               num = [](json const& v) {
        return v.is_null() ? std::string("-") : v.dump();
      };
      o << "n: " << r["n"] << "\n";
      o << "lambda: " << r["lambda"].get<std::string>() << "\n";
      o << "irreducible: " << (r["irreducible"].get<bool>() ? "yes" : "no")
        << "\n";
      o << "cyclicity: " << num(r["cyclicity"]) << "\n";
      o << "period: " << r["period"] << "\n";
      for (auto const& c : r["critical_components"]) {
        o << "component " << c["nodes"].dump() << ": cyclicity "
          << c["cyclicity"] << ", girth " << c["girth"] << "\n";
      }
      for (auto const& nd : r["nodes"]) {
        o << "node " << nd["node"] << ": row T=" << num(nd["row"]["transient"])
          << " p=" << num(nd["row"].value("period", json())) << ", column T="
          << num(nd["column"]["transient"]);
        if (nd.contains("bounds")) {
          auto const& b = nd["bounds"];
          o << ", bounds W=" << b["wielandt"] << " DM=" << b["dulmage_mendelsohn"]
            << " Schwarz=" << num(b["schwarz"]) << " Kim=" << num(b["kim"]);
        }
        if (nd.contains("rank_bounds")) {
          auto const& b = nd["rank_bounds"];
          o << ", rank bounds W=" << b["wielandt"] << " DM="
            << b["dulmage_mendelsohn"] << " Schwarz=" << num(b["schwarz"])
            << " Kim=" << num(b["kim"]) << " h=" << b["h"];
        }
        o << "\n";
      }
      if (r.contains("matrix")) {
        o << "matrix: T=" << num(r["matrix"]["transient"]) << "\n";
      }
      return o.str();
    }
  }  // namespace detail

  inline int cmd_analyze(AnalyzeArgs const& args, std::ostream& out,
                         std::ostream& err) {
    if (args.format != "json" && args.format != "text") {
      err << "error: --format must be json or text\n";
      return parse_error;
    }
    MatrixDocument                         doc;
    std::optional<Factorization<Rational>> f;
    try {
      doc = parse_document(read_file(args.input));
      if (!args.factorization.empty()) {
        if (doc.convention != Convention::max_plus) {
          throw ParseError("a factorization needs a max-plus document");
        }
        f = parse_factorization(read_file(args.factorization));
      }
    } catch (Error const& e) {
      err << "error: " << e.what() << "\n";
      return parse_error;
    }
    if (args.tolerance) {
      scalar_traits<double>::set_tolerance(*args.tolerance);
    }
    try {
      json r;
      if (doc.convention == Convention::max_plus) {
        r = detail::analysis(to_exact(doc), args, f);
      } else {
        r = detail::analysis(to_approx(doc), args, f);
      }
      r["convention"] = to_string(doc.convention);
      if (!doc.name.empty()) {
        r["name"] = doc.name;
      }
      emit(args.format == "json" ? r.dump(2) + "\n" : detail::analysis_text(r),
           args.output, out);
    } catch (AcyclicMatrix const&) {
      err << "error: matrix is nilpotent (its digraph has no cycle)\n";
      return semantic;
    } catch (ParseError const& e) {
      err << "error: " << e.what() << "\n";
      return parse_error;
    } catch (Error const& e) {
      err << "error: " << e.what() << "\n";
      return semantic;
    }
    return ok;
  }

  struct PumpArgs {
    std::string input;
    std::string hamiltonian;
    std::string walk;
    std::string output;
  };

  inline int cmd_pump(PumpArgs const& args, std::ostream& out,
                      std::ostream& err) {
    Digraph d;
    Walk    ham, w;
    try {
      auto doc = parse_document(read_file(args.input));
      d        = digraph_of(to_approx(doc));
      ham.nodes = parse_node_list(args.hamiltonian, d.node_count());
      if (ham.nodes.size() == 1 || ham.nodes.front() != ham.nodes.back()) {
        ham.nodes.push_back(ham.nodes.front());
      }
      w.nodes = parse_node_list(args.walk, d.node_count());
    } catch (Error const& e) {
      err << "error: " << e.what() << "\n";
      return parse_error;
    }
    try {
      auto const        res = cycle_replace_detailed(d, ham, w);
      std::size_t const n   = d.node_count();
      auto const [lo, hi]   = pumping_window(n);
      auto const len        = res.walk.length();
      json       r;
      r["walk"]           = labels(res.walk.nodes);
      r["length"]         = len;
      r["input_length"]   = w.length();
      r["case"]           = std::string(1, res.case_label);
      r["padding_copies"] = res.padding_copies;
      r["window"]         = {lo, hi};
      r["in_window"]      = len >= lo && len <= hi;
      r["congruent"]      = len % n == w.length() % n;
      r["endpoints"]      = res.walk.start() == w.start() && res.walk.end() == w.end();
      r["valid_walk"]     = is_walk_in(d, res.walk);
      emit(r.dump(2) + "\n", args.output, out);
    } catch (Error const& e) {
      err << "error: " << e.what() << "\n";
      return semantic;
    }
    return ok;
  }

  struct VerifyArgs {
    std::string                suite;
    std::size_t                trials = 100;
    std::uint64_t              seed   = 0;
    std::optional<std::size_t> nmax;
    std::string                output;
    std::size_t                threads = 0;
  };

  inline int cmd_verify(VerifyArgs const& args, std::ostream& out,
                        std::ostream& err) {
    auto const& names = suite_names();
    if (std::find(names.begin(), names.end(), args.suite) == names.end()) {
      err << "error: unknown suite '" << args.suite << "'\n";
      return parse_error;
    }
    SuiteOptions opt;
    opt.suite   = args.suite;
    opt.trials  = args.trials;
    opt.seed    = args.seed;
    opt.nmax    = args.nmax.value_or(args.suite == "boolean-classics" ? 4 : 8);
    opt.threads = args.threads;
    SuiteReport rep;
    try {
      rep = run_suite(opt);
    } catch (Error const& e) {
      err << "error: " << e.what() << "\n";
      return semantic;
    }
    auto text = to_json(rep).dump(2) + "\n";
    if (args.output.empty()) {
      out << text;
    } else {
      emit(text, args.output, out);
    }
    err << "suite " << rep.suite << ": " << rep.instances << " instance(s), "
        << rep.violations.size() << " violation(s)\n";
    return rep.ok() ? ok : verify_fail;
  }

  struct GenArgs {
    std::size_t   n = 4;
    std::string   planted;
    std::size_t   low_rank = 0;
    bool          boolean  = false;
    double        density  = 0.4;
    std::string   offset   = "0";
    std::uint64_t seed     = 0;
    std::string   output;
    std::string   format = "json";
  };

  inline int cmd_gen(GenArgs const& args, std::ostream& out, std::ostream& err) {
    GenSpec spec;
    try {
      spec.n       = args.n;
      spec.density = args.density;
      spec.seed    = args.seed;
      auto off     = parse_weight(args.offset);
      if (off.is_bottom()) {
        throw ParseError("offset must be finite");
      }
      spec.offset = off.value();
      int modes   = (args.planted.empty() ? 0 : 1) + (args.low_rank ? 1 : 0)
                  + (args.boolean ? 1 : 0);
      if (modes > 1) {
        throw ParseError("--planted, --low-rank and --boolean are exclusive");
      }
      if (args.format != "json" && args.format != "text") {
        throw ParseError("--format must be json or text");
      }
      if (!args.planted.empty()) {
        spec.structure = Structure::planted_cycles;
        spec.planted   = parse_length_list(args.planted);
      } else if (args.low_rank) {
        spec.structure = Structure::low_rank;
        spec.rank      = args.low_rank;
      } else if (args.boolean) {
        spec.structure = Structure::boolean;
      }
    } catch (Error const& e) {
      err << "error: " << e.what() << "\n";
      return parse_error;
    }
    try {
      std::ostringstream name;
      name << "gen n=" << spec.n << " " << to_string(spec.structure);
      if (!args.planted.empty()) {
        name << " " << args.planted;
      }
      if (args.low_rank) {
        name << " r=" << args.low_rank;
      }
      name << " seed=" << spec.seed;
      json        j;
      std::string text;
      if (spec.structure == Structure::low_rank) {
        auto [a, f]        = gen_low_rank(spec);
        j                  = to_json(document_from_matrix(a, name.str()));
        j["factorization"] = factorization_to_json(f);
        text               = to_text(document_from_matrix(a));
      } else {
        auto a = gen_irreducible(spec);
        j      = to_json(document_from_matrix(a, name.str()));
        text   = to_text(document_from_matrix(a));
      }
      emit(args.format == "json" ? j.dump(2) + "\n" : text, args.output, out);
    } catch (Error const& e) {
      err << "error: " << e.what() << "\n";
      return parse_error;
    }
    return ok;
  }

}  // namespace troptrans::cli

#endif  // TROPTRANS_TOOLS_COMMANDS_HPP
