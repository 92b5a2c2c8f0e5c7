#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "badc/double_cycle.hpp"
#include "badc/dynamics.hpp"
#include "badc/network.hpp"
#include "badc/reports.hpp"
#include "badc/seqdsl.hpp"
#include "badc/verify.hpp"

namespace {

using badc::Config;
using badc::DoubleCycle;

constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

std::string automaton_label(const DoubleCycle& dc, int i) {
  if (i == 0) return "c";
  if (i < dc.n) return "l" + std::to_string(i);
  return "r" + std::to_string(i - dc.n + 1);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw badc::Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct GraphArgs {
  std::string kind = "positive";
  int n = 2;
  int m = 2;
  int cap = badc::kMaxAutomata;
  bool parallel = false;
  std::string format = "text";

  void attach(CLI::App* cmd, bool with_format = true) {
    cmd->add_option("--kind", kind, "positive, mixed or negative")->required();
    cmd->add_option("-n", n, "left cycle size")->required()->check(CLI::Range(1, 24));
    cmd->add_option("-m", m, "right cycle size")->required()->check(CLI::Range(1, 24));
    cmd->add_option("--cap", cap, "enumeration cap in automata (default 24)");
    cmd->add_flag("--parallel", parallel, "build the transition graph in parallel");
    if (with_format) {
      cmd->add_option("--format", format, "text or json")
          ->check(CLI::IsMember({"text", "json"}));
    }
  }

  DoubleCycle build() const {
    return badc::build_canonical(badc::kind_from_string(kind), n, m);
  }

  badc::TransitionGraph graph(const DoubleCycle& dc) const {
    return parallel ? badc::build_graph(dc.net, cap)
                    : badc::build_graph_serial(dc.net, cap);
  }
};

int cmd_attractors(const GraphArgs& args) {
  const DoubleCycle dc = args.build();
  const badc::TransitionGraph g = args.graph(dc);
  const badc::AttractorAnalysis an = badc::analyze(g);
  const badc::ConvergenceReport conv = badc::convergence(g, an);

  if (args.format == "json") {
    std::cout << badc::dynamics_report(dc, g, an, conv).dump(2) << "\n";
    return 0;
  }
  std::size_t transient_count = 0;
  for (char r : an.recurrent_mask) {
    if (!r) ++transient_count;
  }
  std::cout << "kind " << to_string(dc.kind) << ", n=" << dc.n << ", m=" << dc.m
            << ": " << g.state_count << " configurations\n";
  std::cout << an.attractors.size() << " attractor(s)\n";
  int idx = 1;
  for (const badc::Attractor& a : an.attractors) {
    std::cout << "  #" << idx++ << ": size " << a.size() << ", " << to_string(a.kind())
              << ", smallest " << format_config(dc, a.smallest()) << "\n";
  }
  std::cout << "transient configurations: " << transient_count << "\n";
  std::cout << "network convergence time: " << conv.network_time << "\n";
  return 0;
}

int cmd_export(const GraphArgs& args, const std::string& out_path) {
  const DoubleCycle dc = args.build();
  const badc::TransitionGraph g = args.graph(dc);
  const badc::AttractorAnalysis an = badc::analyze(g);
  auto label = [&](Config x) { return format_config(dc, x); };
  if (out_path.empty() || out_path == "-") {
    badc::write_dot(std::cout, g, an, label);
    return 0;
  }
  std::ofstream out(out_path);
  if (!out) throw badc::Error("cannot write '" + out_path + "'");
  badc::write_dot(out, g, an, label);
  return 0;
}

int cmd_run(const GraphArgs& args, const std::string& start_text,
            const std::string& prog_path, bool certify, bool strict_expand) {
  const DoubleCycle dc = args.build();
  Config start = 0;
  badc::seq::Program program;
  try {
    start = parse_config(dc, start_text);
    program = badc::seq::parse(read_file(prog_path));
  } catch (const badc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  badc::seq::ExecOptions opt;
  opt.expand_undefined_error = strict_expand;
  const badc::seq::Trace trace = badc::seq::exec(dc, start, program, opt);

  if (args.format == "json") {
    std::cout << badc::trace_report(dc, trace).dump(2) << "\n";
  } else {
    badc::seq::write_trace_text(std::cout, dc, trace);
  }
  if (certify && !trace.certified) {
    std::cerr << "certification failed (see trace notes)\n";
    return kExitVerifyFailure;
  }
  return 0;
}

badc::CycleSigns read_signs(const std::string& path) {
  const nlohmann::json j = nlohmann::json::parse(read_file(path));
  auto read_side = [&](const char* key) {
    std::vector<int> out;
    for (const auto& v : j.at(key)) {
      if (v.is_number_integer()) {
        out.push_back(v.get<int>());
      } else {
        const std::string s = v.get<std::string>();
        if (s == "+") {
          out.push_back(1);
        } else if (s == "-") {
          out.push_back(-1);
        } else {
          throw badc::Error("arc signs must be +1/-1 or \"+\"/\"-\"");
        }
      }
    }
    return out;
  };
  badc::CycleSigns signs{read_side("left"), read_side("right")};
  signs.validate();
  return signs;
}

int cmd_canonicalize(const std::string& signs_path, const std::string& format) {
  const badc::CycleSigns signs = read_signs(signs_path);
  const badc::CanonicalForm canon = badc::canonicalize(signs);
  const DoubleCycle& dc = canon.canonical;

  std::vector<int> flipped;
  for (int i = 0; i < dc.size(); ++i) {
    if (canon.relabel.flips(i)) flipped.push_back(i);
  }
  if (format == "json") {
    nlohmann::json labels = nlohmann::json::array();
    for (int i : flipped) labels.push_back(automaton_label(dc, i));
    std::cout << nlohmann::json{{"schemaVersion", badc::kSchemaVersion},
                                {"kind", to_string(dc.kind)},
                                {"n", dc.n},
                                {"m", dc.m},
                                {"mirrored", canon.mirrored},
                                {"flips", flipped},
                                {"flipLabels", labels}}
                     .dump(2)
              << "\n";
    return 0;
  }
  std::cout << "kind: " << to_string(dc.kind) << "\n";
  std::cout << "n=" << dc.n << " m=" << dc.m << "\n";
  std::cout << "mirrored: " << (canon.mirrored ? "yes" : "no") << "\n";
  if (flipped.empty()) {
    std::cout << "flips: none (identity relabeling)\n";
  } else {
    std::cout << "flips:";
    for (int i : flipped) std::cout << " " << automaton_label(dc, i);
    std::cout << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& suite, int max_bits, int exhaustive_bits,
               int samples, const std::vector<int>& quad_sizes, int n, int m,
               std::uint64_t seed, const std::string& format) {
  badc::VerifyLimits lim;
  lim.exhaustive_bits = exhaustive_bits;
  lim.seed = seed;

  auto pair_or_default = [&](int min_n, int min_m) {
    if (n > 0 && m > 0) return std::vector<std::pair<int, int>>{{n, m}};
    return badc::size_pairs(min_n, min_m, max_bits);
  };

  badc::VerificationReport rep;
  if (suite == "all") {
    badc::VerifyAllOptions opt;
    opt.max_bits = max_bits;
    opt.limits = lim;
    opt.quadratic_sizes = quad_sizes;
    opt.theorem_samples = samples > 0 ? samples : opt.theorem_samples;
    rep = badc::verify_all(opt);
  } else if (suite == "positive") {
    rep = badc::verify_positive(pair_or_default(2, 2), lim);
  } else if (suite == "mixed") {
    rep = badc::verify_mixed(pair_or_default(2, 2), lim);
  } else if (suite == "negative") {
    rep = badc::verify_negative(pair_or_default(1, 1), lim);
  } else if (suite == "quadratic") {
    rep = badc::verify_quadratic(quad_sizes);
  } else if (suite == "copy") {
    rep = badc::verify_copy_exhaustive(n > 0 ? n : 4, m > 0 ? m : 4);
  } else if (suite == "canonicalization") {
    rep = badc::verify_canonicalization(n > 0 ? n : 3, m > 0 ? m : 3,
                                        samples > 0 ? samples : 50, seed);
  } else if (suite == "cycles") {
    rep = badc::verify_cycle_theorems(samples > 0 ? samples : 200, 8, seed);
  } else {
    std::cerr << "unknown suite '" << suite << "'\n";
    return kExitUsage;
  }

  if (format == "json") {
    std::cout << badc::verification_report(rep).dump(2) << "\n";
  } else {
    badc::write_report_text(std::cout, rep);
  }
  return rep.all_passed() ? 0 : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"asynchronous dynamics laboratory for Boolean automata double-cycles"};
  app.require_subcommand(1);

  GraphArgs attractor_args;
  CLI::App* attractors = app.add_subcommand("attractors", "enumerate attractors");
  attractor_args.attach(attractors);

  GraphArgs export_args;
  std::string export_path;
  CLI::App* exp = app.add_subcommand("export", "write the transition graph as DOT");
  export_args.attach(exp, /*with_format=*/false);
  exp->add_option("-o,--out", export_path, "output path (default stdout)");

  GraphArgs run_args;
  std::string start_text;
  std::string prog_path;
  bool certify = false;
  bool strict_expand = false;
  CLI::App* run = app.add_subcommand("run", "execute an update-sequence program");
  run_args.attach(run);
  run->add_option("--start", start_text, "start configuration \"(wl,wr)\"")->required();
  run->add_option("--prog", prog_path, "program file")->required();
  run->add_flag("--certify", certify, "exit 1 unless every macro ran certified");
  run->add_flag("--strict-expand", strict_expand,
                "treat expand without a pattern boundary as an error");

  std::string suite = "all";
  int max_bits = 13;
  int exhaustive_bits = 9;
  int samples = 0;
  int vn = 0, vm = 0;
  std::uint64_t seed = 1;
  std::vector<int> quad_sizes = {2, 4, 6};
  std::string verify_format = "text";
  CLI::App* verify = app.add_subcommand("verify", "run the verification suites");
  verify->add_option("--suite", suite,
                     "all, positive, mixed, negative, quadratic, copy, "
                     "canonicalization or cycles");
  verify->add_flag_callback("--all", [&] { suite = "all"; },
                            "run every suite (default)");
  verify->add_option("--max-size", max_bits, "largest n+m-1 to enumerate");
  verify->add_option("--exhaustive-size", exhaustive_bits,
                     "largest n+m-1 replayed from every start");
  verify->add_option("--samples", samples, "sample count for randomized suites");
  verify->add_option("--sizes", quad_sizes, "even sizes for the quadratic suite")
      ->delimiter(',');
  verify->add_option("-n", vn, "restrict to one left size");
  verify->add_option("-m", vm, "restrict to one right size");
  verify->add_option("--seed", seed, "seed for randomized suites");
  verify->add_option("--format", verify_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  std::string signs_path;
  std::string canon_format = "text";
  CLI::App* canon = app.add_subcommand("canonicalize", "reduce explicit arc signs");
  canon->add_option("--signs", signs_path,
                    "JSON file {\"left\": [...], \"right\": [...]} of +1/-1 arc signs")
      ->required();
  canon->add_option("--format", canon_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : kExitUsage;
  }

  try {
    if (*attractors) return cmd_attractors(attractor_args);
    if (*exp) return cmd_export(export_args, export_path);
    if (*run) {
      return cmd_run(run_args, start_text, prog_path, certify, strict_expand);
    }
    if (*verify) {
      return cmd_verify(suite, max_bits, exhaustive_bits, samples, quad_sizes, vn,
                        vm, seed, verify_format);
    }
    if (*canon) return cmd_canonicalize(signs_path, canon_format);
  } catch (const badc::seq::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const badc::seq::MacroPreconditionError& e) {
    std::cerr << "macro precondition violated: " << e.what() << "\n";
    return kExitVerifyFailure;
  } catch (const badc::CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const badc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
