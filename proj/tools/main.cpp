// avalanche: analyze, construct, convert and verify Boolean functions by
// their avalanche characteristics.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "avalanche/anf.hpp"
#include "avalanche/construct.hpp"
#include "avalanche/formats.hpp"
#include "avalanche/report.hpp"
#include "avalanche/verify.hpp"

namespace {

using namespace avalanche;

// exit codes: 0 ok, 2 parse, 3 range, 4 construction precondition
constexpr int kExitParse = 2;
constexpr int kExitRange = 3;
constexpr int kExitConstruct = 4;

std::string read_input(const std::string& arg) {
  if (arg == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return arg;
}

BooleanFunction parse_function(const std::string& text,
                               const std::string& format,
                               std::optional<int> n) {
  if (format == "hex") return parse_hex(text);
  if (format == "anf") {
    if (!n) throw parse_error("--n is required for anf input");
    if (*n < 2 || *n > kMaxVars)
      throw range_error("variable count out of supported range 2..24");
    return from_anf(parse_anf_string(text, *n));
  }
  if (format == "blocks") return function_of(parse_block_string(text));
  throw parse_error("unknown format: " + format);
}

std::string render_function(const BooleanFunction& f,
                            const std::string& format) {
  if (format == "hex") return to_hex(f);
  if (format == "anf") return to_anf_string(to_anf(f));
  if (format == "blocks") return to_block_string(blockseq_of(f));
  throw parse_error("unknown format: " + format);
}

void print_report(const BooleanFunction& f, const std::string& source,
                  const std::string& output) {
  AnalysisReport r = analyze_function(f, source);
  if (output == "text")
    std::cout << render_table(r);
  else
    std::cout << serialize_report(r);
}

void print_construction(const BooleanFunction& f) {
  std::cout << "hex: " << to_hex(f) << "\n";
  std::cout << "anf: " << to_anf_string(to_anf(f)) << "\n";
  std::cout << "blocks: " << to_block_string(blockseq_of(f)) << "\n";
}

uint64_t parse_bit_vector(const std::string& s, int m, const char* what) {
  if (static_cast<int>(s.size()) != m)
    throw parse_error(std::string(what) + " must list " + std::to_string(m) +
                      " bits (x1 first)");
  uint64_t mask = 0;
  for (int j = 0; j < m; ++j) {
    if (s[j] != '0' && s[j] != '1')
      throw parse_error(std::string(what) + " must be a 0/1 string");
    if (s[j] == '1') mask |= uint64_t{1} << (m - 1 - j);
  }
  return mask;
}

AffineSpec parse_affine_spec(const std::string& s, int m) {
  std::string bits = s;
  bool constant = false;
  if (size_t slash = s.find('/'); slash != std::string::npos) {
    std::string c = s.substr(slash + 1);
    if (c != "0" && c != "1")
      throw parse_error("constant suffix must be /0 or /1");
    constant = c == "1";
    bits = s.substr(0, slash);
  }
  if (static_cast<int>(bits.size()) != m)
    throw construct_error("selection entries must list " + std::to_string(m) +
                          " coefficients (c1 first)");
  uint32_t coeffs = 0;
  for (int j = 0; j < m; ++j) {
    if (bits[j] != '0' && bits[j] != '1')
      throw parse_error("coefficients must be a 0/1 string");
    if (bits[j] == '1') coeffs |= uint32_t{1} << j;
  }
  return {coeffs, constant};
}

}  // namespace

namespace {

int run(int argc, char** argv) {
  CLI::App app{"local and global avalanche characteristics of Boolean functions"};
  app.set_help_flag("--help", "print usage");  // frees -h / --h for sac-concat
  app.set_help_all_flag("--help-all", "usage for every subcommand");
  app.require_subcommand(1);

  // analyze
  std::string an_input, an_format = "hex", an_output = "structured";
  std::optional<int> an_n;
  CLI::App* analyze_cmd =
      app.add_subcommand("analyze", "full indicator and bounds report");
  analyze_cmd->add_option("input", an_input,
                          "function (inline, file path, or - for stdin)")
      ->required();
  analyze_cmd->add_option("--format", an_format, "hex | anf | blocks")
      ->check(CLI::IsMember({"hex", "anf", "blocks"}));
  analyze_cmd->add_option("--n", an_n, "variable count (anf input)");
  analyze_cmd->add_option("--output", an_output, "structured | text")
      ->check(CLI::IsMember({"structured", "text"}));

  // convert
  std::string cv_input, cv_from = "hex", cv_to = "hex";
  std::optional<int> cv_n;
  CLI::App* convert_cmd =
      app.add_subcommand("convert", "translate between the three formats");
  convert_cmd->add_option("input", cv_input, "function text")->required();
  convert_cmd->add_option("--from", cv_from, "hex | anf | blocks")->required();
  convert_cmd->add_option("--to", cv_to, "hex | anf | blocks")->required();
  convert_cmd->add_option("--n", cv_n, "variable count (anf input)");

  // construct sac-concat
  CLI::App* construct_cmd =
      app.add_subcommand("construct", "build functions from the two recipes");
  construct_cmd->require_subcommand(1);
  std::string sc_h, sc_a, sc_output = "structured";
  int sc_b = 0;
  bool sc_analyze = false;
  CLI::App* sac_cmd = construct_cmd->add_subcommand(
      "sac-concat", "(h | h^g) or (h | h(x^a)^g) with g the inner parity");
  sac_cmd->add_option("--h", sc_h, "h as a hex truth table")->required();
  sac_cmd->add_option("--b", sc_b, "constant term of g")
      ->check(CLI::Range(0, 1));
  sac_cmd->add_option("--a", sc_a, "odd-weight shift (0/1 string, x1 first)");
  sac_cmd->add_flag("--analyze", sc_analyze, "append the full report");
  sac_cmd->add_option("--output", sc_output, "structured | text")
      ->check(CLI::IsMember({"structured", "text"}));

  // construct thm2
  int t2_n = 0;
  std::string t2_gran = "block", t2_output = "structured";
  std::vector<std::string> t2_g;
  bool t2_analyze = false;
  CLI::App* thm2_cmd = construct_cmd->add_subcommand(
      "thm2", "segment family over affine g_i and their opposites");
  thm2_cmd->add_option("--n", t2_n, "variable count, 2k>=8 or 2k+1>=9")
      ->required();
  thm2_cmd->add_option("--granularity", t2_gran, "block | bit")
      ->check(CLI::IsMember({"block", "bit"}));
  thm2_cmd->add_option("--g", t2_g,
                       "selection entry c1..cm[/const]; repeat per segment");
  thm2_cmd->add_flag("--analyze", t2_analyze, "append the full report");
  thm2_cmd->add_option("--output", t2_output, "structured | text")
      ->check(CLI::IsMember({"structured", "text"}));

  // verify
  std::string vf_suite;
  uint64_t vf_seed = kDefaultSeed;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "run a verification suite");
  verify_cmd
      ->add_option("suite", vf_suite,
                   "oracles | bounds | paper-examples | exhaustive-n3 | "
                   "thm1 | thm2")
      ->required();
  verify_cmd->add_option("--seed", vf_seed, "seed for randomized checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (analyze_cmd->parsed()) {
      BooleanFunction f =
          parse_function(read_input(an_input), an_format, an_n);
      print_report(f, an_format, an_output);
      return 0;
    }
    if (convert_cmd->parsed()) {
      BooleanFunction f = parse_function(read_input(cv_input), cv_from, cv_n);
      std::cout << render_function(f, cv_to) << "\n";
      return 0;
    }
    if (sac_cmd->parsed()) {
      BooleanFunction h = parse_hex(sc_h);
      std::optional<uint64_t> a;
      if (!sc_a.empty())
        a = parse_bit_vector(sc_a, h.num_vars(), "--a");
      SacConcatResult r = sac_concat(h, sc_b != 0, a);
      print_construction(r.f);
      std::cout << "balanced: " << (r.balanced ? "yes" : "no") << "\n";
      if (sc_analyze) print_report(r.f, "construct:sac-concat", sc_output);
      return 0;
    }
    if (thm2_cmd->parsed()) {
      std::optional<std::vector<AffineSpec>> selection;
      if (!t2_g.empty()) {
        if (t2_n < 8 || t2_n > kMaxVars)
          throw construct_error("n must satisfy n=2k>=8 or n=2k+1>=9");
        selection.emplace();
        for (const std::string& s : t2_g)
          selection->push_back(parse_affine_spec(s, theorem2_segment_vars(t2_n)));
      }
      Granularity gran =
          t2_gran == "bit" ? Granularity::Bit : Granularity::Block;
      BooleanFunction f = theorem2_family(
          t2_n, selection ? &*selection : nullptr, gran);
      print_construction(f);
      if (t2_analyze) print_report(f, "construct:thm2", t2_output);
      return 0;
    }
    if (verify_cmd->parsed()) {
      SuiteResult r = run_suite(vf_suite, vf_seed);
      size_t passed = 0;
      for (const CheckResult& c : r.checks) {
        std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
        if (!c.detail.empty()) std::cout << " -- " << c.detail;
        std::cout << "\n";
        if (c.pass) ++passed;
      }
      std::cout << "suite " << r.suite << ": " << passed << "/"
                << r.checks.size() << " checks passed\n";
      return r.all_pass() ? 0 : 1;
    }
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const range_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRange;
  } catch (const construct_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConstruct;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (...) {
    std::cerr << "error: unexpected failure\n";
    return 1;
  }
}
