#include <algorithm>
#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "loopw/checker.hpp"
#include "loopw/functional.hpp"
#include "loopw/inference.hpp"
#include "loopw/obligations.hpp"
#include "loopw/parser.hpp"
#include "loopw/printer.hpp"

namespace fs = std::filesystem;
using namespace loopw;

namespace {

constexpr const char* kVersion = "loopw 1.0.0";

enum Exit { kOk = 0, kParse = 1, kCheck = 2, kUndischarged = 3, kEval = 4, kUsage = 64 };

struct Config {
  std::string verb;
  std::string input;
  std::vector<std::uint64_t> args;
  int verbosity = 1;
  bool uprint = false, print = false, pprint = false, form = false, fprint = false;
  bool strict = false, smt = false;
  std::uint64_t fuel = kDefaultFuel;
  std::optional<std::string> entry;
};

// `-pprint` / `-v2` style flags become `--pprint` / `--verbosity=2`.
std::vector<std::string> rewrite(int argc, char** argv) {
  std::vector<std::string> out;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a.size() == 3 && a[0] == '-' && a[1] == 'v' && a[2] >= '1' && a[2] <= '3')
      out.push_back("--verbosity=" + a.substr(2));
    else if (a.size() > 2 && a[0] == '-' && a[1] != '-' && !std::isdigit(static_cast<unsigned char>(a[1])))
      out.push_back("-" + a);
    else
      out.push_back(a);
  }
  return out;
}

std::string stem(const std::string& path) {
  fs::path p(path);
  return (p.parent_path() / p.stem()).string();
}

bool read_file(const std::string& path, std::string& text) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::stringstream ss;
  ss << in.rdbuf();
  text = ss.str();
  return true;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw std::runtime_error("cannot write " + path);
}

bool undischarged(const Obligations& obs) {
  for (const auto& ob : obs)
    if (discharge(ob) != Discharge::Proven) return true;
  return false;
}

int report_parse(const ParseError& e) {
  std::cerr << where(e.region) << ": parse: " << e.what();
  if (!e.expected.empty()) {
    std::cerr << " (expected";
    for (const auto& x : e.expected) std::cerr << " " << x;
    std::cerr << ")";
  }
  std::cerr << "\n";
  return kParse;
}

Region top_region(const std::string& file) {
  Region r;
  r.file = file;
  r.line = 1;
  r.col = 1;
  return r;
}

int functional_stage(const Config& c, const SeqP& proof, std::ostream& trace) {
  FTermP t;
  try {
    t = translate_program(proof);
  } catch (const TranslateError& e) {
    std::cerr << where(top_region(c.input)) << ": translate: " << e.what() << "\n";
    return kCheck;
  }
  if (auto d = fcheck(t, FFormula::truth())) {
    std::cerr << where(top_region(c.input)) << ": " << d->rule << ": " << d->message << "\n";
    return kCheck;
  }
  if (c.verbosity >= 2) trace << "functional derivation checked\n";
  if (c.fprint) write_file(stem(c.input) + ".fun", fprint(t, true));
  return kOk;
}

int run_infer(const Config& c, const std::string& text) {
  const SeqP src = parse_program(text, c.input);
  InferResult r;
  try {
    r = infer_program(src);
  } catch (const InferError& e) {
    std::cerr << format_diagnostic(e.diag, c.form) << "\n";
    return kCheck;
  }
  const std::string base = stem(c.input);
  write_file(base + ".typ",
             print_typ_view(r.proof, r.obligations, discharge_report(r.obligations), c.form));
  if (c.pprint) write_file(base + ".proof", print_proof(r.proof, r.obligations));
  if (c.uprint) write_file(base + ".cs", print_erased(src));
  if (c.print) write_file(base + ".rev.loop", print_source(src));
  if (c.smt) write_file(base + ".smt2", export_smtlib(r.obligations));
  if (c.verbosity >= 2) {
    CheckOptions opt;
    opt.verbosity = c.verbosity;
    opt.trace = &std::cout;
    check_program(r.proof, {}, opt);
    for (const auto& line : discharge_report(r.obligations)) std::cout << line << "\n";
  }
  if (c.strict && undischarged(r.obligations)) {
    std::cerr << where(top_region(c.input)) << ": obligations: undischarged obligations remain\n";
    return kUndischarged;
  }
  return kOk;
}

int run_check(const Config& c, const std::string& text) {
  const ProofFile pf = parse_proof(text, c.input);
  CheckOptions opt;
  opt.verbosity = c.verbosity;
  opt.trace = &std::cout;
  const CheckResult res = check_program(pf.body, {}, opt);
  if (!res.ok) {
    for (const auto& d : res.diagnostics) std::cerr << format_diagnostic(d, c.form) << "\n";
    return kCheck;
  }
  const std::string base = stem(c.input);
  if (c.uprint) write_file(base + ".pcs", print_erased(pf.body));
  if (c.smt) write_file(base + ".smt2", export_smtlib(pf.obligations));
  if (int rc = functional_stage(c, pf.body, std::cout)) return rc;
  if (c.strict && undischarged(pf.obligations)) {
    std::cerr << where(top_region(c.input)) << ": obligations: undischarged obligations remain\n";
    return kUndischarged;
  }
  return kOk;
}

int run_eval(const Config& c, const std::string& text) {
  SeqP proof;
  if (fs::path(c.input).extension() == ".loop") {
    try {
      proof = infer_program(parse_program(text, c.input)).proof;
    } catch (const InferError& e) {
      std::cerr << format_diagnostic(e.diag, c.form) << "\n";
      return kCheck;
    }
  } else {
    proof = parse_proof(text, c.input).body;
    const CheckResult res = check_program(proof);
    if (!res.ok) {
      for (const auto& d : res.diagnostics) std::cerr << format_diagnostic(d, c.form) << "\n";
      return kCheck;
    }
  }
  FTermP t;
  try {
    std::optional<Ident> entry;
    if (c.entry) entry = Ident(*c.entry);
    t = translate_run(proof, entry, c.args);
  } catch (const TranslateError& e) {
    std::cerr << where(top_region(c.input)) << ": translate: " << e.what() << "\n";
    return kCheck;
  }
  try {
    std::cout << to_string(*feval(t, c.fuel)) << "\n";
  } catch (const EvalError& e) {
    std::cerr << where(top_region(c.input)) << ": eval: " << e.what() << "\n";
    return kEval;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  Config c;
  CLI::App app{"LoopW proof inference, checking and evaluation", "loopw"};
  app.set_version_flag("--version", kVersion);
  app.add_option("verb", c.verb, "infer | check | run")
      ->required()
      ->check(CLI::IsMember({"infer", "check", "run"}));
  app.add_option("file", c.input, "input .loop or .proof file")->required();
  app.add_option("args", c.args, "numeric arguments for --entry (run)");
  app.add_option("--verbosity", c.verbosity, "1 low, 2 medium, 3 high (also -v1 -v2 -v3)")
      ->check(CLI::Range(1, 3));
  app.add_flag("--uprint", c.uprint, "erased pretty print (.cs / .pcs)");
  app.add_flag("--print", c.print, "pretty print the source (.rev.loop)");
  app.add_flag("--pprint", c.pprint, "complete inferred proof (.proof)");
  app.add_flag("--form", c.form, "show types as formulas");
  app.add_flag("--fprint", c.fprint, "erased functional translation (.fun)");
  app.add_flag("--strict", c.strict, "fail when obligations are not discharged");
  app.add_flag("--smt-export", c.smt, "write obligations as SMT-LIB (.smt2)");
  app.add_option("--fuel", c.fuel, "evaluation step limit");
  app.add_option("--entry", c.entry, "constant to apply when running");

  std::vector<std::string> args = rewrite(argc, argv);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n" << app.help();
    return kUsage;
  }

  std::string text;
  if (!read_file(c.input, text)) {
    std::cerr << where(top_region(c.input)) << ": io: cannot read " << c.input << "\n";
    return kParse;
  }
  try {
    if (c.verb == "infer") return run_infer(c, text);
    if (c.verb == "check") return run_check(c, text);
    return run_eval(c, text);
  } catch (const ParseError& e) {
    return report_parse(e);
  } catch (const std::exception& e) {
    std::cerr << where(top_region(c.input)) << ": error: " << e.what() << "\n";
    return kCheck;
  }
}
