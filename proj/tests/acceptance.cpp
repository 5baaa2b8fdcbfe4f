#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "loopw/functional.hpp"
#include "loopw/obligations.hpp"
#include "loopw/printer.hpp"
#include "support.hpp"

namespace fs = std::filesystem;
using namespace loopw;
using namespace loopw::testing;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (cond || !ok) {
      if (!cond) detail += "; " + what;
      ok = ok && cond;
      return;
    }
    ok = false;
    detail = what;
  }
};

struct Run {
  int code = -1;
  std::string out, err;
};

class Workspace {
public:
  Workspace() {
    std::random_device rd;
    dir_ = fs::temp_directory_path() / ("loopw-acceptance-" + std::to_string(rd()));
    fs::create_directories(dir_);
    for (const auto& name : kCorpus) fs::copy_file(corpus_path(name), dir_ / (name + ".loop"));
  }
  ~Workspace() {
    std::error_code ec;
    fs::remove_all(dir_, ec);
  }

  Run cli(const std::string& args) const {
    const fs::path out = dir_ / "stdout.txt", err = dir_ / "stderr.txt";
    const std::string cmd = "cd '" + dir_.string() + "' && '" + LOOPW_CLI_PATH + "' " + args +
                            " >'" + out.string() + "' 2>'" + err.string() + "'";
    Run r;
    const int status = std::system(cmd.c_str());
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = read_text(out.string());
    r.err = read_text(err.string());
    return r;
  }

  std::string file(const std::string& name) const { return read_text((dir_ / name).string()); }
  bool exists(const std::string& name) const { return fs::exists(dir_ / name); }

private:
  fs::path dir_;
};

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

std::string trim(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
  return s;
}

Verdict addition_end_to_end(const Workspace& w) {
  Verdict v;
  const Run r = w.cli("infer add.loop");
  v.require(r.code == 0, "infer exit " + std::to_string(r.code) + ": " + r.err);
  v.require(r.out.empty() && r.err.empty(), "infer is not silent");
  if (!v.ok) return v;
  const std::string typ = w.file("add.typ");
  const std::string table = "\n1: |- (x = (x + 0))\n2: |- (s((x + i)) = (x + s(i)))\n";
  v.require(typ.find(table) != std::string::npos, "obligation table differs");
  v.require(count(typ, "|- ") == 2, "table has extra entries");
  v.require(typ.find("[N:nat((3 + 5))]") != std::string::npos, "missing [N:nat((3 + 5))]");
  // Structural shape of the derivation view: every source line appears in
  // order, each with its right-hand judgement.
  const std::vector<std::pair<std::string, std::string>> rows = {
      {"cst p_add = proc(in X, Y; out Z) {", "-(X:nat(x), Y:nat(y))[Z:(0 = 0)]"},
      {"Z := X;", "[Z:nat((x + 0))]    by #1"},
      {"for i := 0 until Y {", "-(i:nat(i))[Z:nat((x + i))]"},
      {"inc(Z);", "[Z:nat(s((x + i)))]"},
      {"}Z;", "[Z:nat((x + y))]    by #2"},
      {"};", "(p_add:proc({x, y} in nat(x), nat(y); out nat((x + y))))"},
      {"var N := *;", "[N:(0 = 0)]"},
      {"p_add(3, 5; N);", "[N:nat((3 + 5))]"},
  };
  std::istringstream in(typ);
  std::string line;
  std::size_t at = 0;
  while (at < rows.size() && std::getline(in, line)) {
    if (line.find(rows[at].first) == std::string::npos) continue;
    v.require(line.find(rows[at].second) != std::string::npos,
              "row '" + rows[at].first + "' lacks " + rows[at].second);
    ++at;
  }
  v.require(at == rows.size(), "derivation rows out of order");
  return v;
}

Verdict obligation_discharge(const Workspace& w) {
  Verdict v;
  const InferResult r = infer_corpus("add");
  v.require(r.obligations.size() == 2, "expected two obligations");
  for (const auto& ob : r.obligations)
    v.require(discharge(ob) == Discharge::Proven, "#" + std::to_string(ob.id) + " not proven");
  const Run run = w.cli("infer add.loop --smt-export");
  v.require(run.code == 0 && w.exists("add.smt2"), "smt export failed: " + run.err);
  if (!v.ok) return v;
  const std::string smt = w.file("add.smt2");
  v.require(count(smt, "(check-sat)") == 2, "expected 2 check-sat");
  v.require(count(smt, "(push 1)") == 2 && count(smt, "(pop 1)") == 2, "goals are not isolated");
  v.require(count(smt, "(assert (! (not (= ") == 2, "goals are not negated equalities");
  v.require(smt.find(":named ob1)") != std::string::npos &&
                smt.find(":named ob2)") != std::string::npos,
            "goals are not named");
  v.require(w.file("add.typ").find("1: proven\n2: proven") != std::string::npos,
            "discharge report missing from add.typ");
  return v;
}

Verdict corpus_closure(const Workspace& w) {
  Verdict v;
  for (const auto& name : kCorpus) {
    const Run inf = w.cli("infer " + name + ".loop -pprint");
    v.require(inf.code == 0, name + " infer exit " + std::to_string(inf.code) + ": " + inf.err);
    if (inf.code != 0) continue;
    const Run chk = w.cli("check " + name + ".proof -fprint");
    v.require(chk.code == 0, name + " check exit " + std::to_string(chk.code) + ": " + chk.err);
    v.require(chk.out.empty(), name + " check is not silent");
    v.require(w.exists(name + ".fun"), name + ".fun not written");
  }
  return v;
}

Verdict translation_fidelity() {
  Verdict v;
  const FTermP t = translate_program(infer_corpus("add").proof);
  const std::string expected =
      "(let (p_add) (fn (X Y) (let (Z) X (let (Z) (rec Y Z (fn (i) (fn (Z) (let (Z) (succ Z) Z))))"
      " Z))) (let (N) () (let (N) (app p_add 3 5) ())))";
  const std::string shape = fshape(t);
  v.require(shape == expected, "shape " + shape);
  v.require(count(fprint(t, true), "Rec (") == 1, "expected one Rec");
  return v;
}

Verdict evaluation_adequacy(const Workspace& w) {
  Verdict v;
  const Run add = w.cli("run add.proof");
  v.require(add.code == 0 && trim(add.out) == std::to_string(3 + 5),
            "add evaluates to '" + trim(add.out) + "' " + add.err);
  const Run a = w.cli("run shiftreset.proof --entry a");
  v.require(a.code == 0 && trim(a.out) == "5", "a evaluates to '" + trim(a.out) + "' " + a.err);
  const Run app = w.cli("run add.proof --entry p_add 3 5");
  v.require(app.code == 0 && trim(app.out) == "8", "p_add(3, 5) = '" + trim(app.out) + "'");
  return v;
}

Verdict mutation_suite() {
  Verdict v;
  std::size_t hit = 0;
  for (const auto& m : mutations()) {
    const std::string got = check_outcome(mutate(m, corpus_proof(m.program)));
    if (got == m.rule)
      ++hit;
    else
      v.require(false, m.rule + " mutation gave " + got);
  }
  v.require(hit == 18 && mutations().size() == 18, std::to_string(hit) + "/18 rules");
  if (v.ok) v.detail = "18/18 rules";
  return v;
}

Verdict property_suites() {
  Verdict v;
  const std::vector<PropertyResult> rs = {
      prop_substitution(1, 2000),         prop_env_split(2, 2000),
      prop_normalize_idempotent(3, 10000), prop_proven_sound(4, 1000),
      prop_rec_vs_loop(50),               prop_roundtrip(5, 500),
  };
  for (const auto& r : rs) {
    v.require(r.ok(), r.name + ": " + std::to_string(r.failures) + "/" + std::to_string(r.cases) +
                          " failed, first: " + r.first_failure.substr(0, 200));
  }
  if (v.ok) {
    std::size_t cases = 0;
    for (const auto& r : rs) cases += r.cases;
    v.detail = std::to_string(rs.size()) + " suites, " + std::to_string(cases) + " cases";
  }
  return v;
}

Verdict freshness() {
  Verdict v;
  for (const auto& c : freshness_cases()) {
    const std::string bad = check_outcome(c.violating);
    const std::string good = check_outcome(c.control);
    v.require(bad == c.rule, c.condition + " violation gave " + bad);
    v.require(good == "ok", c.condition + " control gave " + good);
  }
  return v;
}

}  // namespace

int main() {
  Workspace w;
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"addition end-to-end", [&] { return addition_end_to_end(w); }},
      {"obligation discharge", [&] { return obligation_discharge(w); }},
      {"corpus closure", [&] { return corpus_closure(w); }},
      {"translation fidelity", translation_fidelity},
      {"evaluation adequacy", [&] { return evaluation_adequacy(w); }},
      {"mutation suite", mutation_suite},
      {"property suites", property_suites},
      {"freshness side conditions", freshness},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.ok = false;
      v.detail = std::string("exception: ") + e.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    std::cout << "C" << i + 1 << " " << (v.ok ? "PASS" : "FAIL") << " " << criteria[i].first;
    if (!v.detail.empty()) std::cout << " (" << v.detail << ")";
    std::cout << " [" << ms << " ms]\n";
    if (!v.ok) ++failed;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
