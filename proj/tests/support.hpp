#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "loopw/functional.hpp"
#include "loopw/inference.hpp"
#include "loopw/program.hpp"

namespace loopw::testing {

inline const std::vector<std::string> kCorpus = {"add", "ack", "negation", "shiftreset"};

std::string read_text(const std::string& path);
std::string corpus_path(const std::string& name);
std::string corpus_source(const std::string& name);
InferResult infer_corpus(const std::string& name);
std::string corpus_proof(const std::string& name);

// Nested-loop multiplication, used as a second recursion oracle.
extern const char* const kMulSource;

// Outcome of checking a proof text: the rule of the first diagnostic,
// "ok" when accepted, "parse" when the text does not parse.
std::string check_outcome(const std::string& proof_text);

struct Mutation {
  std::string rule;
  std::string program;
  std::string find;
  std::string replace;
  bool all = false;
};

const std::vector<Mutation>& mutations();
std::string mutate(const Mutation& m, const std::string& text);

struct FreshnessCase {
  std::string condition;  // "t.proc", "t.call", "t.for"
  std::string rule;       // expected diagnostic rule
  std::string violating;
  std::string control;    // same program with the bound variable renamed
};

const std::vector<FreshnessCase>& freshness_cases();

// Random generators.
using Rng = std::mt19937_64;

Term random_term(Rng& rng, int depth, bool with_apps = true);
Formula random_formula(Rng& rng, int depth);
SeqP random_proof(Rng& rng, int depth);

// Property suites shared by the unit tests and the acceptance report.
struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;
  bool ok() const { return cases > 0 && failures == 0; }
};

PropertyResult prop_substitution(std::uint64_t seed, std::size_t n);
PropertyResult prop_env_split(std::uint64_t seed, std::size_t n);
PropertyResult prop_normalize_idempotent(std::uint64_t seed, std::size_t n);
PropertyResult prop_proven_sound(std::uint64_t seed, std::size_t assignments);
PropertyResult prop_rec_vs_loop(std::uint64_t max_n);
PropertyResult prop_roundtrip(std::uint64_t seed, std::size_t random_programs);

}  // namespace loopw::testing
