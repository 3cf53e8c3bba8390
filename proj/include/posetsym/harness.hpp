#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "posetsym/poset.hpp"

namespace posetsym {

inline constexpr int kMaxLabeledEnumeration = 7;
inline constexpr int kMaxIsoEnumeration = 8;
inline constexpr int kMaxConjectureScan = 6;

// Every strict partial order on {0, ..., n-1} exactly once. Element n-1 is
// attached to each poset on n-1 elements through every compatible pair
// (down-set D, up-set U). Throws SizeError for n > 7.
void for_each_labeled_poset(int n, const std::function<void(const Poset&)>& visit);
// Labeled mode: the posets of for_each_labeled_poset. Iso mode: canonical
// representatives of the isomorphism classes sorted by canonical key (built
// by adding a maximal element to every class of size n-1); n <= 8.
std::vector<Poset> enumerate_posets(int n, bool up_to_iso);
std::uint64_t count_labeled_posets(int n);

struct Failure {
  std::string key;
  std::string check;
  std::string details;
  auto operator<=>(const Failure&) const = default;
};

struct VerificationReport {
  std::string suite;
  int n_max = 0;
  std::uint64_t checked = 0;
  std::vector<Failure> failures;
  double elapsed_seconds = 0;
  bool pass() const { return failures.empty(); }
};

const std::vector<std::string>& suite_names();
// Runs the named check over all isomorphism classes with at most n_max
// elements (pairs of classes for the product suites), sharded over `jobs`
// threads by a hash of the canonical key. Failures come back sorted, so the
// report does not depend on `jobs`. Throws UnknownSuite or SizeError.
VerificationReport run_suite(const std::string& suite, int n_max, int jobs = 1);

struct Counterexample {
  std::string key;
  std::string witness;
  auto operator<=>(const Counterexample&) const = default;
};

struct ConjectureReport {
  int id = 0;
  int n_max = 0;
  std::uint64_t posets = 0;
  std::uint64_t listings = 0;
  std::vector<Counterexample> counterexamples;
  // Violations of facts that must hold (sum of bucket sizes, the
  // automorphism lower bound). Empty unless the code is wrong.
  std::vector<Failure> assertion_failures;
  double elapsed_seconds = 0;
};

// Every class up to n_max and every reversing listing: reports pluckings
// with chi = 0.
ConjectureReport conjecture1_search(int n_max, int jobs = 1);
// Buckets all n! listings by plucking and compares the smallest bucket with
// the automorphism count.
ConjectureReport conjecture2_search(int n_max, int jobs = 1);

struct RevRow {
  std::string key;
  int n = 0;
  std::uint64_t reversing = 0;
  std::int64_t zeta1 = 0;
  std::string phi_summary;
};
std::vector<RevRow> rev_scan(int n_max, int jobs = 1);
void write_tsv(std::ostream& out, const std::vector<RevRow>& rows);

nlohmann::json to_json(const VerificationReport& r, bool with_timing = true);
nlohmann::json to_json(const ConjectureReport& r, bool with_timing = true);

}  // namespace posetsym
