#include "posetsym/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <variant>

#include "posetsym/borderpoints.hpp"
#include "posetsym/canonical.hpp"
#include "posetsym/error.hpp"
#include "posetsym/harness.hpp"
#include "posetsym/linfun.hpp"
#include "posetsym/sym.hpp"
#include "posetsym/text_io.hpp"

namespace posetsym {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<Poset> posets_only(const std::vector<Structure>& all, const std::string& command) {
  std::vector<Poset> out;
  for (const Structure& s : all) {
    if (!std::holds_alternative<Poset>(s)) throw UsageError(command + " expects posets, not digraphs");
    out.push_back(std::get<Poset>(s));
  }
  return out;
}

nlohmann::json expand(const Poset& p, const std::string& basis) {
  const QsymElement l = linear_function(p);
  if (basis == "M") return to_json(l);
  if (basis == "F") return to_json(m_to_f(l));
  const auto b = parse_sym_basis(basis);
  if (!b) throw UsageError("unknown basis: " + basis);
  return to_json(change_basis(detect_symmetric(l), *b));
}

nlohmann::json listing_json(const Listing& w) {
  nlohmann::json j = nlohmann::json::array();
  for (int v : w) j.push_back(v + 1);
  return j;
}

nlohmann::json poly_json(const Poset& p) {
  const Polynomial l = linear_polynomial(p);
  nlohmann::json coeffs = nlohmann::json::array();
  for (const Rational& c : l.coefficients()) coeffs.push_back(to_string(c));
  return {{"coefficients", coeffs}, {"text", l.to_string("m")}};
}

nlohmann::json factor_json(const Poset& p) {
  nlohmann::json factors = nlohmann::json::array();
  for (Mask block : factor_blocks(p)) {
    nlohmann::json elems = nlohmann::json::array();
    for_each_bit(block, [&](int v) { elems.push_back(v + 1); });
    factors.push_back({{"elements", elems}, {"key", canonical_key(restrict_standardize(p, block))}});
  }
  return {{"factors", factors}, {"irreducible", factors.size() <= 1}};
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linear quasisymmetric functions, pluckings and mountains of finite posets"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out_path;
  app.add_option("--out", out_path, "Write results to this file instead of stdout");

  std::string file;
  std::string basis = "M";
  std::string suite;
  int n = 0;
  int jobs = 1;
  int conjecture_id = 1;
  bool iso = false;
  bool count_only = false;

  auto* expand_cmd = app.add_subcommand("expand", "L_P in a basis (M F m p e h s)");
  expand_cmd->add_option("file", file)->required();
  expand_cmd->add_option("--basis", basis)->check(CLI::IsMember({"M", "F", "m", "p", "e", "h", "s"}));
  auto* poly_cmd = app.add_subcommand("poly", "Principal specialization l_P(m)");
  poly_cmd->add_option("file", file)->required();
  auto* zeta_cmd = app.add_subcommand("zeta", "Number of linear extensions (posets or digraphs)");
  zeta_cmd->add_option("file", file)->required();
  auto* zeta1_cmd = app.add_subcommand("zeta1", "Signed count of reversing listings");
  zeta1_cmd->add_option("file", file)->required();
  auto* rev_cmd = app.add_subcommand("rev", "Reversing listings");
  rev_cmd->add_option("file", file)->required();
  auto* phi_cmd = app.add_subcommand("phi", "Mountain decomposition");
  phi_cmd->add_option("file", file)->required();
  auto* factor_cmd = app.add_subcommand("factor", "Ordinal-sum factorization");
  factor_cmd->add_option("file", file)->required();
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("--suite", suite)->required()->check(CLI::IsMember(suite_names()));
  verify_cmd->add_option("--n", n)->required()->check(CLI::Range(0, kMaxLabeledEnumeration));
  verify_cmd->add_option("--jobs", jobs)->check(CLI::Range(1, 256));
  auto* conj_cmd = app.add_subcommand("conjecture", "Search for counterexamples");
  conj_cmd->add_option("--id", conjecture_id)->required()->check(CLI::IsMember({1, 2}));
  conj_cmd->add_option("--n", n)->required()->check(CLI::Range(0, kMaxConjectureScan));
  conj_cmd->add_option("--jobs", jobs)->check(CLI::Range(1, 256));
  auto* enum_cmd = app.add_subcommand("enumerate", "List all posets of a size");
  enum_cmd->add_option("--n", n)->required()->check(CLI::Range(0, kMaxIsoEnumeration));
  enum_cmd->add_flag("--iso", iso, "One representative per isomorphism class");
  enum_cmd->add_flag("--count", count_only, "Print only the number of posets");
  auto* scan_cmd = app.add_subcommand("scan", "TSV of reversing listings, zeta1 and Phi per class");
  scan_cmd->add_option("--n", n)->required()->check(CLI::Range(0, kMaxLabeledEnumeration));
  scan_cmd->add_option("--jobs", jobs)->check(CLI::Range(1, 256));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  std::ofstream file_out;
  if (!out_path.empty()) {
    file_out.open(out_path);
    if (!file_out) {
      err << "error: cannot write " << out_path << '\n';
      return 2;
    }
  }
  std::ostream& sink = out_path.empty() ? out : file_out;

  try {
    if (*verify_cmd) {
      const VerificationReport r = run_suite(suite, n, jobs);
      sink << to_json(r).dump() << '\n';
      return r.pass() ? 0 : 1;
    }
    if (*conj_cmd) {
      const ConjectureReport r = conjecture_id == 1 ? conjecture1_search(n, jobs) : conjecture2_search(n, jobs);
      sink << to_json(r).dump() << '\n';
      return r.assertion_failures.empty() ? 0 : 1;
    }
    if (*enum_cmd) {
      if (!iso && n > kMaxLabeledEnumeration) throw UsageError("labeled enumeration is limited to n <= 7");
      if (count_only) {
        sink << (iso ? enumerate_posets(n, true).size() : count_labeled_posets(n)) << '\n';
      } else if (iso) {
        for (const Poset& p : enumerate_posets(n, true)) write_poset(sink, p);
      } else {
        for_each_labeled_poset(n, [&](const Poset& p) { write_poset(sink, p); });
      }
      return 0;
    }
    if (*scan_cmd) {
      write_tsv(sink, rev_scan(n, jobs));
      return 0;
    }

    const std::vector<Structure> inputs = read_structures_file(file);
    if (inputs.empty()) throw UsageError("no poset in " + file);
    if (*zeta_cmd) {
      for (const Structure& s : inputs) {
        const std::uint64_t z =
            std::holds_alternative<Poset>(s) ? zeta(std::get<Poset>(s)) : zeta_digraph(std::get<Digraph>(s));
        sink << nlohmann::json{{"zeta", z}}.dump() << '\n';
      }
      return 0;
    }
    for (const Poset& p : posets_only(inputs, app.get_subcommands().front()->get_name())) {
      nlohmann::json j;
      if (*expand_cmd) {
        j = expand(p, basis);
      } else if (*poly_cmd) {
        j = poly_json(p);
      } else if (*zeta1_cmd) {
        j = {{"zeta1", zeta1(p)}, {"reversing", reversing_listings(p).size()}};
      } else if (*rev_cmd) {
        nlohmann::json listings = nlohmann::json::array();
        for (const Listing& w : reversing_listings(p)) listings.push_back(listing_json(w));
        j = {{"reversing", listings}};
      } else if (*phi_cmd) {
        j = to_json(phi(p));
      } else if (*factor_cmd) {
        j = factor_json(p);
      }
      sink << j.dump() << '\n';
    }
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return 2;
}

}  // namespace posetsym
