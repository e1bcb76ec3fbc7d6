// stf: realize, verify and inspect scaled trace forms over Q.
//
// Exit codes: 0 success, 1 negative verdict, 2 usage or input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "stf/errors.hpp"
#include "stf/json_io.hpp"

namespace {

using stf::json::Json;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;

struct Globals {
  std::uint64_t seed = 0;
  bool json = true;
  bool quiet = false;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<stf::Rational> parse_diag(const std::string& text) {
  std::vector<stf::Rational> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(stf::Rational::parse(item));
  if (out.empty()) throw InputError("--diag needs at least one entry");
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return stf::json::parse(buf.str());
}

// Forms come from --diag values first, then from files, in the order given.
std::vector<stf::SymmetricForm> collect_forms(const std::vector<std::string>& diags,
                                              const std::vector<std::string>& files) {
  std::vector<stf::SymmetricForm> out;
  for (const auto& d : diags) out.push_back(stf::SymmetricForm::diagonal(parse_diag(d)));
  for (const auto& f : files) out.push_back(stf::json::decode_form(read_json_file(f)));
  return out;
}

void emit(const Globals& g, const Json& doc) {
  if (g.quiet) return;
  std::cout << doc.dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Scaled trace forms over Q: realization, certificates, invariants and experiments"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals globals;
  app.add_option("--seed", globals.seed, "Seed for every randomized step")->capture_default_str();
  app.add_flag("--json", globals.json, "Machine-readable JSON output (default)");
  app.add_flag("--quiet", globals.quiet, "Print nothing; report through the exit code only");

  std::vector<std::string> diags, files;
  std::vector<long> bounds;
  int threads = 1;
  auto* realize = app.add_subcommand("realize", "Realize a form as a scaled trace form and print the certificate");
  realize->add_option("--diag", diags, "Diagonal entries, comma separated (e.g. 1,-2,3/4)")->allow_extra_args(false);
  realize->add_option("form", files, "Form JSON file");
  realize->add_option("--bounds", bounds, "Coefficient bound schedule, strictly increasing")->delimiter(',');
  realize->add_option("--threads", threads, "Candidates tried concurrently (output does not depend on it)");

  std::string cert_file;
  auto* verify = app.add_subcommand("verify", "Check a certificate exactly");
  verify->add_option("certificate", cert_file, "Certificate JSON file")->required();

  auto* invariants = app.add_subcommand("invariants", "Dimension, discriminant, signature and Hasse invariants");
  invariants->add_option("--diag", diags, "Diagonal entries, comma separated")->allow_extra_args(false);
  invariants->add_option("form", files, "Form JSON file");

  auto* equivalent = app.add_subcommand("equivalent", "Decide isometry of two forms over Q");
  equivalent->add_option("--diag", diags, "Diagonal entries, comma separated (repeatable)")->allow_extra_args(false);
  equivalent->add_option("forms", files, "Form JSON files");

  int n = 0;
  long bound = 9, primes = 300;
  std::uint64_t prime_floor = 100;
  auto* galois = app.add_subcommand("galois", "Cycle-type evidence that charpoly(A D) has group S_n");
  galois->add_option("--n", n, "Dimension (defaults to the length of --diag)");
  galois->add_option("--diag", diags, "Nonzero diagonal of D (defaults to all ones)")->allow_extra_args(false);
  galois->add_option("--bound", bound, "Entries of A are drawn from [-bound, bound]")->capture_default_str();
  galois->add_option("--primes", primes, "Number of good primes to sample")->capture_default_str();
  galois->add_option("--prime-floor", prime_floor, "Sample primes above this value")->capture_default_str();

  std::uint64_t p = 0, m = 0;
  unsigned k = 0;
  std::uint64_t divisor = 0;
  bool exhaustive = false;
  auto* group = app.add_subcommand("group-verify", "Subgroup structure of Z/m x| Z/p^k");
  group->add_option("--p", p, "Prime p")->required();
  group->add_option("--k", k, "Exponent k >= 1")->required();
  group->add_option("--m", m, "Modulus m with p not dividing m and p dividing phi(m)")->required();
  group->add_option("--n", divisor, "Check only this divisor of m");
  group->add_flag("--exhaustive", exhaustive, "Also enumerate normal subgroups (order <= 300)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*realize) {
      const auto forms = collect_forms(diags, files);
      if (forms.size() != 1) throw InputError("realize takes exactly one form");
      stf::SearchPolicy policy;
      policy.seed = globals.seed;
      policy.threads = threads;
      if (!bounds.empty()) policy.coeff_bound_schedule = bounds;
      try {
        emit(globals, stf::json::encode(stf::realize(forms[0], policy)));
      } catch (const stf::SearchExhausted& e) {
        Json report;
        report["error"] = "search_exhausted";
        report["detail"] = e.what();
        report["seed"] = globals.seed;
        emit(globals, report);
        return kNegative;
      }
      return kOk;
    }
    if (*verify) {
      const auto verdict = stf::verify_certificate(stf::json::decode_certificate(read_json_file(cert_file)));
      Json report;
      report["valid"] = verdict.valid();
      if (!verdict.valid()) report["clause"] = stf::to_string(verdict.clause);
      emit(globals, report);
      return verdict.valid() ? kOk : kNegative;
    }
    if (*invariants) {
      const auto forms = collect_forms(diags, files);
      if (forms.size() != 1) throw InputError("invariants takes exactly one form");
      emit(globals, stf::json::encode(stf::invariants(forms[0])));
      return kOk;
    }
    if (*equivalent) {
      const auto forms = collect_forms(diags, files);
      if (forms.size() != 2) throw InputError("equivalent takes exactly two forms");
      const bool same = stf::equivalent(forms[0], forms[1]);
      Json report;
      report["equivalent"] = same;
      report["first"] = stf::json::encode(stf::invariants(forms[0]));
      report["second"] = stf::json::encode(stf::invariants(forms[1]));
      emit(globals, report);
      return same ? kOk : kNegative;
    }
    if (*galois) {
      if (diags.size() > 1) throw InputError("galois takes one --diag");
      std::vector<stf::Rational> d;
      if (!diags.empty()) {
        d = parse_diag(diags[0]);
        if (n != 0 && static_cast<std::size_t>(n) != d.size()) throw InputError("--n does not match --diag");
      } else {
        if (n <= 0) throw InputError("galois needs --n or --diag");
        d.assign(static_cast<std::size_t>(n), stf::Rational(1));
      }
      if (bound <= 0 || primes < 0) throw InputError("--bound must be positive and --primes non-negative");
      const auto report = stf::generic_experiment(d, bound, primes, globals.seed, prime_floor);
      emit(globals, stf::json::encode(report));
      return report.sn_verdict == stf::SnVerdict::kCertified ? kOk : kNegative;
    }
    if (*group) {
      std::optional<std::uint64_t> only;
      if (group->count("--n")) only = divisor;
      const auto report = stf::verify_group(p, k, m, only, exhaustive);
      emit(globals, stf::json::encode(report));
      bool ok = report.lemma_a && report.lemma_b_derived && report.lemma_b_exhaustive.value_or(true);
      for (const auto& row : report.lemma_c) {
        ok = ok && row.index_h0 == report.group.pk * row.n && row.index_h1 == row.n;
      }
      return ok ? kOk : kNegative;
    }
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << " (factorization limit)\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
