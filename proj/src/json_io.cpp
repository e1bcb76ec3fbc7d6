#include "stf/json_io.hpp"

#include <stdexcept>

#include "stf/number_theory.hpp"

namespace stf::json {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument("malformed JSON: " + what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::vector<Rational> decode_rationals(const Json& j) {
  if (!j.is_array()) bad("expected an array of rationals");
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(decode_rational(x));
  return out;
}

std::uint64_t decode_u64(const Json& j, const char* what) {
  if (!j.is_number_unsigned()) bad(std::string(what) + " must be a non-negative integer");
  return j.get<std::uint64_t>();
}

Json encode_cycle_type(const CycleType& t) {
  Json out = Json::array();
  for (int part : t) out.push_back(part);
  return out;
}

}  // namespace

Json encode(const Rational& r) { return r.to_string(); }

Json encode(const RationalPoly& f) {
  Json out = Json::array();
  for (const auto& c : f.coeffs()) out.push_back(encode(c));
  return out;
}

Json encode(const ExactMatrix& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(encode(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

Json encode(const SymmetricForm& form) {
  Json out;
  out["dim"] = form.dim();
  out["gram"] = encode(form.gram());
  return out;
}

Json encode(const WittInvariants& inv) {
  Json out;
  out["dim"] = inv.dim;
  out["disc"] = inv.disc.get_str();
  out["signature"] = Json::array({inv.signature.first, inv.signature.second});
  Json places = Json::array();
  for (const auto& v : inv.hasse_minus_one_at) places.push_back(v.to_string());
  out["hasse_minus_one_at"] = std::move(places);
  return out;
}

Json encode(const Certificate& c) {
  Json out;
  out["D"] = encode(c.D);
  out["A"] = encode(c.A);
  out["f"] = encode(c.f);
  out["alpha"] = encode(c.alpha);
  out["P"] = encode(c.P);
  out["gram"] = encode(c.gram);
  out["seed"] = c.seed;
  out["tries"] = c.tries;
  return out;
}

Json encode(const CycleTypeSample& s) {
  Json entries = Json::array();
  for (const auto& [type, count] : s.entries) {
    Json e;
    e["type"] = encode_cycle_type(type);
    e["count"] = count;
    entries.push_back(std::move(e));
  }
  Json out;
  out["f"] = encode(s.f);
  out["entries"] = std::move(entries);
  out["primes_used"] = s.primes_used;
  out["primes_skipped"] = s.primes_skipped;
  return out;
}

Json encode(const SpecReport& r) {
  Json d = Json::array();
  for (const auto& x : r.d) d.push_back(encode(x));
  Json out;
  out["n"] = r.n;
  out["D"] = std::move(d);
  out["seed"] = r.seed;
  out["A"] = encode(r.a);
  out["f"] = encode(r.f);
  out["separable"] = r.separable;
  out["irreducible"] = r.irreducible;
  out["sn_verdict"] = to_string(r.sn_verdict);
  out["cycle_stats"] = encode(r.cycle_stats);
  return out;
}

Json encode(const GroupReport& r) {
  Json params;
  params["p"] = r.group.p;
  params["k"] = r.group.k;
  params["m"] = r.group.m;
  params["alpha"] = r.group.alpha;
  Json lemma_b;
  lemma_b["derived"] = r.lemma_b_derived;
  if (r.lemma_b_exhaustive) lemma_b["exhaustive"] = *r.lemma_b_exhaustive;
  Json lemma_c = Json::array();
  for (const auto& row : r.lemma_c) {
    Json e;
    e["n"] = row.n;
    e["index_H0"] = row.index_h0;
    e["index_H1"] = row.index_h1;
    lemma_c.push_back(std::move(e));
  }
  Json out;
  out["params"] = std::move(params);
  out["order"] = r.group.order();
  out["lemma_a"] = r.lemma_a;
  out["lemma_b"] = std::move(lemma_b);
  out["lemma_c"] = std::move(lemma_c);
  return out;
}

Rational decode_rational(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  bad("rationals are strings \"p\" or \"p/q\"");
}

RationalPoly decode_poly(const Json& j) { return RationalPoly(decode_rationals(j)); }

ExactMatrix decode_matrix(const Json& j) {
  if (!j.is_array() || j.empty()) bad("expected a non-empty nested array");
  const auto rows = static_cast<Eigen::Index>(j.size());
  if (!j[0].is_array()) bad("matrix rows must be arrays");
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  ExactMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto row = decode_rationals(j[static_cast<std::size_t>(i)]);
    if (static_cast<Eigen::Index>(row.size()) != cols) bad("ragged matrix");
    for (Eigen::Index c = 0; c < cols; ++c) m(i, c) = row[static_cast<std::size_t>(c)];
  }
  return m;
}

SymmetricForm decode_form(const Json& j) {
  if (j.is_object() && j.contains("diag")) return SymmetricForm::diagonal(decode_rationals(j.at("diag")));
  ExactMatrix gram = decode_matrix(field(j, "gram"));
  if (j.contains("dim")) {
    const auto dim = decode_u64(j.at("dim"), "dim");
    if (static_cast<Eigen::Index>(dim) != gram.rows()) bad("dim does not match the Gram matrix");
  }
  return SymmetricForm(std::move(gram));
}

Certificate decode_certificate(const Json& j) {
  Certificate c{decode_form(field(j, "D")),
                decode_matrix(field(j, "A")),
                decode_poly(field(j, "f")),
                decode_poly(field(j, "alpha")),
                decode_matrix(field(j, "P")),
                decode_matrix(field(j, "gram")),
                decode_u64(field(j, "seed"), "seed"),
                static_cast<long>(decode_u64(field(j, "tries"), "tries"))};
  return c;
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace stf::json
