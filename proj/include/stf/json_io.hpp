#pragma once

// JSON encoding shared by every command. Rationals are strings "p" or "p/q",
// polynomials are coefficient arrays lowest degree first, matrices are
// row-major nested arrays. Decoders throw std::invalid_argument on bad input.

#include <json.hpp>

#include "stf/finite_groups.hpp"
#include "stf/galois_evidence.hpp"
#include "stf/quadform.hpp"
#include "stf/trace_form.hpp"

namespace stf::json {

using Json = nlohmann::ordered_json;

Json encode(const Rational& r);
Json encode(const RationalPoly& f);
Json encode(const ExactMatrix& m);
Json encode(const SymmetricForm& form);
Json encode(const WittInvariants& inv);
Json encode(const Certificate& c);
Json encode(const CycleTypeSample& s);
Json encode(const SpecReport& r);
Json encode(const GroupReport& r);

Rational decode_rational(const Json& j);
RationalPoly decode_poly(const Json& j);
ExactMatrix decode_matrix(const Json& j);
/// {"dim": n, "gram": [[...]]} or {"diag": [...]}.
SymmetricForm decode_form(const Json& j);
Certificate decode_certificate(const Json& j);

/// Parses text, mapping syntax errors to std::invalid_argument.
Json parse(const std::string& text);

}  // namespace stf::json
