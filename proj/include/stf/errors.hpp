#pragma once

#include <stdexcept>
#include <string>

namespace stf {

/// Base of every domain error raised by the library. Precondition violations
/// on plain arguments use std::invalid_argument / std::domain_error instead.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// p divides lc(f)*disc(f); the caller should skip this prime.
struct BadPrime : Error {
  using Error::Error;
};
/// Krylov vectors are linearly dependent (v is not cyclic).
struct SingularKrylov : Error {
  using Error::Error;
};
/// The Hankel sequence is not the trace sequence of any element.
struct InconsistentHankel : Error {
  using Error::Error;
};
/// The randomized specialization search ran out of candidates.
struct SearchExhausted : Error {
  using Error::Error;
};
struct DegenerateForm : Error {
  using Error::Error;
};
struct NotSquarefree : Error {
  using Error::Error;
};
struct InvalidParams : Error {
  using Error::Error;
};
struct NonDivisor : Error {
  using Error::Error;
};

}  // namespace stf
