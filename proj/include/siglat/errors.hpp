#pragma once

#include <stdexcept>
#include <string>

namespace siglat {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidPermutation : Error {
  using Error::Error;
};

struct OrderCapExceeded : Error {
  using Error::Error;
};

struct SubgroupCountCapExceeded : Error {
  using Error::Error;
};

struct ParentMismatch : Error {
  using Error::Error;
};

struct NotContained : Error {
  using Error::Error;
};

struct NotNormal : Error {
  using Error::Error;
};

struct OrderMismatch : Error {
  using Error::Error;
};

struct ActorDoesNotNormalize : Error {
  using Error::Error;
};

struct NotSigmaFull : Error {
  using Error::Error;
};

struct ElementNotInLattice : Error {
  using Error::Error;
};

struct NotComparable : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(const std::string& msg, int line = 0, int col = 0)
      : Error(msg), line(line), col(col) {}
  int line;
  int col;
};

// Raised by lattice construction when a family is not closed under meet or
// join; the offending pair doubles as a falsifier payload.
struct NotClosed : Error {
  NotClosed(const std::string& msg, bool meet, int a, int b)
      : Error(msg), meet(meet), a(a), b(b) {}
  bool meet;  // false = join failure
  int a;
  int b;
};

// Hard limits for desk-scale analysis.
struct Caps {
  int max_order = 2000;
  int max_subgroups = 20000;
  int max_aut = 128;
};

}  // namespace siglat
