#pragma once

#include <stdexcept>
#include <string>

namespace mgs {

// Base class for all domain errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// matrix_from_arrows: no positive symmetrizer exists for the given pairs.
struct NoSymmetrizer : Error {
  using Error::Error;
};

// matrix_from_arrows: the same unordered vertex pair was given twice.
struct DuplicatePair : Error {
  using Error::Error;
};

// matrix_from_arrows: a pair connects a vertex to itself.
struct SelfLoop : Error {
  using Error::Error;
};

// matrix_from_arrows: two vertices share one name.
struct DuplicateLabel : Error {
  using Error::Error;
};

// A label does not name a vertex of the object at hand.
struct UnknownVertex : Error {
  using Error::Error;
};

// color_of: the c-row holds both positive and negative entries.
struct MixedSign : Error {
  using Error::Error;
};

// color_of: the c-row is identically zero.
struct ZeroRow : Error {
  using Error::Error;
};

// diagram_mutate: a weight update would leave the integers.
struct NonIntegerWeight : Error {
  using Error::Error;
};

// subsequence / span lookup: index outside the valid range.
struct OutOfRange : Error {
  using Error::Error;
};

// enumerate_all: exhaustive enumeration is capped at rank 4.
struct RankTooLarge : Error {
  using Error::Error;
};

// Malformed or inconsistent serialized input.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace mgs
