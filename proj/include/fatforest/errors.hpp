#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace fatforest {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed edge/facet file or command-line parameter list.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A configured budget (ground-set size, face count) was exceeded.
class TooLargeError : public Error {
 public:
  using Error::Error;
};

class NotChordalError : public Error {
 public:
  NotChordalError(const std::string& msg, std::vector<int> cycle)
      : Error(msg), chordless_cycle(std::move(cycle)) {}
  /// A chordless cycle of length >= 4, in cyclic order.
  std::vector<int> chordless_cycle;
};

enum class FatForestObstruction {
  kNotFlag,     // complex is not the clique complex of its 1-skeleton
  kNotChordal,  // 1-skeleton has a chordless cycle
  kNoFacets,    // no facet of dimension >= 0 (void or {empty set} on 0 vertices)
};

class NotFatForestError : public Error {
 public:
  NotFatForestError(const std::string& msg, FatForestObstruction o,
                    std::vector<int> cycle = {}, std::vector<int> face = {})
      : Error(msg),
        obstruction(o),
        chordless_cycle(std::move(cycle)),
        missing_face(std::move(face)) {}
  FatForestObstruction obstruction;
  /// Set when obstruction == kNotChordal.
  std::vector<int> chordless_cycle;
  /// Set when obstruction == kNotFlag: a clique of the 1-skeleton that is
  /// not a face (shrunk to an inclusion-minimal one).
  std::vector<int> missing_face;
};

/// A series term 1/(1-t)^e with e larger than the ambient variable count.
class ExponentOverflowError : public Error {
 public:
  using Error::Error;
};

/// Numerator polynomial is not of the shape 1 - b1 t^2 + b2 t^3 - ...
class NotTwoLinearShapeError : public Error {
 public:
  using Error::Error;
};

class InvalidTableauError : public Error {
 public:
  using Error::Error;
};

class InvalidSpecError : public Error {
 public:
  using Error::Error;
};

class UnknownFamilyError : public Error {
 public:
  using Error::Error;
};

}  // namespace fatforest
