#pragma once

#include <stdexcept>
#include <string>

namespace rpe {

// A map whose spectrum is entirely real (purely depolarizing/dephasing)
// carries no rotation eigenphase to extract.
class DegenerateRealSpectrum : public std::runtime_error {
 public:
  explicit DegenerateRealSpectrum(const std::string& what)
      : std::runtime_error(what) {}
};

// Dataset is missing sequences the analysis needs, or an entry fails
// count validation.
class MalformedDataset : public std::runtime_error {
 public:
  explicit MalformedDataset(const std::string& what)
      : std::runtime_error(what) {}
};

// Input file could not be parsed.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rpe
