#ifndef STARFAN_ERRORS_HPP
#define STARFAN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace starfan {

enum class Errc {
  SingularCone,
  NotComplete,
  Overlapping,
  SizeLimit,
  DuplicateDirection,
  NoCone,
  DegenerateRay,
  UndefinedAtZero,
  TooManyPoints,
  InfeasibleBox,
  ParseError,
  LabelError,
  DimensionError,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::SingularCone: return "SingularCone";
    case Errc::NotComplete: return "NotComplete";
    case Errc::Overlapping: return "Overlapping";
    case Errc::SizeLimit: return "SizeLimit";
    case Errc::DuplicateDirection: return "DuplicateDirection";
    case Errc::NoCone: return "NoCone";
    case Errc::DegenerateRay: return "DegenerateRay";
    case Errc::UndefinedAtZero: return "UndefinedAtZero";
    case Errc::TooManyPoints: return "TooManyPoints";
    case Errc::InfeasibleBox: return "InfeasibleBox";
    case Errc::ParseError: return "ParseError";
    case Errc::LabelError: return "LabelError";
    case Errc::DimensionError: return "DimensionError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace starfan

#endif
