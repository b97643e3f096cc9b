#ifndef REDGRP_ERROR_HPP_
#define REDGRP_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace redgrp {

enum class Errc {
  NotSaturated,
  NotUnimodular,
  TooLarge,
  NotSubgroup,
  NotAutomorphism,
  NotDiagramAutomorphism,
  BadModulus,
  BadGluing,
  BaseMismatch,
  NotSolvable,
  CriterionMismatch,
  InvalidType,
  Parse,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace redgrp

#endif  // REDGRP_ERROR_HPP_
