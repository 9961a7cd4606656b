#pragma once

#include <doctest.h>

#include <string>

#include "jumploci/error.hpp"
#include "jumploci/fox.hpp"
#include "jumploci/report_io.hpp"

namespace testing {

/// Code of the jumploci::Error thrown by fn; fails the test if nothing is thrown.
template <class Fn>
jumploci::Errc error_code_of(Fn&& fn) {
  try {
    fn();
  } catch (const jumploci::Error& e) {
    return e.code();
  }
  FAIL("expected a jumploci::Error");
  return jumploci::Errc::parse;
}

inline jumploci::TorsionCharacter chr(const std::string& text) { return jumploci::parse_character(text); }

}  // namespace testing
