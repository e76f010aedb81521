#pragma once

#include <string_view>

#include "sn/cli/parser.hpp"
#include "sn/errors.hpp"

namespace testing {

inline sn::Element E(std::string_view src, int n = 1, sn::Flavor f = sn::Flavor::S) {
  return sn::cli::parse_element(src, sn::AlgebraContext{n, f});
}

inline sn::UniPoly U(std::string_view src) { return sn::cli::parse_unipoly(src); }

inline sn::LaurentElem L(std::string_view src, int n = 1) { return sn::cli::parse_laurent(src, n); }

// Returns the DomainError code raised by f, or "" when nothing is thrown.
template <class F>
std::string error_code(F&& f) {
  try {
    f();
  } catch (const sn::DomainError& e) {
    return e.code();
  }
  return "";
}

}  // namespace testing
