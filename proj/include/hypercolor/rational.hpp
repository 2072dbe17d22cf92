#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace hypercolor {

// Compare only Rational against Rational. Under C++20 the mixed
// rational/integer operators of Boost <= 1.74 recurse through the reversed
// rewrite and never return.
using Rational = boost::rational<std::int64_t>;

/// Lowest-terms "p/q" form; the denominator is always printed ("0/1", "7/1").
inline std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace hypercolor
