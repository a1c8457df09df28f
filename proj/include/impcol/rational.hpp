#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace impcol {

using Rational = boost::rational<std::int64_t>;

/// Always "p/q", including integers ("-8/1").
inline std::string to_string(const Rational& r)
{
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

} // namespace impcol
