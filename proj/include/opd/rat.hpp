#ifndef OPD_RAT_HPP
#define OPD_RAT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace opd {

// Exact rational scalar. All arithmetic in the library is over Q; no
// floating point appears anywhere.
using Rat = boost::multiprecision::cpp_rational;

std::string rat_str(const Rat& r);

// Accepts "p" or "p/q" with optional leading sign. Throws std::invalid_argument
// on malformed input or zero denominator.
Rat rat_parse(const std::string& s);

} // namespace opd

#endif
