#pragma once

#include <string>
#include <string_view>

#include "crn/network.hpp"

namespace crn {

// Network DSL, one statement per line:
//
//   # comment
//   species X1 X2 X3            (optional; fixes species ordering)
//   X1 + X9 <-> X13 ; k1, k2    (reversible, forward label first)
//   X13 -> X2 + X9 ; k3
//   2 X2 + X4 -> X2 + X15 ; q1  (integer coefficients, "2X2" also accepted)
//   0 -> X1 ; f1                (zero complex spelled "0")
//
// Species are declared implicitly by first use. Reversible arrows expand to
// two reactions immediately, forward first.
Network parse_network(std::string_view text);

// Scheme file, INI-like:
//
//   [group 1]
//   reactions = k1, k2, k3
//   shift = X10
//
// Every reaction label of the network must appear in exactly one group; the
// shift uses the complex grammar above ("0" for no shift) and may only name
// species of the network.
TranslationScheme parse_scheme(std::string_view text, const Network& net);

// Round-trip serialization: species header plus one "->" line per reaction,
// in order. Parsing the result reproduces the network exactly.
std::string serialize_network(const Network& net);

}  // namespace crn
