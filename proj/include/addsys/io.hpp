#pragma once

// JSON and CSV documents. JSON output is canonical: keys sorted, no
// insignificant whitespace.

#include <string>

#include "addsys/cuboid.hpp"
#include "addsys/factorisation.hpp"
#include "addsys/sds.hpp"
#include "addsys/squares.hpp"
#include "addsys/sumsystem.hpp"
#include "json.hpp"

namespace addsys::io {

using Json = nlohmann::json;

std::string canonical(const Json& j);
/// Parses text, mapping syntax errors to InputError.
Json parse(const std::string& text);

// {"dims":[n1,...],"parts":[[...],...]}; dims must match the cardinalities.
Json to_json(const SumSystem& ss);
SumSystem sumsystem_from_json(const Json& j);

// {"flavour":"inclusive"|"non-inclusive","parts":[[...],...]}
Json to_json(const SdsSystem& s);
SdsSystem sds_from_json(const Json& j);

// {"dims":[...],"entries":[flat, direction 1 fastest]}
Json to_json(const Cuboid& c);
Cuboid cuboid_from_json(const Json& j);

// {"entries":[[row],...],"n":n} in plain integers.
Json to_json(const SquareMatrix& m);
SquareMatrix square_from_json(const Json& j);

// {"passed":bool} plus "violated", "witness" and "notes" when present.
Json to_json(const VerificationReport& r);

// {"dims":[...],"jof":"j:f,..."}
Json to_json(const Jof& jof);

/// Order-2 slices (rows are direction-1 lines) separated by blank lines;
/// slices in lexicographic order of the remaining indices.
std::string to_csv(const Cuboid& c);
std::string to_csv(const SquareMatrix& m);

}  // namespace addsys::io
