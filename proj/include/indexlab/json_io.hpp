#pragma once

#include <json.hpp>

#include "indexlab/liealg.hpp"
#include "indexlab/orbits.hpp"
#include "indexlab/pairs.hpp"

namespace indexlab {

using nlohmann::json;

// rationals travel as "p/q" (or "p"), matrices as {rows, cols, entries}
json to_json(const Rat& q);
Rat rat_from_json(const json& j);

json to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const json& j);

json to_json(const RankCertificate& c);
json to_json(const IndexReport& r);

json to_json(const MatrixLieAlgebra& a);
MatrixLieAlgebra algebra_from_json(const json& j);

json to_json(const Representation& r);
Representation representation_from_json(const json& j);

json to_json(const SymmetricPair& p);
json to_json(const OrbitRep& rep);

} // namespace indexlab
