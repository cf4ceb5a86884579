#pragma once

#include <json.hpp>
#include <string>

#include "mstate/bipartite_lu.hpp"
#include "mstate/protocol.hpp"
#include "mstate/qstate.hpp"
#include "mstate/schmidt.hpp"

namespace mst {

using json = nlohmann::ordered_json;

json to_json(const Rational& q);
json to_json(const std::vector<Rational>& v);
json to_json(const SchmidtTuple& t);
json to_json(const RadoCertificate& c);
json to_json(const CMatrix& m);
json to_json(const PureState& s);
json to_json(const LoccProtocol& p);
json to_json(const Leaf& l);
json to_json(const ExponentFamily& f);
json to_json(const TableauPair& p);
json to_json(const LuSolution& s);
json to_json(const GapCycle& c);

// Rationals are read from "p/q" or decimal strings, or from JSON numbers via their text.
Rational rational_from_json(const json& j);
std::vector<Rational> rationals_from_json(const json& j);
// {"coeffs": [...]} or a bare array.
SchmidtTuple schmidt_from_json(const json& j);
CMatrix matrix_from_json(const json& j);
// {"dims": [...], "amps": [[re, im], ...]}
PureState state_from_json(const json& j);
LoccProtocol protocol_from_json(const json& j);
ExponentFamily family_from_json(const json& j);

// "ghz:n:d", "w", "chi", "psi5".
PureState named_state(const std::string& name);

}  // namespace mst
