#pragma once

#include <string>

#include <json.hpp>

#include "arrfree/catalog.hpp"

namespace arrfree {

using Json = nlohmann::ordered_json;

/// Parses arithmetic over Q(sqrt d)(t): integers, + - * / ^, parentheses,
/// sqrt(n), i, omega, zeta and t. Throws Parse on malformed text.
Scalar parse_scalar(const std::string& text);

/// "p/q" for rationals, {"a":..,"b":..} for quadratic values (the
/// discriminant lives in the field header), {"num":[..],"den":[..]} for
/// rational functions.
Json scalar_to_json(const Scalar& s);
/// Also accepts integers and expression strings.
Scalar scalar_from_json(const Json& j, const FieldCtx& ctx);

Json field_to_json(const FieldCtx& ctx);
FieldCtx field_from_json(const Json& j);

Json arrangement_to_json(const Arrangement& a);
/// {"field":{"sqrt":d,"param":bool},"lines":[[s,s,s],...],"affine":bool}
Arrangement arrangement_from_json(const Json& j);
Arrangement load_arrangement_file(const std::string& path);

/// A file path, or catalog:name with an optional ?lambda=value query.
Arrangement load_input(const std::string& source);

Json triple_to_json(const Triple& t);
Json exponents_to_json(const Exponents& e);
Json lattice_to_json(const LatticeData& l);
Json charpoly_to_json(const CharPoly& c);
Json derivation_to_json(const Derivation2& d);
Json freeness_to_json(const Arrangement& a, const FreenessResult& r);
Json chain_to_json(const Chain& c);
Json deletion_to_json(const DeletionCandidate& d);
Json addition_to_json(const AdditionCandidate& c);
Json recursive_to_json(const RecursiveVerdict& v);
Json automorphisms_to_json(const AutomorphismGroup& g);
Json exceptional_to_json(const ExceptionalReport& r);
Json scan_to_json(const ScanTable& t);
Json profile_triple_to_json(const ProfileTriple& p);
Json selfcheck_to_json(const SelfCheckReport& r);

/// Human-readable rendering of a report object.
std::string json_to_markdown(const Json& j, const std::string& title);

}  // namespace arrfree
