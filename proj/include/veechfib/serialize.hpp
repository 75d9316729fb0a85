#pragma once

// JSON renderings. Exact values are strings ("116", "-3/10"); small parameters
// (D, p, n, g) are plain numbers.

#include "json.hpp"

#include "veechfib/families.hpp"

namespace veechfib {

using Json = nlohmann::ordered_json;

Json exact(const Integer& z);
Json exact(const Rational& q);

Json to_json(const Prototype& p);
Json to_json(const SurfaceModel& m);
Json to_json(const StructuralChecks& c);
Json to_json(const DegreeResult& d);
Json to_json(const CoverData& c);
Json to_json(const FibrationInvariants& f);
Json to_json(const FamilyResult& r);
Json to_json(const ClosedForm& c);

}  // namespace veechfib
