#ifndef LAT_REPORT_HPP
#define LAT_REPORT_HPP

#include "json.hpp"
#include "lat/criterion.hpp"
#include "lat/decomposition.hpp"

namespace lat {

using Json = nlohmann::ordered_json;

// Integers that fit in 64 bits become JSON numbers, larger ones strings.
Json to_json(const Integer& v);
Json to_json(const IntMatrix& m);
Json to_json(const SearchSpace& space);
Json to_json(const Embedding& e);
Json to_json(const Decomposition& d);
Json to_json(const CriterionReport& r);
Json to_json(const MinimalityReport& r);
Json to_json(const Prop2Result& r);
Json to_json(const Prop3Report& r);

const char* verdict_name(Verdict v);

}  // namespace lat

#endif  // LAT_REPORT_HPP
