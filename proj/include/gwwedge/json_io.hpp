#pragma once

#include <json.hpp>

#include "gwwedge/acceptance.hpp"
#include "gwwedge/diagrams.hpp"
#include "gwwedge/relative.hpp"
#include "gwwedge/series.hpp"

namespace gwwedge {

using Json = nlohmann::json;  // std::map backed, keys come out sorted

Json rational_json(const Rational& q);  // "p/q"
// [{"exponents":[..],"coeff":"p/q"}, ...] in exponent order
Json series_json(const Series& s);
Json diagram_json(const InteractionDiagram& J);
Json criterion_json(const CriterionResult& r);

// {"mu0":[..],"muInf":[..],"insertions":[{"k":0,"class":"omega"}]}; a present muInf makes a tube.
// ConfigError on malformed data or a class other than omega.
ContactData contact_from_json(const Json& j);
Json contact_json(const ContactData& cd);

}  // namespace gwwedge
