/*
   Copyright 2026 The etale-forge Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef ETALE_SERIALIZE_HPP
#define ETALE_SERIALIZE_HPP

#include <string>

#include "json.hpp"

#include "etale/endo.hpp"
#include "etale/miyanishi.hpp"

namespace etale {

using json = nlohmann::ordered_json;

/// "Q" or the minimal polynomial in the generator symbol.
std::string field_to_string(const FieldPtr& f);

/// {"field": ..., "coords": ["a0", "a1", ...]}
json to_json(const FieldElement& e);
FieldElement field_element_from_json(const json& j);

/// Flat form: k, r, a, alpha, d, field, and lambda / R0 / R1 / R2 as expressions (R_i in t).
json to_json(const EtaleParams& p);
EtaleParams params_from_json(const json& j);

/// "C1".."C5" for the certificate check names.
std::string check_label(const std::string& name);

json to_json(const EtaleCertificate& c);

/// {"source", "target", "field", "coords", "label", "declared_degree"}; extra variables in "params".
json to_json(const SurfaceMap& m);
SurfaceMap map_from_json(const json& j);

/// {"n", "field", "b"}.
json to_json(const MiyParams& p);
MiyParams miy_from_json(const json& j);

json to_json(const MiyLiftReport& r);

/// Reads and parses a JSON file; FormatError on I/O or syntax problems.
json load_json_file(const std::string& path);

}  // namespace etale

#endif  // ETALE_SERIALIZE_HPP
