#ifndef SEMIMOD_JSON_IO_HPP_
#define SEMIMOD_JSON_IO_HPP_

#include <string>

#include <json.hpp>

#include "semimod/cells.hpp"
#include "semimod/classify.hpp"
#include "semimod/semimodule.hpp"
#include "semimod/semiring.hpp"

namespace semimod {

using Json = nlohmann::ordered_json;

// Serializers emit keys in fixed order and arrays in index order, so
// serialize(parse(x)) is byte-identical to serialize on the same object.
Json semiring_to_json(const Semiring& r);
Json semimodule_to_json(const Semimodule& m);
Json congruence_to_json(const Congruence& c);
Json cells_to_json(const BasedSemiring& r, const CellDecomposition& d);
Json suite_report_to_json(const SuiteReport& r);

// Parsers throw MalformedError with a path-accurate message on schema
// violations.  base_dir resolves a "semiring" given as a file path.
Semiring semiring_from_json(const Json& j);
Semimodule semimodule_from_json(const Json& j, const std::string& base_dir = ".");
Congruence congruence_from_json(const Json& j);

std::string dump_json(const Json& j);

Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace semimod

#endif
