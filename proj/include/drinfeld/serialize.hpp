// JSON encodings. Cyclotomic values serialize in canonical form with terms
// sorted by exponent; modular data files are byte-identical across runs for
// identical inputs.

#pragma once

#include <string>

#include <json.hpp>

#include "drinfeld/equiv.hpp"
#include "drinfeld/modular.hpp"

namespace drinfeld {

using Json = nlohmann::ordered_json;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json to_json(const Cyclotomic& v);
Cyclotomic cyclotomic_from_json(const Json& j);

Json to_json(const ModularData& md);
ModularData modular_data_from_json(const Json& j);

Json to_json(const Permutation& p);
Permutation permutation_from_json(const Json& j);

void write_json_file(const std::string& path, const Json& j);
Json read_json_file(const std::string& path);

}  // namespace drinfeld
