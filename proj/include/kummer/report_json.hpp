#pragma once

// JSON forms of the library's value types. Rationals are always strings
// ("p/q" or "p"); floats appear only in fit results.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "kummer/growth_fit.hpp"
#include "kummer/strata.hpp"

namespace kummer {

using Json = nlohmann::ordered_json;

/// Malformed input document; message carries the line or field.
class DocumentError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct DivisorDocument {
    AmpleDivisorInput input;
    std::optional<DecompositionStrategy> strategy;
    std::optional<int> field_degree;
    std::optional<std::vector<std::uint64_t>> b_list;
};

/// Fields: d1, d2 (rational strings or integers), e (4x4 of the same),
/// optional strategy, field_degree, B_list. Unknown fields are rejected.
DivisorDocument parse_divisor_document(const std::string& text);

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

/// 18-element array in basis order F1, F2, E11..E44.
Json to_json(const DivisorClass& d);
DivisorClass divisor_from_json(const Json& j);

Json to_json(const ConeDecomposition& d);
ConeDecomposition decomposition_from_json(const Json& j);

Json to_json(const StrataReport& r);
StrataReport report_from_json(const Json& j);

Json to_json(const GrowthFit& f);

}  // namespace kummer
