#pragma once

#include "kronlift/group.hpp"

#include <json.hpp>

#include <vector>

namespace kronlift {

using Json = nlohmann::json;

// Every parser throws Error(MalformedInput) on structural problems.

/// "p/q", "p" or a JSON integer.
Rational parse_rational(const Json &j);
/// Canonical "p/q", or "p" for integers.
Json rational_to_json(const Rational &q);
/// JSON number when it fits in 64 bits, decimal string otherwise.
Json integer_to_json(const Integer &z);
Integer parse_integer(const Json &j);

FieldPtr parse_field(const Json &j);
Json field_to_json(const NumberField &f);

GroupShape parse_shape(const Json &j);
Json shape_to_json(GroupShape s);

FieldElement parse_field_element(const Json &j, const FieldPtr &field);
Json field_element_to_json(const FieldElement &x);

GroupElement parse_element(const Json &j, GroupShape shape, const FieldPtr &field);
Json element_to_json(const GroupElement &e);

std::vector<GroupElement> parse_elements(const Json &j, GroupShape shape, const FieldPtr &field);
Json elements_to_json(const std::vector<GroupElement> &es);

Json covector_to_json(const std::vector<FieldElement> &v);
/// Array of covectors, one per row.
Json rows_to_json(const MatK &m);
Json matz_to_json(const MatZ &m);

} // namespace kronlift
