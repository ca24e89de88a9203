#pragma once

#include <cyclo/element.hpp>
#include <cyclo/trace_metric.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace cyclo {

// Wire format for field elements:
//   {"p": 5, "coeffs": [["1","1"], ["-3","2"], ["0","1"], ["0","1"]]}
// Numerators and denominators are decimal strings so that arbitrary precision
// survives any JSON consumer.

std::string element_to_json(const CycloElement& a);

/// Accepts the object form above, or a bare coefficient array when
/// `p` is supplied. Each coefficient may be a ["num","den"] pair, a rational
/// string such as "-1/2", or a JSON integer. Throws Error(parse_error) on
/// malformed input and the usual element errors on bad p or length.
CycloElement element_from_json(std::string_view text, std::optional<int> p = std::nullopt);

/// JSON array of rational strings.
std::string trace_vector_to_json(const TraceVector& v);

}  // namespace cyclo
