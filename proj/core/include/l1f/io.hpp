#pragma once

#include <string>

#include "l1f/decision.hpp"

namespace l1f {

// JSON document schema (version field "v": 1).
//
// Function document:
//   {"v": 1, "q": 4, "conductor": 4, "values": ["1", "-3", "1", "1"]}
// A value is an integer, a rational string "a/b", or a field element
// {"conductor": L, "coeffs": ["a/b", ...]} with phi(L) coefficients.
// "conductor" is optional and defaults to q when any non-rational value
// appears, else 1. Every value conductor must divide the document conductor.
//
// Rationals travel as strings and numeric values as decimal strings with an
// explicit error bound, so nothing loses exactness in transport.

PeriodicFunction parse_function_document(const std::string& json_text);

std::string serialize_function(const PeriodicFunction& f);
std::string serialize_spectral(const SpectralFunction& g);
std::string serialize_verdict(const Verdict& v);
std::string serialize_numeric(const NumericResult& r);
std::string serialize_decomposition(const PeriodicFunction& f);

// Listings with per-entry exact verification status.
std::string serialize_blocks(long q);
std::string serialize_relations(long q);

Route route_from_name(const std::string& name);  // "log" | "split" | "partial"

}  // namespace l1f
