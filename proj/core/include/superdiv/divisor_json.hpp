#pragma once

#include <string>

#include "superdiv/divisor.hpp"

namespace superdiv {

// Interchange format. Divisor:
//   {"g": 2,
//    "base": {"even": ["a1","a2"], "odd": ["b1","b2"]},
//    "coeffs": [{"a": "1*a1", "b": "1*b1"}, {"a": "1*a2", "b": "1*b2"}]}
// Morphism:
//   {"source": {"even": [...], "odd": [...]},
//    "target": {"even": [...], "odd": [...]},
//    "images": {"s1": "1*a1", ...}}      (unassigned generators act as identity)
// Polynomial strings follow the textual grammar; emission is deterministic.
std::string divisor_to_json(const Superdivisor& D);
Superdivisor divisor_from_json(const std::string& text);

std::string morphism_to_json(const BaseMorphism& f);
BaseMorphism morphism_from_json(const std::string& text);

}  // namespace superdiv
