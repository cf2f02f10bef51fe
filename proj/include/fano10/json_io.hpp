#pragma once

#include <string>

#include "fano10/discgroup.hpp"
#include "fano10/fano.hpp"
#include "json.hpp"

namespace fano10 {

/// JSON conventions: integers are emitted as JSON numbers when they fit in
/// 64 bits and as decimal strings otherwise; parsers accept both. Rationals
/// are always "num/den" strings in lowest terms.

nlohmann::json int_to_json(const Int& x);
Int int_from_json(const nlohmann::json& j);

std::string rat_to_string(const Rat& x);
Rat rat_from_string(const std::string& s);

nlohmann::json mat_to_json(const IntMat& m);
IntMat mat_from_json(const nlohmann::json& j);  // throws ParseError

/// Parses "[[2,2],[2,4]]" style text (any valid JSON array of arrays).
IntMat mat_from_string(const std::string& text);

/// Full report on one lattice: label, gram, rank, signature, parity,
/// determinant, discriminant invariant factors, b table and (if even) q table.
nlohmann::json lattice_report(const Lattice& l);

nlohmann::json classify_to_json(const Int& d);
nlohmann::json assoc_to_json(const Int& d);
nlohmann::json sweep_to_json(const Int& d_max);
nlohmann::json examples_to_json();
nlohmann::json th81_to_json(long e_max);

}  // namespace fano10
