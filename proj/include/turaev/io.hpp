#pragma once

#include <string>

#include "turaev/bundle.hpp"

namespace turaev {

/// Canonical serialization: fixed block order, families sorted by name,
/// sparse entries sorted by coordinates with zeros omitted, scalars printed
/// as canonical expression strings. save(load(save(b))) == save(b).
std::string save_bundle(const SymBundle& b);

/// Parses and validates a bundle document. Errors carry a line number.
SymBundle load_bundle(const std::string& text);

SymBundle load_bundle_file(const std::string& path);
void save_bundle_file(const SymBundle& b, const std::string& path);

/// Structural equality of symbolic bundles (same shapes, same entry trees).
bool bundles_equal(const SymBundle& a, const SymBundle& b);

} // namespace turaev
