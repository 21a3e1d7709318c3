#pragma once

#include <string>

#include "passplan/world.hpp"

namespace passplan {

/// Parses a snapshot file (see docs/snapshot.md) into a validated WorldState.
///
/// Throws schema_error when the text is not valid JSON or does not match the
/// snapshot schema (missing, extra, or mistyped keys), and validation_error
/// when the parsed world violates a world-state rule.
WorldState parse_world_snapshot(const std::string& bytes);

/// Reads the file at `path` and parses it with parse_world_snapshot.
WorldState load_world_snapshot(const std::string& path);

/// Serializes a world back to snapshot text. parse(serialize(w)) reproduces
/// w exactly: numbers are printed with enough digits to round-trip.
std::string serialize_world_snapshot(const WorldState& w);

}  // namespace passplan
