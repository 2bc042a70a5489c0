// Reading and writing finitely presented arc sets.  Input is either a
// JSON document listing arc literals, zone families, and sugar rules, or
// a line shorthand with one rule per line.  Errors carry the line or the
// field that caused them.  Serialization emits the JSON form; parsing it
// back yields a semantically equal set.
#pragma once

#include <string>

#include "arcstrip/arcset.hpp"
#include "arcstrip/ng.hpp"

namespace arcstrip {

// One parsed document.  Strip families and polygon-chord families travel
// separately; a file normally holds only one of the two.
struct ParsedDoc {
  ArcSet strip;
  NgArcSet chords;
  bool has_strip = false;
  bool has_chords = false;
};

ParsedDoc parse_presentation_doc(const std::string& text);

// Strip-only view of a document; rejects chord families.
ArcSet parse_presentation(const std::string& text);

// Chord-only view of a document; rejects strip content.
NgArcSet parse_ng_presentation(const std::string& text);

std::string serialize_presentation(const ArcSet& t);
std::string serialize_ng(const NgArcSet& t);

}  // namespace arcstrip
