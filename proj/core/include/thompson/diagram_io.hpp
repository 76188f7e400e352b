#pragma once

// Serialization of diagrams and fingerprints: the line-based X-code
// ("X(a,b,c,d)" per crossing, "O" per free loop), SVG drawings in the
// s-below / t-mirrored-above layout, and fingerprint JSON.

#include "thompson/jt.hpp"
#include "thompson/link.hpp"

#include <string>

namespace thompson {

// One line per crossing listing arc identifiers at ports p0..p3, then one
// "O" line per free loop. Deterministic: arc ids are canonical.
std::string export_code(const LinkDiagram& d);
LinkDiagram parse_code(const std::string& text);

// SVG 1.1 drawing of a built tree-pair link: bottom tree below the leaf
// line, top tree mirrored above, closure arc on the right, under-strands
// broken at crossings.
std::string export_svg(const GroupElement& g);
std::string export_svg_pair(const Tree& t, const Tree& s);

// {"components": n, "bracket": {"exponent": coefficient}}
std::string fingerprint_json(const Fingerprint& fp);
Fingerprint parse_fingerprint_json(const std::string& text);

}  // namespace thompson
