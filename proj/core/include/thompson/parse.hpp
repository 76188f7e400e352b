#pragma once

// Element text grammar: "t/s" (F), "t/r<k>/s" (T, rotation by k),
// "t/[p0,p1,...]/s" (V). Trees are preorder bitstrings; whitespace is
// ignored everywhere.

#include "thompson/element.hpp"

#include <string>

namespace thompson {

struct ParsedElement {
    Tree t;
    Perm perm;
    Tree s;
    Flavor flavor;
};

// Parses the grammar without reducing (callers normally reduce on ingest).
ParsedElement parse_element_raw(const std::string& text);

// Parses and reduces.
GroupElement parse_element(const std::string& text);

std::string print_element(const GroupElement& g);

}  // namespace thompson
