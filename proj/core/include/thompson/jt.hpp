#pragma once

// Brute-force Jones-Thompson index search: enumerate reduced F elements by
// leaf count and match link fingerprints. A fingerprint is (component
// count, bracket of the simplified diagram); matching is up to the global
// (-A³)^k kink ambiguity, which is exactly the slack the bracket has as a
// link invariant. Matches are certificates: the audit table lets callers
// inspect collisions.

#include "thompson/bracket.hpp"
#include "thompson/link.hpp"

#include <optional>
#include <string>
#include <vector>

namespace thompson {

struct Fingerprint {
    int components = 0;
    LaurentPoly bracket;  // of the simplified diagram

    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const LinkDiagram& d, int max_crossings = kDefaultMaxStateSumCrossings);
Fingerprint fingerprint(const GroupElement& g, int max_crossings = kDefaultMaxStateSumCrossings);

// Canonical representative modulo (-A³)^k: exponents shifted so the lowest
// lies in {0, 1, 2}, sign fixed accordingly.
LaurentPoly kink_normal_form(const LaurentPoly& p);

// Invariant-level match.
bool fingerprints_match(const Fingerprint& a, const Fingerprint& b);

// Reference diagrams for the standard search targets.
LinkDiagram unknot_diagram();
LinkDiagram hopf_link_diagram();
LinkDiagram trefoil_diagram();

struct JtAuditRow {
    std::string element;
    Fingerprint print;
};

struct JtResult {
    bool found = false;
    int leaves = 0;                     // least leaf count with a match
    std::vector<std::string> witnesses; // all matching elements at that count
    std::vector<JtAuditRow> audit;      // every fingerprint inspected
};

JtResult jt_index_search(const Fingerprint& target, int max_leaves,
                         int max_crossings = kDefaultMaxStateSumCrossings);

}  // namespace thompson
