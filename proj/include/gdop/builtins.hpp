/*
 * builtins.hpp
 * ------------
 * The built-in fixture corpus: named identities, operad presentations, white
 * product dictionaries, and Koszul dual dictionaries. Identities are stored
 * as polynomial strings in the s-expression grammar and parsed on demand
 * with the appropriate signature.
 */
#pragma once

#include "gdop/koszul.hpp"
#include "gdop/operad.hpp"
#include "gdop/white.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gdop {

struct NamedIdentity {
    std::string name;
    std::string text;           // coeff term [+ coeff term ...]
    std::string source;         // gd | gd-dual | derived | gen-derived
    std::string default_map;    // suggested verification map
    std::string default_target; // for derived: magma | as | com
};

const std::vector<NamedIdentity>& builtin_identities();
const NamedIdentity& builtin_identity(const std::string& name);
const Signature& source_signature(const std::string& source);
Polynomial parse_identity(const NamedIdentity& id);
// The same identity text parsed with a presentation's (symmetry-aware)
// signature, e.g. as a T-ideal membership candidate.
Polynomial parse_identity_with(const NamedIdentity& id, const Signature& sig);

const std::vector<std::string>& builtin_presentation_names();
OperadPresentation builtin_presentation(const std::string& name);
OperadPresentation load_presentation_json(const std::string& json_text);

struct WhiteCase {
    std::string name;
    OperadPresentation P, Q;
    std::vector<WhiteGenerator> gens;
};
const std::vector<std::string>& builtin_white_names();
WhiteCase builtin_white(const std::string& name);

// Dual dictionary for a presentation; synthesized with ops w0, w1, ... when
// no hand-named dictionary is registered.
DualDictionary dual_dictionary_for(const OperadPresentation& pres);

} // namespace gdop
