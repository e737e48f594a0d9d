#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "xmod/actor.hpp"
#include "xmod/base.hpp"
#include "xmod/crossed_module.hpp"

namespace xmod {

/// A crossed module together with the names used in its text form.
/// Bundle elements are namespaced as object:element.
struct XmodDocument {
    std::string name;  // empty when the file carries no name line
    CrossedModule xmod;
    std::vector<std::string> object_names;
    std::vector<std::string> arrow_names;
    std::vector<std::string> element_names;  // local part only
};

/// Parses the line-oriented schema (sections OBJECTS / ARROWS / COMP /
/// GROUPS / DELTA / ACTION after a `version 1` header). Throws
/// SyntaxError with a line position, or SemanticError for dangling ids,
/// duplicate ids and non-total tables. Structural axioms are not judged
/// here; the validators report those.
XmodDocument parse_xmod(std::string_view text);

/// Canonical text form; parse_xmod(serialize_xmod(d)) reproduces d.
std::string serialize_xmod(const XmodDocument& doc);

std::string element_display_name(const XmodDocument& doc, int element);

/// Machine-readable dump of a 2-crossed module (integer tables, fixed
/// section order), used for --emit and golden tests.
std::string serialize_two_crossed(const TwoCrossedModule& t);

XmodDocument load_xmod_file(const std::string& path);  // throws SemanticError on I/O

}  // namespace xmod
