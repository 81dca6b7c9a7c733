#pragma once

// Per-vertex relation schemas. Each vertex kind (with optional variant) has a
// list of relator templates over slot letters; instantiation binds slots to
// edge indices. An atom is letter ['] [^-1]; a template is a triple relation
// <X, Y>, a commutator [X, Y], a two-sided relation U = V, or a bare word.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "word.hpp"

namespace galcov {

struct RelationSchema {
    std::string key;      // e.g. "two-point/a"
    std::string letters;  // slot letters in role order, e.g. "uv"
    std::vector<std::string> templates;
};

enum class RelatorKind { Branch, Node, Cusp, Plain };

struct InstantiatedRelator {
    RelatorKind kind;
    Word relator;      // freely reduced
    Word left, right;  // X,Y of <X,Y>/[X,Y] or U,V of U=V; empty for Plain
};

struct MissingSchema : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct RoleArityMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Generator id of edge j: 2j-1 plain, 2j primed.
inline int gen_id(int edge, bool primed) { return 2 * edge - (primed ? 0 : 1); }

const std::vector<RelationSchema>& schema_registry();

// Lookup by key; throws MissingSchema when absent.
const RelationSchema& find_schema(const std::string& key);

// Instantiate one template over a slot -> edge binding.
InstantiatedRelator instantiate(const std::string& tpl,
                                const std::map<std::string, int>& roles);

const char* relator_kind_name(RelatorKind k);

}  // namespace galcov
