#pragma once

#include <string>
#include <vector>

#include "clrp/constraints.hpp"
#include "clrp/polymatroid.hpp"

namespace clrp::catalog {

/// Names of the built-in coding networks, in listing order.
const std::vector<std::string>& network_names();

/// Built-in network by name; throws clrp::error on an unknown name.
NetworkInstance network(const std::string& name);

/// Names of the built-in access structures.
const std::vector<std::string>& access_names();

/// Built-in access structure by name; throws clrp::error on an unknown name.
AccessStructure access(const std::string& name);

/// Names of the built-in rank vectors.
const std::vector<std::string>& rank_vector_names();

/// Built-in rank vector by name; throws clrp::error on an unknown name.
RankVector rank_vector(const std::string& name);

/// True when any catalog entry answers to this name.
bool has_entry(const std::string& name);

/// The entry serialized in its native text format (network / access-structure
/// description, or a comma-separated rank vector); throws on an unknown name.
std::string dump(const std::string& name);

}  // namespace clrp::catalog
