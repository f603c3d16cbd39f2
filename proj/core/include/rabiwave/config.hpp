#pragma once

#include <string>

#include "rabiwave/model.hpp"

namespace rabiwave {

/// Parses the flat `key = value` config format. Keys are named exactly after
/// SystemParams fields; `#` starts a comment; xi1/xi2 and chain_profile are
/// comma-separated lists (complex entries as `re`, `imi` or `re+imi`);
/// `l_max = auto` selects the Poisson-tail truncation. Unknown keys and
/// malformed values raise ConfigError naming the key.
SystemParams parse_config(const std::string& text);

/// Canonical round-trippable rendering of a parameter set.
std::string serialize_config(const SystemParams& p);

}  // namespace rabiwave
