#pragma once

#include <optional>
#include <string_view>

namespace sbinet {

/// Mobility domain inferred from the node typings of a dataset pair.
enum class DomainClass { BicycleShare, Bus, Subway, Unknown };

std::string_view to_string(DomainClass domain);
std::optional<DomainClass> parse_domain(std::string_view text);

}  // namespace sbinet
