#pragma once

#include <map>
#include <string>

namespace fixmahon::detail {

const std::map<std::string, std::string, std::less<>>& golden_tables();

}  // namespace fixmahon::detail
