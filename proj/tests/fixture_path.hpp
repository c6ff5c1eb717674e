#pragma once

#include "dupcat/quiver.hpp"

#include <string>

inline dupcat::Quiver fixture(const std::string& name)
{
    return dupcat::load_quiver(std::string(DUPCAT_FIXTURES) + "/" + name + ".quiver");
}
