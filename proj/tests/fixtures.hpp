#pragma once

#include <string>

#include "pqs/input.hpp"
#include "pqs/surface.hpp"

namespace fixtures {

inline std::string data_path(const std::string& name)
{
  return std::string(PQS_DATA_DIR) + "/" + name;
}

inline pqs::InputDescription description(const std::string& name)
{
  return pqs::parse_description(pqs::read_file(data_path(name)));
}

inline pqs::SystemPair systems(const std::string& name)
{
  return pqs::build_systems(description(name));
}

inline pqs::SurfaceModel model(const std::string& name)
{
  auto p = systems(name);
  return pqs::build_surface_model(p.sys1, p.sys2);
}

inline const char* const kAll[] = {"beauville_55.pq", "z2_hyperelliptic.pq", "z2d4_c1sq6.pq",
                                   "z5_mixed.pq"};

} // namespace fixtures
