#pragma once

#include <vector>

#include "croots/disc.hpp"

namespace croots {

struct Cluster {
  Disc disc;
  long multiplicity = 0;
};

}  // namespace croots
