// Battery of checks behind `quadpre reproduce-paper`. Each claim carries the
// quoted statement it checks.

#pragma once

#include <string>
#include <vector>

namespace quadpre {

struct Claim {
  std::string anchor;
  std::string detail;
  bool passed = false;
};

std::vector<Claim> reproduce_battery();

}  // namespace quadpre
