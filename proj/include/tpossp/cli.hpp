#pragma once

// Command-line front end. Implemented after the solver modules; this
// placeholder keeps the tool target building in the meantime.

#include <iostream>

namespace tpossp::cli {

inline int run(int, char**) {
  std::cerr << "tpossp: not yet wired\n";
  return 2;
}

}  // namespace tpossp::cli
