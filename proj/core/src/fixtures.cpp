#include "srkit/fixtures.hpp"

#include <stdexcept>
#include <string>

namespace srkit::fixtures {

Matrix a6() {
  return Matrix(6, 6,
                {
                    1, 0, 0, 1, 2, 0,  //
                    2, 1, 0, 2, 1, 0,  //
                    0, 2, 1, 0, 2, 1,  //
                    0, 2, 0, 1, 0, 0,  //
                    0, 1, 2, 3, 1, 0,  //
                    0, 0, 1, 0, 3, 1,  //
                });
}

Matrix a12() {
  return Matrix(12, 12,
                {
                    1, 5, 7, 9, 5, 1, 1, 3, 1, 3, 7, 2,  //
                    0, 1, 4, 6, 1, 2, 2, 1, 5, 4, 3, 5,  //
                    0, 0, 1, 2, 3, 2, 0, 0, 1, 2, 5, 3,  //
                    0, 0, 2, 1, 9, 8, 0, 0, 2, 1, 2, 4,  //
                    0, 0, 0, 2, 1, 3, 0, 0, 5, 2, 1, 2,  //
                    0, 0, 0, 4, 2, 1, 0, 0, 4, 3, 2, 1,  //
                    1, 4, 7, 2, 1, 3, 1, 7, 6, 1, 6, 7,  //
                    0, 1, 9, 3, 5, 1, 0, 1, 4, 5, 8, 3,  //
                    0, 0, 0, 2, 7, 9, 0, 0, 1, 3, 4, 5,  //
                    0, 0, 0, 1, 2, 8, 0, 0, 3, 1, 7, 3,  //
                    0, 0, 0, 2, 1, 2, 0, 0, 4, 3, 1, 2,  //
                    0, 0, 0, 9, 3, 1, 0, 0, 1, 2, 3, 1,  //
                });
}

Matrix by_name(std::string_view name) {
  if (name == "a6") return a6();
  if (name == "a12") return a12();
  throw std::invalid_argument("unknown fixture: " + std::string(name));
}

}  // namespace srkit::fixtures
