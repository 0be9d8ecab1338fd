#include "ldg/field.hpp"

#include <stdexcept>

namespace ldg {

Grid::Grid(int n_, double half_width_) : n(n_), half_width(half_width_) {
  if (n < 3 || n % 2 == 0) {
    throw std::invalid_argument("grid size must be odd and >= 3");
  }
  if (!(half_width > 0.0)) {
    throw std::invalid_argument("grid half width must be positive");
  }
}

}  // namespace ldg
