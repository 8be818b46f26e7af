#ifndef ENRIQUES_SURFACE_HPP
#define ENRIQUES_SURFACE_HPP

#include <vector>

#include "enriques/ns_lattice.hpp"

namespace enriques {

// Ambient data for the existence predicates.  The ample class and the
// nodal-cycle list are user assertions: lattice arithmetic can check
// (H^2) > 0 and (D^2) = -2 but not ampleness or effectivity.
struct SurfaceContext {
  bool nodal = false;
  NSClass ample = sigma_class() + f_class();
  std::vector<NSClass> nodal_cycles{};
};

inline SurfaceContext make_surface_context(bool nodal, const NSClass& ample,
                                           std::vector<NSClass> cycles = {}) {
  if (ns_square(ample) <= Int(0))
    throw PreconditionError("surface context: ample class needs (H^2) > 0");
  if (!nodal && !cycles.empty())
    throw PreconditionError("surface context: nodal cycles given for an unnodal surface");
  for (const auto& d : cycles)
    if (ns_square(d) != Int(-2))
      throw PreconditionError("surface context: nodal cycle must have (D^2) = -2");
  return SurfaceContext{nodal, ample, std::move(cycles)};
}

}  // namespace enriques

#endif
