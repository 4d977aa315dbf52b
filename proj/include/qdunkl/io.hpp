#pragma once

#include <iosfwd>

#include "qdunkl/quadrature.hpp"
#include "qdunkl/report.hpp"

namespace qdunkl {

// CSV serialization with header "x1,x2,w,x,y,z", one row per grid point in
// row-major (i, j) order, full double precision.
void write_csv(const SampledField& f, std::ostream& os);

// Reads values sampled on the supplied grid; node columns must match the
// grid's nodes within 1e-9 or GridMismatch is thrown.
SampledField read_csv(GridPtr grid, std::istream& is);

// JSON equivalent; the grid is regenerated from (chi1, chi2, N1, N2) on read.
json field_to_json(const SampledField& f);
SampledField field_from_json(const json& j);

} // namespace qdunkl
