// A closed point of affine space presented by its residue field and exact
// coordinates in that field.
#ifndef GWDEG_POINT_HPP
#define GWDEG_POINT_HPP

#include <vector>

#include "gwdeg/field.hpp"

namespace gwdeg {

struct PointSpec {
  FieldDescriptor residue_field;
  std::vector<FieldElement> coords;  // each over residue_field
};

}  // namespace gwdeg

#endif
