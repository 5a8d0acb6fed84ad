#include "multipath/functor.hpp"

namespace multipath {

TensorSpace space_for(std::size_t components, std::size_t dim_a, std::size_t dim_m) {
  TensorSpace t;
  if (components == 0) return t;
  t.factor_dims.assign(components, dim_a);
  t.factor_dims[0] = dim_m;
  return t;
}

TensorSpace space_for(const Digraph& g, EdgeSet h, std::size_t dim_a, std::size_t dim_m, Vertex base) {
  return space_for(component_labels(g, h, base).count, dim_a, dim_m);
}

}  // namespace multipath
