#include "cutbat/bat.hpp"

#include <cassert>

namespace cutbat {

bool bat_next(NodeVector& x) {
  const std::uint64_t zeros = ~x.bits & x.coordinate_mask();
  if (zeros == 0) return true;
  const std::uint64_t lowest = zeros & (~zeros + 1);
  x.bits = (x.bits & ~(lowest - 1)) | lowest;
  return false;
}

EnumState spawn_son(const EnumState& parent, int iteration,
                    const Network& net) {
  assert(parent.alive);
  assert(iteration >= 1 && iteration <= parent.vector.width);
  assert(!parent.vector.get(iteration));

  const NodeId v = iteration + 1;
  EnumState son;
  son.vector = parent.vector;
  son.vector.set(iteration);
  son.s_side = parent.s_side | node_bit(v);
  son.edge_nodes =
      (parent.edge_nodes & ~node_bit(v)) | (net.neighbor_mask(v) & ~son.s_side);
  son.spawn_iteration = iteration;
  return son;
}

}  // namespace cutbat
