#pragma once

// Bridges between library types and the oracle representations.

#include "lie/rootsys.hpp"
#include "lie/weyl.hpp"
#include "oracles.hpp"

namespace support {

inline oracle::Cartan cartan_of(const lie::RootDatum& rd) { return rd.cartan(); }

inline oracle::Mat matrix_of(const oracle::Group& g, const lie::WeylElement& w,
                             const lie::RootDatum& rd) {
  return g.word(w.reduced_word(rd));
}

inline lie::RootDatum rd(char type, int rank) {
  return lie::build_root_system(lie::lie_type_from_char(type), rank);
}

}  // namespace support
