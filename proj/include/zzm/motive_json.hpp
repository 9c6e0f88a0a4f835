#pragma once

#include <string>
#include <vector>

#include "zzm/arrangement.hpp"
#include "zzm/superpotential.hpp"

namespace zzm {

// Interchange format, ids 1-based, rationals as [num, den]:
// {"edges":[{"id","s","t","vec"}], "sigma0":[[ids]], "sigma1":[[ids]],
//  "lattice":[[x,y],[x,y]], "lambda":[[a,b],[c,d]]}

std::string write_motive(const Superpotential& S);
/// Throws Syntax on malformed JSON or fields, Invariant when the cycles, the
/// listed endpoints or the edge vectors disagree with each other.
Superpotential read_motive(const std::string& text);

/// One {"mid","src","tgt","vec"} object per line.
std::string segments_jsonl(const std::vector<EdgeSegment>& segments);

}  // namespace zzm
