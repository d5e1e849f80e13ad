#pragma once

#include "torusloops/polytope.hpp"

#include <string>
#include <vector>

namespace torusloops {

// Subsets of {1,2,3,4} are kept as sorted index lists.
using IndexSet = std::vector<int>;

IndexSet complement(const IndexSet& X);
std::string index_string(const IndexSet& X);  // {1,2,4} -> "124"
IndexSet parse_index_set(std::string_view s);
std::vector<IndexSet> all_subsets();

// Hirzebruch trapezoid with facets bottom, right, top, left:
// bottom F, right B+kF, top F, left B-kF.
DelzantPolytope hirzebruch(int k);

// A chain of corner blow-ups starting at one of the corners BL, TL, TR, BR of the
// trapezoid. The first blow-up sits on the corner itself; blow-up n+1 sits between
// blow-up n and the vertical side (mode 'v') or the horizontal side (mode 'h').
struct Chain {
  std::string corner;
  IndexSet idx;
  std::string modes;  // one letter per step after the first; missing letters mean 'v'
};

DelzantPolytope build_blowups(int k, const std::vector<Chain>& chains);

struct CatalogEntry {
  std::string name;
  std::vector<int> params;
  DelzantPolytope polytope;
  std::string x_name, y_name;
  std::string note;
};

// Names:
//   T_k [k]              T_0                   T_{k,X} [k, X...]
//   T_{k,4} [k]          T_{0,4}               T_1 (the toric action of z_1 and its partner)
//   T_{0,12}             Z14 (non-NEF pair z_{1,4}, s_{1,4})
//   NEF14                AUX14
//   C1 [X...] / C14 [X...]   (z_1, c_1) / (z_{1,X}, c_{1,X}); X defaults to {4}
//   AB1 [X...] / AB14 [X...] (a_1, b_1) / (a_{1,X}, b_{1,X}); X defaults to {4}
//   AUX1 [n, a,b,c,d] / AUX2 [n, a,b,c,d], n in 1..6; a..d default to 1,2,3,4
// Throws std::invalid_argument for an unknown name or bad parameters.
CatalogEntry catalog(const std::string& name, const std::vector<int>& params = {});
std::vector<std::string> catalog_names();

// Every entry with the parameters used by the test suites.
std::vector<CatalogEntry> catalog_instances();

std::string z_name(int k, const IndexSet& X);

}  // namespace torusloops
