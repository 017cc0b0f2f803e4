#pragma once

#include "strata/duality.hpp"
#include "strata/filtered_complex.hpp"
#include "strata/homology.hpp"
#include "strata/perversity.hpp"

#include "json.hpp"

#include <iosfwd>
#include <string>

namespace strata {

using Json = nlohmann::ordered_json;

FilteredComplex complex_from_json(const Json& j);
Json complex_to_json(const FilteredComplex& x);
// a JSON file, "recipe:<recipe>", or a bare library recipe such as sigma_rp2
FilteredComplex load_space(const std::string& arg);

// {"gm":[...]}, {"strata":[{"level","id","value"}]}, {"constant":c} or a
// preset name (as a string)
Perversity perversity_from_json(const Json& j, const FilteredComplex& x);
// preset name, inline JSON, or a JSON file
Perversity parse_perversity(const std::string& arg, const FilteredComplex& x);
Json perversity_to_json(const Perversity& p, const FilteredComplex& x);

Json to_json(const Integer& v);
Json to_json(const HomologyGroup& g);
Json to_json(const HomologySummary& h);
Json to_json(const DualityReport& r);
Json to_json(const PairingReport& r);
Json to_json(const WittReport& r);

// one "degree row col value" line per nonzero entry
void write_triplets(std::ostream& os, int degree, const SparseMatrix<Integer>& m);
void write_triplets(std::ostream& os, int degree, const std::vector<SparseVec<Integer>>& columns);

}  // namespace strata
