#pragma once

#include "strata/filtered_complex.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace strata {

// Either a codimension table (GM style; presets fill every codimension, a
// user GM table leaves codimension 1 undefined) or explicit per-stratum
// values, or both: explicit values override the table.  Regular strata are
// always 0.
class Perversity {
 public:
  static constexpr int kMaxCodim = 64;

  static Perversity zero();
  static Perversity top();
  static Perversity lower_middle();
  static Perversity upper_middle();
  static Perversity preset(const std::string& name);  // zero, top, lower-middle, upper-middle
  // values p(2), ..., p(2 + values.size() - 1); must satisfy the GM conditions
  static Perversity gm(const std::vector<int>& values);
  static Perversity per_stratum(std::map<StratumKey, int> values, int formal_dim);
  // constant value c on every singular stratum (codimension table)
  static Perversity constant(int c);

  int value(const Stratum& s) const;
  int value(const FilteredComplex& x, int stratum_index) const { return value(x.strata()[stratum_index]); }

  // codimension table form satisfying p(2)=0 and p(i) <= p(i+1) <= p(i)+1
  bool is_gm() const;
  bool has_table() const { return has_table_; }
  const std::map<StratumKey, int>& overrides() const { return overrides_; }

  // explicit per-stratum values for every singular stratum of x
  Perversity bind(const FilteredComplex& x) const;

  std::string describe() const;
  bool operator==(const Perversity&) const = default;

  friend Perversity complement(const Perversity& p);
  friend Perversity add(const Perversity& p, const Perversity& q);
  friend Perversity subtract(const Perversity& p, const Perversity& q);

 private:
  bool has_table_ = false;
  std::vector<std::optional<int>> table_;  // index = codimension
  std::map<StratumKey, int> overrides_;
  int override_dim_ = -1;  // formal dimension the overrides refer to
};

// Dp = t - p
Perversity complement(const Perversity& p);
Perversity add(const Perversity& p, const Perversity& q);
Perversity subtract(const Perversity& p, const Perversity& q);
// stratum-wise p <= q on the strata of x
bool leq(const FilteredComplex& x, const Perversity& p, const Perversity& q);

// t(S) = codim S - 2 on singular strata
int top_value(int codim);

// Every per-stratum perversity with values lo..t(S)+above on each singular
// stratum, lexicographic in the order of x.strata() (first stratum slowest).
std::vector<Perversity> perversity_grid(const FilteredComplex& x, int lo = -2, int above = 2);

}  // namespace strata
