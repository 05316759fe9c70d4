#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "zetalie/freelie.hpp"
#include "zetalie/p5split.hpp"
#include "zetalie/rational.hpp"

namespace zetalie::sda {

// An element D_f of the stable derivation algebra, carried by its defining
// Lie polynomial f on {x, y}.
struct Derivation {
  int weight = 0;
  std::vector<Rat> coords;        // Lyndon coordinates of f at this weight
  freelie::NcPoly f;              // tensor-algebra expansion
  std::vector<int> depth_profile; // number of nonzero Lyndon coords per y-degree 1..w
  Rat c_value;                    // coefficient of (ad x)^{w-1}(y)
};

struct WeightData {
  int weight = 0;
  std::vector<Derivation> basis;     // echelonized along the depth filtration
  std::vector<int> filtration_dims;  // dim F^m D_w for m = 1 .. w/2 + 1
  int dim() const { return static_cast<int>(basis.size()); }
};

// Which defining conditions to stack; used by the solver-equivalence tests.
struct ConditionSet {
  bool use_i = true;
  bool use_ii = true;
  bool use_ii_prime = false;
  bool use_iii = true;
};

struct IharaTakaoReport {
  // a [D_{f3}, D_{f9}] + b [D_{f5}, D_{f7}] in F^3 D_12, with f_w normalized
  // by c_w(f_w) = 1; (a : b) is the unique ratio, scaled primitive.
  Int a, b;
  bool both_in_f2 = false;
  bool combination_in_f3 = false;
  bool combination_in_f4 = false;
  bool unique_up_to_scale = false;
};

struct NzBoundTable {
  int max_weight = 0;
  // bound[m-1][w-1] = dim(D_w / F^{m+1} D_w) for m = 1..4; total[w-1] = dim D_w
  std::vector<std::vector<int>> bound;
  std::vector<int> total;
};

class Context {
 public:
  explicit Context(int threads = 1) : threads_(threads) {}

  // Exact basis of D_w, certified by full-row verification (see solve notes).
  const WeightData& weight_data(int w);

  // dim of the kernel of the selected condition stack (exact, certified).
  int solve_dimension(int w, const ConditionSet& conds);

  // Bracket in the stable derivation algebra: h = [f,g] + D_f(g) - D_g(f);
  // the result is re-verified against all defining conditions.
  Derivation bracket(const Derivation& a, const Derivation& b);

  Derivation derivation_from_coords(int w, const std::vector<Rat>& coords);

  // Does f (given by coords at weight w) satisfy the defining conditions?
  bool satisfies_conditions(int w, const std::vector<Rat>& coords);

  Rat c_functional(const Derivation& d) const;

  IharaTakaoReport ihara_takao();

  // Per-weight dims for w = 1..max (uses weight_data).
  std::vector<int> dimension_row(int max_weight);
  std::vector<std::vector<int>> filtration_table(int max_weight, int max_m);
  NzBoundTable nz_bounds(int max_weight);
  std::vector<Int> dprime_sequence(int max_weight);

  const p5::IiiColumns& iii_columns(int w);
  void drop_columns(int w);  // release the big arrays once a weight is done

  int threads() const { return threads_; }

 private:
  Derivation derivation_from_coords_internal(int w, const std::vector<Rat>& coords);

  int threads_ = 1;
  std::map<int, WeightData> solved_;
  std::map<int, std::shared_ptr<p5::IiiColumns>> cols_;
};

// The Dimension Conjecture sequence d_0..d_max from the recurrence
// d_w = d_{w-2} + d_{w-3}, d_0 = 1, d_1 = 0, d_2 = 1.
std::vector<Int> d_sequence(int max_weight);

// Closed form via the roots of x^3 - x - 1 at the given precision; returns
// per-w absolute deviation from the recurrence values.
std::vector<double> d_closed_form_deviation(int max_weight, long digits);

}  // namespace zetalie::sda
